#ifndef VPP_VPP_HPP
#define VPP_VPP_HPP

#include "polyring.hpp"
#include "ratfunc.hpp"
#include "formulas.hpp"
#include "exprdsl.hpp"
#include "catalog.hpp"
#include "verify.hpp"

#endif
