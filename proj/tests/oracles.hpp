#ifndef VPP_TESTS_ORACLES_HPP
#define VPP_TESTS_ORACLES_HPP

#include <string>
#include <vector>

// Frozen coefficient lists, ascending degree, computed independently with a
// general-purpose computer algebra system.
namespace oracles
{

// two elliptic components: (1+2t+t^2)^2 (1+t^2+t^4+t^6)
inline const std::vector<std::string> kUcMain11{"1", "4", "7", "8", "8", "8", "8", "8", "7", "4", "1"};

// genus 4, split (2, 2)
inline const std::vector<std::string> kFDiff22{"0", "0", "0", "0", "0", "40", "320", "1160", "2585", "4112", "5116", "5088", "3788", "1696", "-156", "-1104", "-1186", "-784", "-316", "-32", "60", "56", "28", "8", "1"};

// genus 4, split (1, 3)
inline const std::vector<std::string> kFDiff13{"0", "0", "0", "0", "0", "28", "224", "812", "1820", "2966", "3904", "4254", "3612", "2086", "432", "-674", "-1068", "-926", "-576", "-294", "-140", "-58", "-16", "-2"};

// odd-degree moduli, g = 2
inline const std::vector<std::string> kNewsteadOdd2{"1", "4", "7", "12", "24", "32", "24", "12", "7", "4", "1"};

// even-degree moduli, g = 2
inline const std::vector<std::string> kEvenDegree2{"1", "4", "7", "8", "8", "8", "8", "8", "7", "4", "1"};

// S polynomial, g = 2
inline const std::vector<std::string> kS2{"1", "-2", "4", "-2", "1"};

// U polynomial, g = 2
inline const std::vector<std::string> kU2{"1", "0", "1", "0", "1", "0", "1"};

// odd-degree moduli, g = 3
inline const std::vector<std::string> kNewsteadOdd3{"1", "6", "16", "32", "68", "134", "218", "328", "465", "536", "465", "328", "218", "134", "68", "32", "16", "6", "1"};

// even-degree moduli, g = 3
inline const std::vector<std::string> kEvenDegree3{"1", "6", "16", "26", "31", "18", "-51", "-172", "-233", "-152", "-1", "114", "153", "122", "67", "32", "16", "6", "1"};

// S polynomial, g = 3
inline const std::vector<std::string> kS3{"1", "-4", "11", "-18", "23", "-18", "11", "-4", "1"};

// U polynomial, g = 3
inline const std::vector<std::string> kU3{"1", "0", "1", "0", "1", "-14", "2", "0", "1", "6", "1", "0", "1"};

// Kirwan M2 term, g = 3
inline const std::vector<std::string> kKirwanM2_3{"1", "6", "18", "44", "115", "276", "522", "794", "1024", "1120", "1024", "794", "522", "276", "115", "44", "18", "6", "1"};

// D1 term, g = 3
inline const std::vector<std::string> kD1_3{"1", "6", "17", "32", "48", "64", "79", "90", "94", "90", "79", "64", "48", "32", "17", "6", "1"};

// D2 minus D1 term, g = 3
inline const std::vector<std::string> kD2MinusD1_3{"0", "0", "15", "96", "291", "590", "946", "1272", "1418", "1292", "976", "622", "322", "122", "31", "6", "1"};

// Gr(2, 4)
inline const std::vector<std::string> kGrassmannian2_4{"1", "0", "1", "0", "2", "0", "1", "0", "1"};

} // namespace oracles

#endif
