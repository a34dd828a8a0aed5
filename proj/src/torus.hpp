#pragma once
// Cocharacter exponent matrices for the three one-parameter torus families
// and their exact nonsingularity certificates.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace epiwit {

using BigInt = boost::multiprecision::cpp_int;

enum class TorusFamily { S, SPrime, SDoublePrime };

TorusFamily torus_family_from_string(const std::string& s);  // "s", "s'", "s''"
std::string torus_family_to_string(TorusFamily f);

struct ExponentMatrix {
  TorusFamily family;
  int r = 0;
  long long p = 0;
  std::vector<long long> a;
  std::vector<std::vector<BigInt>> entries;  // r x r
};

// Row i gives the chi_j exponents of the family element at twist a_i.
// family s:  entry(i,j) = p^{a_i (j-1)}.
// family s' (r even): column pair (2j-1, 2j) = (p^{a_i(2j-2)} + p^{a_i(2j-1)},
//                                              -p^{a_i(2j-2)} + p^{a_i(2j-1)}).
// family s'' (r odd): the s' pairs on the first r-1 columns, last column
//                     p^{a_i(r-1)}.
ExponentMatrix exponent_matrix(TorusFamily family, int r, long long p,
                               const std::vector<long long>& a);

// Exact determinant (fraction-free elimination); nonsingular iff det != 0.
BigInt det_exact(std::vector<std::vector<BigInt>> m);

struct DensityCertificate {
  bool nonsingular = false;
  BigInt det;
};

DensityCertificate density_certificate(const ExponentMatrix& m);

}  // namespace epiwit
