#include "torus.hpp"

#include <set>
#include <stdexcept>

namespace epiwit {

TorusFamily torus_family_from_string(const std::string& s) {
  if (s == "s") return TorusFamily::S;
  if (s == "s'") return TorusFamily::SPrime;
  if (s == "s''") return TorusFamily::SDoublePrime;
  throw std::invalid_argument("unknown torus family: " + s);
}

std::string torus_family_to_string(TorusFamily f) {
  switch (f) {
    case TorusFamily::S: return "s";
    case TorusFamily::SPrime: return "s'";
    case TorusFamily::SDoublePrime: return "s''";
  }
  throw std::logic_error("bad family");
}

static BigInt ipow(long long p, long long e) {
  BigInt r = 1, b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

ExponentMatrix exponent_matrix(TorusFamily family, int r, long long p,
                               const std::vector<long long>& a) {
  if (r < 1 || (int)a.size() != r) throw std::invalid_argument("exponent_matrix: bad r/a_list");
  if (p < 2) throw std::invalid_argument("exponent_matrix: bad p");
  std::set<long long> distinct(a.begin(), a.end());
  if ((int)distinct.size() != r || *distinct.begin() < 1)
    throw std::invalid_argument("exponent_matrix: a_list must be distinct positive");
  if (family == TorusFamily::SPrime && r % 2 != 0)
    throw std::invalid_argument("family s' requires even r");
  if (family == TorusFamily::SDoublePrime && r % 2 != 1)
    throw std::invalid_argument("family s'' requires odd r");

  ExponentMatrix m;
  m.family = family;
  m.r = r;
  m.p = p;
  m.a = a;
  m.entries.assign(r, std::vector<BigInt>(r, 0));
  for (int i = 0; i < r; ++i) {
    int paired = (family == TorusFamily::S) ? 0 : (family == TorusFamily::SPrime ? r : r - 1);
    for (int j = 0; j < paired; j += 2) {
      BigInt lo = ipow(p, a[i] * j), hi = ipow(p, a[i] * (j + 1));
      m.entries[i][j] = lo + hi;
      m.entries[i][j + 1] = hi - lo;
    }
    for (int j = paired; j < r; ++j) m.entries[i][j] = ipow(p, a[i] * j);
  }
  return m;
}

BigInt det_exact(std::vector<std::vector<BigInt>> m) {
  int n = (int)m.size();
  for (const auto& row : m)
    if ((int)row.size() != n) throw std::invalid_argument("det_exact: not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

DensityCertificate density_certificate(const ExponentMatrix& m) {
  DensityCertificate c;
  c.det = det_exact(m.entries);
  c.nonsingular = (c.det != 0);
  return c;
}

}  // namespace epiwit
