#include "repmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace epiwit {

ClassicalModel make_classical(char letter, int rank, FieldPtr F) {
  ClassicalModel m;
  m.letter = letter;
  m.rank = rank;
  m.sys = RootSystem::build(letter, rank);
  m.F = std::move(F);
  switch (letter) {
    case 'A': m.n = rank + 1; break;
    case 'B': m.n = 2 * rank + 1; break;
    case 'C':
    case 'D': m.n = 2 * rank; break;
    default: throw std::invalid_argument("make_classical: not a classical type");
  }
  return m;
}

std::vector<int> ClassicalModel::eps_weight(int basis) const {
  if (letter == 'A') {
    std::vector<int> w(rank + 1, 0);
    w[basis] = 1;
    return w;
  }
  std::vector<int> w(rank, 0);
  if (basis == v0()) return w;
  if (basis < rank)
    w[basis] = 1;  // e_{basis+1}
  else
    w[n - 1 - basis] = -1;  // f_{n - basis}
  return w;
}

std::vector<int> ClassicalModel::root_eps(const RootVec& g) const {
  int dim = letter == 'A' ? rank + 1 : rank;
  std::vector<int> w(dim, 0);
  for (int i = 0; i < rank; ++i) {
    if (g[i] == 0) continue;
    int c = g[i];
    if (letter == 'A') {
      w[i] += c;
      w[i + 1] -= c;
    } else if (i + 1 < rank) {
      w[i] += c;
      w[i + 1] -= c;
    } else if (letter == 'B') {
      w[i] += c;
    } else if (letter == 'C') {
      w[i] += 2 * c;
    } else {  // D
      w[i - 1] += c;
      w[i] += c;
    }
  }
  return w;
}

namespace {
// linear (t) and quadratic (t^2) coefficient matrices of x_g(t)
void root_element_parts(const ClassicalModel& M, const RootVec& g,
                        std::vector<std::vector<long long>>& lin,
                        std::vector<std::vector<long long>>& quad) {
  int n = M.n;
  lin.assign(n, std::vector<long long>(n, 0));
  quad.assign(n, std::vector<long long>(n, 0));
  auto w = M.root_eps(g);
  if (M.letter == 'A') {
    int a = -1, b = -1;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 1) a = (int)i;
      if (w[i] == -1) b = (int)i;
    }
    if (a < 0 || b < 0) throw std::invalid_argument("root_element: bad root");
    lin[a][b] = 1;
    return;
  }
  // collect +-1 / +-2 positions (1-based hyperbolic indices)
  std::vector<int> plus, minus;
  int two = 0, mtwo = 0;
  for (int i = 0; i < M.rank; ++i) {
    if (w[i] == 1) plus.push_back(i + 1);
    if (w[i] == -1) minus.push_back(i + 1);
    if (w[i] == 2) two = i + 1;
    if (w[i] == -2) mtwo = i + 1;
  }
  if (two) {  // 2 eps_i (type C)
    lin[M.e(two)][M.f(two)] = 1;
    return;
  }
  if (mtwo) {
    lin[M.f(mtwo)][M.e(mtwo)] = 1;
    return;
  }
  if (plus.size() == 1 && minus.size() == 1) {  // eps_i - eps_j
    int i = plus[0], j = minus[0];
    lin[M.e(i)][M.e(j)] = 1;
    lin[M.f(j)][M.f(i)] = -1;
    return;
  }
  if (plus.size() == 2) {  // eps_i + eps_j, i < j
    int i = plus[0], j = plus[1];
    lin[M.e(i)][M.f(j)] = 1;
    lin[M.e(j)][M.f(i)] = (M.letter == 'C') ? 1 : -1;
    return;
  }
  if (minus.size() == 2) {  // -(eps_i + eps_j)
    int i = minus[0], j = minus[1];
    lin[M.f(j)][M.e(i)] = 1;
    lin[M.f(i)][M.e(j)] = (M.letter == 'C') ? 1 : -1;
    return;
  }
  if (M.letter == 'B' && plus.size() == 1 && minus.empty()) {  // eps_i
    int i = plus[0];
    // f_i -> f_i + t v0 - t^2 e_i;  v0 -> v0 - 2 t e_i
    lin[M.v0()][M.f(i)] = 1;
    lin[M.e(i)][M.v0()] = -2;
    quad[M.e(i)][M.f(i)] = -1;
    return;
  }
  if (M.letter == 'B' && minus.size() == 1 && plus.empty()) {  // -eps_i
    int i = minus[0];
    lin[M.v0()][M.e(i)] = 1;
    lin[M.f(i)][M.v0()] = -2;
    quad[M.f(i)][M.e(i)] = -1;
    return;
  }
  throw std::invalid_argument("root_element: bad root");
}
}  // namespace

Mat ClassicalModel::root_element(const RootVec& g, FF t) const {
  if (!sys.is_root(g)) throw std::invalid_argument("root_element: not a root");
  std::vector<std::vector<long long>> lin, quad;
  root_element_parts(*this, g, lin, quad);
  Mat m = Mat::identity(F, n);
  FF t2 = F->mul(t, t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (lin[i][j]) m.at(i, j) = F->add(m.at(i, j), F->mul(t, F->from_int(lin[i][j])));
      if (quad[i][j]) m.at(i, j) = F->add(m.at(i, j), F->mul(t2, F->from_int(quad[i][j])));
    }
  return m;
}

Mat ClassicalModel::unip_product(const std::vector<Factor>& factors, FF t) const {
  Mat m = Mat::identity(F, n);
  for (const auto& fac : factors) {
    FF par = F->mul(F->from_int(fac.coeff), F->pow(t, fac.exp));
    m = mat_mul(m, root_element(fac.root, par));
  }
  return m;
}

Mat ClassicalModel::torus_element(const CocharacterWeighting& cw, FF c) const {
  if (c == F->zero()) throw std::invalid_argument("torus_element: c must be nonzero");
  Mat m(F, n, n);
  for (int b = 0; b < n; ++b) {
    auto w = eps_weight(b);
    long long k = 0;
    for (const auto& fac : cw.factors) {
      long long t = 0;
      for (const auto& [r, co] : fac.coroots) {
        auto re = root_eps(r);
        long long dot = 0, nn = 0;
        for (size_t i = 0; i < re.size(); ++i) {
          dot += (long long)w[i] * re[i];
          nn += (long long)re[i] * re[i];
        }
        if ((2 * dot) % nn != 0) throw std::logic_error("torus_element: nonintegral pairing");
        t += co * (2 * dot / nn);
      }
      k += fac.twist * t;
    }
    m.at(b, b) = k >= 0 ? F->pow(c, (uint64_t)k) : F->pow(F->inv(c), (uint64_t)(-k));
  }
  return m;
}

Mat ClassicalModel::bilinear_form() const {
  if (!has_bilinear()) throw std::logic_error("no bilinear form for SL");
  Mat b(F, n, n);
  for (int i = 1; i <= rank; ++i) {
    b.at(e(i), f(i)) = F->one();
    b.at(f(i), e(i)) = letter == 'C' ? F->neg(F->one()) : F->one();
  }
  if (letter == 'B') b.at(v0(), v0()) = F->from_int(2);
  return b;
}

FF ClassicalModel::quad_eval(const std::vector<FF>& v) const {
  if (!has_quadratic()) throw std::logic_error("no quadratic form");
  FF q = F->zero();
  for (int i = 1; i <= rank; ++i) q = F->add(q, F->mul(v[e(i)], v[f(i)]));
  if (letter == 'B') q = F->add(q, F->mul(v[v0()], v[v0()]));
  return q;
}

bool ClassicalModel::preserves_forms(const Mat& g) const {
  if (!has_bilinear()) return true;
  Mat b = bilinear_form();
  if (mat_mul(mat_transpose(g), mat_mul(b, g)) != b) return false;
  if (has_quadratic()) {
    for (int k = 0; k < n; ++k) {
      std::vector<FF> col(n);
      for (int i = 0; i < n; ++i) col[i] = g.at(i, k);
      std::vector<FF> basis(n, F->zero());
      basis[k] = F->one();
      if (quad_eval(col) != quad_eval(basis)) return false;
    }
  }
  return true;
}

int burnside_span_dim(const std::vector<Mat>& gens) { return algebra_span_dim(gens); }

std::vector<int> jordan_type(const Mat& u) {
  Mat nil = mat_sub(u, Mat::identity(u.F, u.rows));
  Mat pw = nil;
  for (int k = 1; k <= u.rows; ++k) pw = mat_mul(pw, nil);
  for (FF v : pw.a)
    if (v != 0) throw std::invalid_argument("jordan_type: matrix is not unipotent");
  return unipotent_jordan_type(u);
}

bool normalizes(const std::vector<Mat>& bgens, const std::function<Mat(FF)>& y,
                const FieldPtr& F, const std::vector<FF>& samples) {
  if (F->q() > (1u << 16)) throw std::invalid_argument("normalizes: field too large to scan");
  for (const auto& b : bgens) {
    Mat binv = mat_inverse(b);
    for (FF u : samples) {
      Mat z = mat_mul(b, mat_mul(y(u), binv));
      bool found = false;
      for (FF up = 0; up < F->q() && !found; ++up) found = (y(up) == z);
      if (!found) return false;
    }
  }
  return true;
}

const Mat& MatrixRep::get(const std::string& name) const {
  for (const auto& [k, m] : gens)
    if (k == name) return m;
  throw std::out_of_range("MatrixRep: no generator " + name);
}

std::vector<long long> principal_weights(const ClassicalModel& m) {
  std::vector<long long> w(m.n, 0);
  int l = m.rank;
  switch (m.letter) {
    case 'A':
      for (int a = 0; a < m.n; ++a) w[a] = l - 2 * a;
      break;
    case 'C':
      for (int i = 1; i <= l; ++i) {
        w[m.e(i)] = 2 * (l - i) + 1;
        w[m.f(i)] = -(2 * (l - i) + 1);
      }
      break;
    case 'B':
      for (int i = 1; i <= l; ++i) {
        w[m.e(i)] = 2 * (l - i + 1);
        w[m.f(i)] = -2 * (l - i + 1);
      }
      break;
    case 'D':
      for (int i = 1; i <= l; ++i) {
        w[m.e(i)] = 2 * (l - i);
        w[m.f(i)] = -2 * (l - i);
      }
      break;
  }
  return w;
}

MatrixRep principal_a1(const ClassicalModel& m) {
  long long p = m.F->p();
  if (p < m.sys.coxeter_number())
    throw std::invalid_argument("principal_a1: requires p >= coxeter number");
  int n = m.n;
  // regular nilpotent = sum of simple-root Lie elements
  std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
  for (int i = 0; i < m.rank; ++i) {
    std::vector<std::vector<long long>> lin, quad;
    root_element_parts(m, m.sys.simple_root(i), lin, quad);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) e[r][c] += lin[r][c];
  }
  // x(1) = exp(e_reg); since the nilpotency degree is < p, each k! is
  // invertible in the field and the series truncates
  Mat x = Mat::identity(m.F, n);
  std::vector<std::vector<long long>> pw(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) pw[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<long long>> nx(n, std::vector<long long>(n, 0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int q = 0; q < n; ++q) s += e[i][q] * pw[q][j];
        nx[i][j] = s;
        if (s) nonzero = true;
      }
    if (!nonzero) break;
    if (k >= p) throw std::invalid_argument("principal_a1: nilpotency degree >= p");
    pw = std::move(nx);
    FF invfact = m.F->one();
    for (long long d = 2; d <= k; ++d) invfact = m.F->mul(invfact, m.F->from_int(d));
    invfact = m.F->inv(invfact);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        x.at(i, j) =
            m.F->add(x.at(i, j), m.F->mul(invfact, m.F->from_int(pw[i][j])));
  }
  Mat h(m.F, n, n);
  auto wts = principal_weights(m);
  FF g = m.F->gen();
  for (int i = 0; i < n; ++i)
    h.at(i, i) = wts[i] >= 0 ? m.F->pow(g, (uint64_t)wts[i])
                             : m.F->pow(m.F->inv(g), (uint64_t)(-wts[i]));
  MatrixRep rep;
  rep.F = m.F;
  rep.gens.push_back({"x", x});
  rep.gens.push_back({"h", h});
  return rep;
}

}  // namespace epiwit
