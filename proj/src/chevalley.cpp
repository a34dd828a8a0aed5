#include "chevalley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace epiwit {

namespace {
bool is_positive(const RootVec& r) {
  for (int v : r)
    if (v != 0) return v > 0;
  return false;
}
}  // namespace

int StructureConstants::chain_down(const RootVec& a, const RootVec& b) const {
  int k = 0;
  RootVec t = b;
  for (;;) {
    for (size_t i = 0; i < t.size(); ++i) t[i] -= a[i];
    if (!sys_.is_root(t)) break;
    ++k;
  }
  return k;
}

int StructureConstants::n_pos(const RootVec& a, const RootVec& b) const {
  auto ia = pos_index_.find(a), ib = pos_index_.find(b);
  if (ia == pos_index_.end() || ib == pos_index_.end())
    throw std::logic_error("n_pos: not positive roots");
  auto it = npos_.find({ia->second, ib->second});
  return it == npos_.end() ? 0 : it->second;
}

StructureConstants::StructureConstants(RootSystem sys) : sys_(std::move(sys)) {
  pos_ = sys_.positive_roots();
  for (size_t i = 0; i < pos_.size(); ++i) pos_index_[pos_[i]] = (int)i;

  // general N for pairs whose constituent positive pairs are already known;
  // used only with arguments of smaller height during the induction
  auto nmix = [&](const RootVec& g, const RootVec& d) -> int {
    RootVec s = add_vec(g, d);
    if (!sys_.is_root(s)) return 0;
    bool pg = is_positive(g), pd = is_positive(d);
    if (pg && pd) return n_pos(g, d);
    if (!pg && !pd) return -n_pos(negate(g), negate(d));
    // one of each sign; reduce to a positive pair via the cyclic identity
    // (a,a) N_{b,c} = (c,c) N_{a,b} for a + b + c = 0
    RootVec G = g, D = d;
    int sgn = 1;
    if (!pg) {  // antisymmetry puts the positive root first
      std::swap(G, D);
      sgn = -1;
    }
    RootVec mu = add_vec(G, D);
    if (!is_positive(mu)) {
      // N_{G,D} = N_{-D,-G}
      RootVec tmp = negate(D);
      D = negate(G);
      G = tmp;
      mu = negate(mu);
    }
    // now G > 0, D < 0, mu = G + D > 0; N_{G,D} = (mu,mu) N_{D,-mu} / (G,G)
    //                                           = -(mu,mu) N_{-D,mu} / (G,G)
    long long num = -(long long)sys_.norm2(mu) * n_pos(negate(D), mu);
    if (num % sys_.norm2(G) != 0) throw std::logic_error("nonintegral mixed constant");
    return sgn * (int)(num / sys_.norm2(G));
  };

  for (size_t gi = 0; gi < pos_.size(); ++gi) {
    const RootVec& g = pos_[gi];
    if (sys_.height(g) < 2) continue;
    // extraspecial pair: minimal xi in root order with g - xi a positive root
    int xi = -1;
    for (size_t k = 0; k < gi; ++k) {
      RootVec rest(g.size());
      for (size_t t = 0; t < g.size(); ++t) rest[t] = g[t] - pos_[k][t];
      if (pos_index_.count(rest)) {
        xi = (int)k;
        break;
      }
    }
    if (xi < 0) throw std::logic_error("no extraspecial pair");
    RootVec eta(g.size());
    for (size_t t = 0; t < g.size(); ++t) eta[t] = g[t] - pos_[xi][t];
    int ei = pos_index_[eta];
    int val = chain_down(pos_[xi], eta) + 1;
    npos_[{xi, ei}] = val;
    npos_[{ei, xi}] = -val;

    // remaining special pairs for g via the Jacobi identity with e_{-xi}
    int ngmx = nmix(g, negate(pos_[xi]));  // = N_{g,-xi}, lands on eta
    for (size_t ai = 0; ai < pos_.size(); ++ai) {
      const RootVec& a = pos_[ai];
      RootVec b(g.size());
      for (size_t t = 0; t < g.size(); ++t) b[t] = g[t] - a[t];
      auto bit = pos_index_.find(b);
      if (bit == pos_index_.end()) continue;
      int bi = bit->second;
      if ((int)ai >= bi) continue;                       // handle each pair once
      if ((int)ai == xi) continue;                       // extraspecial already set
      // 0 = [[e_{-xi}, e_a], e_b] + [[e_a, e_b], e_{-xi}] + [[e_b, e_{-xi}], e_a]
      RootVec mxi = negate(pos_[xi]);
      long long t1 = (long long)nmix(mxi, a) *
                     (sys_.is_root(add_vec(mxi, a)) ? nmix(add_vec(mxi, a), b) : 0);
      long long t3 = (long long)nmix(b, mxi) *
                     (sys_.is_root(add_vec(b, mxi)) ? nmix(add_vec(b, mxi), a) : 0);
      long long num = -(t1 + t3);
      if (ngmx == 0 || num % ngmx != 0) throw std::logic_error("special-pair recursion failed");
      int nab = (int)(num / ngmx);
      npos_[{(int)ai, bi}] = nab;
      npos_[{bi, (int)ai}] = -nab;
    }
  }
}

int StructureConstants::N(const RootVec& g, const RootVec& d) const {
  if (!sys_.is_root(g) || !sys_.is_root(d)) throw std::invalid_argument("N: not roots");
  RootVec s = add_vec(g, d);
  if (!sys_.is_root(s)) return 0;
  bool pg = is_positive(g), pd = is_positive(d);
  if (pg && pd) return n_pos(g, d);
  if (!pg && !pd) return -n_pos(negate(g), negate(d));
  RootVec G = g, D = d;
  int sgn = 1;
  if (!pg) {  // antisymmetry puts the positive root first
    std::swap(G, D);
    sgn = -1;
  }
  RootVec mu = add_vec(G, D);
  if (!is_positive(mu)) {
    // N_{G,D} = N_{-D,-G}
    RootVec tmp = negate(D);
    D = negate(G);
    G = tmp;
    mu = negate(mu);
  }
  long long num = -(long long)sys_.norm2(mu) * n_pos(negate(D), mu);
  if (num % sys_.norm2(G) != 0) throw std::logic_error("nonintegral mixed constant");
  return sgn * (int)(num / sys_.norm2(G));
}

bool StructureConstants::roots_commute(const RootVec& g, const RootVec& d) const {
  if (g == d || g == negate(d)) throw std::invalid_argument("roots_commute: g = +-d");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      RootVec s(g.size());
      for (size_t t = 0; t < g.size(); ++t) s[t] = i * g[t] + j * d[t];
      if (sys_.is_root(s)) return false;
    }
  return true;
}

std::vector<StructureConstants::CommTerm> StructureConstants::commutator_terms(
    const RootVec& g, const RootVec& d) const {
  if (g == d || g == negate(d)) throw std::invalid_argument("commutator_terms: g = +-d");
  // M(a, b, i) = (1/i!) N_{a,b} N_{a,a+b} ... N_{a,(i-1)a+b}
  auto M = [&](const RootVec& a, const RootVec& b, int i) -> long long {
    long long prod = 1;
    RootVec cur = b;
    for (int k = 0; k < i; ++k) {
      prod *= N(a, cur);
      cur = add_vec(cur, a);
    }
    long long fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    if (prod % fact != 0) throw std::logic_error("nonintegral commutator coefficient");
    return prod / fact;
  };
  std::vector<CommTerm> out;
  for (int total = 2; total <= 5; ++total)
    for (int i = 1; i < total; ++i) {
      int j = total - i;
      if (i > 3 || j > 3) continue;
      RootVec s(g.size());
      for (size_t t = 0; t < g.size(); ++t) s[t] = i * g[t] + j * d[t];
      if (!sys_.is_root(s)) continue;
      long long c = 0;
      if (j == 1)
        c = -M(g, d, i);
      else if (i == 1)
        c = (j % 2 == 0 ? -1 : 1) * M(d, g, j);
      else if (i == 3 && j == 2)
        c = 2 * M(add_vec(g, d), g, 2) / 3;
      else if (i == 2 && j == 3)
        c = -M(add_vec(g, d), d, 2) / 3;
      else
        throw std::logic_error("unexpected commutator support");
      out.push_back({s, i, j, c});
    }
  return out;
}

int StructureConstants::basis_index(const RootVec& g) const {
  int i = sys_.root_index(g);
  if (i < 0) throw std::invalid_argument("basis_index: not a root");
  return i;
}

std::vector<long long> StructureConstants::bracket_basis(int i, int j) const {
  int nr = (int)sys_.roots().size(), l = sys_.rank();
  std::vector<long long> out(nr + l, 0);
  if (i >= nr && j >= nr) return out;  // [h, h] = 0
  if (i >= nr || j >= nr) {
    // [h_k, e_g] = <g, a_k~> e_g
    bool hfirst = i >= nr;
    int k = hfirst ? i - nr : j - nr;
    const RootVec& g = sys_.roots()[hfirst ? j : i];
    long long c = sys_.pairing(g, sys_.simple_root(k));
    out[hfirst ? j : i] = hfirst ? c : -c;
    return out;
  }
  const RootVec& g = sys_.roots()[i];
  const RootVec& d = sys_.roots()[j];
  if (d == negate(g)) {
    auto cc = sys_.coroot_coords(g);
    for (int k = 0; k < l; ++k) out[nr + k] = cc[k];
    return out;
  }
  RootVec s = add_vec(g, d);
  if (sys_.is_root(s)) out[sys_.root_index(s)] = N(g, d);
  return out;
}

std::vector<std::vector<long long>> StructureConstants::ad_matrix(const RootVec& g) const {
  int n = adjoint_dim();
  int gi = basis_index(g);
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    auto col = bracket_basis(gi, j);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

Mat StructureConstants::adjoint_element(const FieldPtr& F, const RootVec& g, FF t) const {
  int n = adjoint_dim();
  auto ad = ad_matrix(g);
  // powers of ad e_g with exact division by k!
  std::vector<std::vector<long long>> pw(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) pw[i][i] = 1;
  Mat out = Mat::identity(F, n);
  long long fact = 1;
  for (int k = 1;; ++k) {
    std::vector<std::vector<long long>> nx(n, std::vector<long long>(n, 0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int q = 0; q < n; ++q) s += ad[i][q] * pw[q][j];
        nx[i][j] = s;
        if (s != 0) nonzero = true;
      }
    if (!nonzero) break;
    pw = std::move(nx);
    fact *= k;
    FF tk = F->pow(t, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (pw[i][j] % fact != 0) throw std::logic_error("adjoint divided power not integral");
        long long v = pw[i][j] / fact;
        out.at(i, j) = F->add(out.at(i, j), F->mul(tk, F->from_int(v)));
      }
    if (k > 64) throw std::logic_error("ad e_g not nilpotent?");
  }
  return out;
}

std::vector<long long> weight_tuple(const RootSystem& sys, const CocharacterWeighting& cw,
                                    const RootVec& g) {
  std::vector<long long> out;
  out.reserve(cw.factors.size());
  for (const auto& f : cw.factors) {
    long long v = 0;
    for (const auto& [r, c] : f.coroots) v += (long long)c * sys.pairing(g, r);
    out.push_back(v);
  }
  return out;
}

long long torus_weight(const RootSystem& sys, const CocharacterWeighting& cw, const RootVec& g) {
  auto t = weight_tuple(sys, cw, g);
  long long w = 0;
  for (size_t i = 0; i < t.size(); ++i) w += cw.factors[i].twist * t[i];
  return w;
}

std::vector<RootVec> find_roots_with_torus_weight(const RootSystem& sys,
                                                  const CocharacterWeighting& cw,
                                                  const std::vector<long long>& target) {
  std::vector<RootVec> out;
  for (const auto& r : sys.roots())
    if (weight_tuple(sys, cw, r) == target) out.push_back(r);
  return out;
}

int ad_closure_dim(const FieldPtr& F, const std::vector<std::vector<FF>>& seeds,
                   const std::vector<Mat>& ops) {
  if (seeds.empty()) return 0;
  int n = (int)seeds[0].size();
  for (const auto& op : ops)
    if (op.rows != n || op.cols != n) throw std::invalid_argument("ad_closure_dim: size mismatch");
  RowSpace rs(F, n);
  std::vector<std::vector<FF>> work;
  for (auto v : seeds)
    if (rs.insert(v)) work.push_back(v);
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (const auto& op : ops) {
      std::vector<FF> img(n, 0);
      for (int i = 0; i < n; ++i) {
        FF s = 0;
        for (int j = 0; j < n; ++j) s = F->add(s, F->mul(op.at(i, j), v[j]));
        img[i] = s;
      }
      if (rs.insert(img)) work.push_back(img);
    }
  }
  return rs.rank();
}

}  // namespace epiwit
