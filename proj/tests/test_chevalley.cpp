#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "chevalley.hpp"

using namespace epiwit;

namespace {

// independent chain-length oracle: |N_{a,b}| = (down-length of the a-string
// through b) + 1
int chain_down_oracle(const RootSystem& s, const RootVec& a, const RootVec& b) {
  int k = 0;
  RootVec t = b;
  for (;;) {
    for (size_t i = 0; i < t.size(); ++i) t[i] -= a[i];
    if (!s.is_root(t)) break;
    ++k;
  }
  return k;
}

// sparse integral bracket tables for Jacobi checks
struct BracketTable {
  int n;
  std::vector<std::vector<std::vector<std::pair<int, long long>>>> t;  // t[i][j] = sparse vec
  explicit BracketTable(const StructureConstants& sc) {
    n = sc.adjoint_dim();
    t.assign(n, std::vector<std::vector<std::pair<int, long long>>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto v = sc.bracket_basis(i, j);
        for (int k = 0; k < n; ++k)
          if (v[k] != 0) t[i][j].push_back({k, v[k]});
      }
  }
  // [b_i, w] for sparse w
  std::vector<std::pair<int, long long>> apply(int i,
                                               const std::vector<std::pair<int, long long>>& w) const {
    std::map<int, long long> acc;
    for (auto [q, c] : w)
      for (auto [k, d] : t[i][q]) acc[k] += c * d;
    std::vector<std::pair<int, long long>> out;
    for (auto [k, v] : acc)
      if (v != 0) out.push_back({k, v});
    return out;
  }
};

void check_jacobi(const StructureConstants& sc, bool exhaustive, int samples = 10000) {
  BracketTable bt(sc);
  int n = bt.n;
  std::mt19937 rng(12345);
  auto one_triple = [&](int i, int j, int k) {
    std::map<int, long long> acc;
    auto add = [&](int a, const std::vector<std::pair<int, long long>>& w) {
      for (auto [q, c] : bt.apply(a, w)) acc[q] += c;
    };
    add(i, bt.t[j][k]);
    add(j, bt.t[k][i]);
    add(k, bt.t[i][j]);
    for (auto [q, v] : acc) REQUIRE(v == 0);
  };
  if (exhaustive) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) one_triple(i, j, k);
  } else {
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int s = 0; s < samples; ++s) one_triple(d(rng), d(rng), d(rng));
  }
}

}  // namespace

TEST_CASE("structure constants: antisymmetry and chain-length magnitudes") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    auto s = RootSystem::build(t, l);
    StructureConstants sc(s);
    for (const auto& g : s.roots())
      for (const auto& d : s.roots()) {
        if (g == d || g == negate(d)) continue;
        int n = sc.N(g, d);
        CHECK(n == -sc.N(d, g));
        if (s.is_root(add_vec(g, d)))
          CHECK(std::abs(n) == chain_down_oracle(s, g, d) + 1);
        else
          CHECK(n == 0);
      }
  }
}

TEST_CASE("structure constants: specific magnitudes") {
  auto a2 = RootSystem::build('A', 2);
  StructureConstants sa(a2);
  CHECK(std::abs(sa.N({1, 0}, {0, 1})) == 1);
  CHECK(sa.N({1, 0}, {1, 0}) == 0);  // 2g never a root

  auto c3 = RootSystem::build('C', 3);
  StructureConstants scc(c3);
  // a2-string through 011 in C3 goes down to 001, so |N| = 2
  CHECK(std::abs(scc.N({0, 1, 0}, {0, 1, 1})) == 2);

  auto g2 = RootSystem::build('G', 2);
  StructureConstants sg(g2);
  CHECK(std::abs(sg.N({1, 0}, {2, 1})) == 3);  // a1-string through 21 has down-length 2
}

TEST_CASE("Jacobi identity holds on the integral Chevalley basis") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}})
    check_jacobi(StructureConstants(RootSystem::build(t, l)), true);
  check_jacobi(StructureConstants(RootSystem::build('F', 4)), false);
  check_jacobi(StructureConstants(RootSystem::build('D', 4)), false);
  check_jacobi(StructureConstants(RootSystem::build('E', 6)), false);
}

TEST_CASE("roots_commute") {
  auto f4 = RootSystem::build('F', 4);
  StructureConstants sf(f4);
  CHECK(sf.roots_commute({1, 2, 2, 1}, {1, 3, 4, 2}));
  auto a2 = RootSystem::build('A', 2);
  StructureConstants sa(a2);
  CHECK_FALSE(sa.roots_commute({1, 0}, {0, 1}));
  CHECK_THROWS(sa.roots_commute({1, 0}, {1, 0}));
  CHECK_THROWS(sa.roots_commute({1, 0}, {-1, 0}));
  // orthogonal pair in D4 commutes
  auto d4 = RootSystem::build('D', 4);
  StructureConstants sd(d4);
  CHECK(sd.roots_commute({1, 0, 0, 0}, {0, 0, 1, 0}));
  // oracle cross-check: commuting iff adjoint matrices commute (below)
}

TEST_CASE("commutator formula matches the matrix oracle") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    auto s = RootSystem::build(t, l);
    StructureConstants sc(s);
    for (long long p : {2, 3, 5, 7}) {
      auto F = make_field(p, 1);
      // a few sample parameter values
      std::vector<std::pair<FF, FF>> pts = {{F->one(), F->one()},
                                            {F->from_int(2), F->one()},
                                            {F->from_int(p - 1), F->from_int(2)}};
      for (const auto& g : s.roots())
        for (const auto& d : s.roots()) {
          if (g == d || g == negate(d)) continue;
          auto terms = sc.commutator_terms(g, d);
          for (auto [tv, uv] : pts) {
            Mat xg = sc.adjoint_element(F, g, tv);
            Mat xd = sc.adjoint_element(F, d, uv);
            Mat lhs = mat_mul(mat_mul(mat_inverse(xg), mat_inverse(xd)), mat_mul(xg, xd));
            Mat rhs = Mat::identity(F, sc.adjoint_dim());
            for (const auto& term : terms) {
              FF c = F->from_int(term.c);
              FF par = F->mul(c, F->mul(F->pow(F->neg(tv), term.i), F->pow(uv, term.j)));
              rhs = mat_mul(rhs, sc.adjoint_element(F, term.root, par));
            }
            REQUIRE(lhs == rhs);
          }
          if (sc.roots_commute(g, d)) CHECK(terms.empty());
        }
    }
  }
}

TEST_CASE("commutator term order and simple examples") {
  auto a2 = RootSystem::build('A', 2);
  StructureConstants sa(a2);
  auto terms = sa.commutator_terms({1, 0}, {0, 1});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].root == RootVec({1, 1}));
  CHECK(std::abs(terms[0].c) == 1);

  auto b2 = RootSystem::build('B', 2);
  StructureConstants sb(b2);
  // long-short pair a1, a2: support {a1+a2, a1+2a2}
  auto tb = sb.commutator_terms({1, 0}, {0, 1});
  REQUIRE(tb.size() == 2);
  CHECK(tb[0].root == RootVec({1, 1}));
  CHECK(tb[1].root == RootVec({1, 2}));
  CHECK(std::abs(tb[0].c) == 1);
  CHECK((std::abs(tb[1].c) == 1 || std::abs(tb[1].c) == 2));
  // ordering is by (i + j, i)
  for (size_t k = 0; k + 1 < tb.size(); ++k) {
    auto a = std::make_pair(tb[k].i + tb[k].j, tb[k].i);
    auto b = std::make_pair(tb[k + 1].i + tb[k + 1].j, tb[k + 1].i);
    CHECK(a < b);
  }
}

TEST_CASE("adjoint one-parameter law and unipotence") {
  auto a2 = RootSystem::build('A', 2);
  StructureConstants sc(a2);
  for (long long p : {2, 3, 5}) {
    auto F = make_field(p, 2);
    for (const auto& g : a2.roots()) {
      CHECK(mat_is_identity(sc.adjoint_element(F, g, F->zero())));
      for (FF t = 0; t < 9 && t < F->q(); ++t)
        for (FF u = 0; u < 9 && u < F->q(); ++u)
          CHECK(mat_mul(sc.adjoint_element(F, g, t), sc.adjoint_element(F, g, u)) ==
                sc.adjoint_element(F, g, F->add(t, u)));
      CHECK(mat_is_identity(mat_pow(sc.adjoint_element(F, g, F->one()), p * (p > 2 ? 1 : 2))));
    }
  }
}

TEST_CASE("adjoint elements are bracket automorphisms") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'G', 2}}) {
    auto s = RootSystem::build(t, l);
    StructureConstants sc(s);
    int n = sc.adjoint_dim();
    for (long long p : {2, 3, 5}) {
      auto F = make_field(p, 1);
      // integral bracket tables mod p
      auto fbracket = [&](const std::vector<FF>& v, const std::vector<FF>& w) {
        std::vector<FF> out(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (v[i] == 0 || w[j] == 0) continue;
            auto bb = sc.bracket_basis(i, j);
            FF c = F->mul(v[i], w[j]);
            for (int k = 0; k < n; ++k)
              if (bb[k] != 0) out[k] = F->add(out[k], F->mul(c, F->from_int(bb[k])));
          }
        return out;
      };
      Mat x = sc.adjoint_element(F, s.highest_root(), F->one());
      auto col = [&](const Mat& m, int j) {
        std::vector<FF> v(n);
        for (int i = 0; i < n; ++i) v[i] = m.at(i, j);
        return v;
      };
      std::mt19937 rng(7);
      for (int trial = 0; trial < 40; ++trial) {
        int i = rng() % n, j = rng() % n;
        std::vector<FF> bi(n, 0), bj(n, 0);
        bi[i] = F->one();
        bj[j] = F->one();
        auto lhs = fbracket(col(x, i), col(x, j));
        auto br = sc.bracket_basis(i, j);
        std::vector<FF> v(n, 0);
        for (int k = 0; k < n; ++k) v[k] = F->from_int(br[k]);
        std::vector<FF> rhs(n, 0);
        for (int k = 0; k < n; ++k) {
          if (v[k] == 0) continue;
          for (int q = 0; q < n; ++q) rhs[q] = F->add(rhs[q], F->mul(x.at(q, k), v[k]));
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("commuting roots give commuting adjoint matrices") {
  auto d4 = RootSystem::build('D', 4);
  StructureConstants sc(d4);
  for (long long p : {2, 3, 5}) {
    auto F = make_field(p, 1);
    int found = 0;
    for (const auto& g : d4.roots())
      for (const auto& d : d4.roots()) {
        if (g == d || g == negate(d) || !sc.roots_commute(g, d)) continue;
        if (++found > 20) break;
        Mat xg = sc.adjoint_element(F, g, F->one());
        Mat xd = sc.adjoint_element(F, d, F->from_int(p - 1));
        CHECK(mat_mul(xg, xd) == mat_mul(xd, xg));
      }
  }
}

TEST_CASE("weight tuples and torus weights") {
  auto f4 = RootSystem::build('F', 4);
  CocharacterWeighting cw;
  for (const RootVec& b :
       {RootVec{0, 1, 0, 0}, RootVec{0, 1, 2, 0}, RootVec{1, 1, 1, 0}, RootVec{1, 2, 3, 2}})
    cw.factors.push_back({{{b, 1}}, 1});
  CHECK(weight_tuple(f4, cw, {0, 1, 1, 0}) == std::vector<long long>({1, 1, 0, 0}));
  CHECK(weight_tuple(f4, cw, {1, 2, 3, 1}) == std::vector<long long>({0, 1, 1, 1}));
  CHECK(weight_tuple(f4, cw, {2, 3, 4, 2}) == std::vector<long long>({0, 0, 2, 2}));
  CHECK(weight_tuple(f4, cw, {1, 2, 2, 1}) == std::vector<long long>({1, 0, 1, 1}));
  CHECK(weight_tuple(f4, cw, {1, 2, 2, 0}) == std::vector<long long>({1, 1, 2, 0}));
  CHECK(weight_tuple(f4, cw, {1, 3, 4, 2}) == std::vector<long long>({1, 1, 0, 2}));

  // twists (4, 32, 1, 8)
  std::vector<long long> q = {4, 32, 1, 8};
  for (size_t i = 0; i < 4; ++i) cw.factors[i].twist = q[i];
  CHECK(torus_weight(f4, cw, {1, 2, 2, 1}) == 4 + 1 + 8);   // (1,0,1,1)
  CHECK(torus_weight(f4, cw, {1, 3, 4, 2}) == 4 + 32 + 16);  // (1,1,0,2) -> 52? no: 4+32+2*8

  // linearity where sums stay roots
  for (const auto& a : f4.roots())
    for (const auto& b : f4.roots()) {
      RootVec s = add_vec(a, b);
      if (!f4.is_root(s)) continue;
      auto ta = weight_tuple(f4, cw, a), tb = weight_tuple(f4, cw, b),
           ts = weight_tuple(f4, cw, s);
      for (int k = 0; k < 4; ++k) CHECK(ts[k] == ta[k] + tb[k]);
    }

  // resolution by weight tuple
  auto hits = find_roots_with_torus_weight(f4, cw, {1, 0, 1, 1});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == RootVec({1, 2, 2, 1}));
}

TEST_CASE("ad closure dimension") {
  auto a2 = RootSystem::build('A', 2);
  StructureConstants sc(a2);
  auto F = make_field(5, 1);
  int n = sc.adjoint_dim();
  CHECK(ad_closure_dim(F, {}, {}) == 0);
  // seeds alone: span of e_{a1}, e_{-a1} is 2-dimensional
  std::vector<FF> e1(n, 0), f1(n, 0);
  e1[sc.basis_index({1, 0})] = F->one();
  f1[sc.basis_index({-1, 0})] = F->one();
  CHECK(ad_closure_dim(F, {e1, f1}, {}) == 2);
  // closing e_{a1} under the full root-group sweep reaches the whole algebra
  std::vector<Mat> ops;
  for (const auto& g : a2.roots()) ops.push_back(sc.adjoint_element(F, g, F->one()));
  CHECK(ad_closure_dim(F, {e1}, ops) == n);
}
