#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "characters.hpp"
#include "repmat.hpp"

using namespace epiwit;

TEST_CASE("root elements: identity at 0, one-parameter law, form preservation") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'C', 3}, {'D', 4}}) {
    for (long long p : {2, 3, 5}) {
      auto F = make_field(p, 2);
      auto m = make_classical(t, l, F);
      for (const auto& g : m.sys.roots()) {
        CHECK(mat_is_identity(m.root_element(g, F->zero())));
        for (FF a = 0; a < F->q(); ++a)
          for (FF b = 0; b < F->q(); ++b)
            CHECK(mat_mul(m.root_element(g, a), m.root_element(g, b)) ==
                  m.root_element(g, F->add(a, b)));
        CHECK(m.preserves_forms(m.root_element(g, F->gen())));
      }
    }
  }
}

TEST_CASE("root element jordan types") {
  auto F3 = make_field(3, 1);
  auto sp6 = make_classical('C', 3, F3);
  // short root eps_1 - eps_2 = a1
  CHECK(jordan_type(sp6.root_element({1, 0, 0}, F3->one())) == std::vector<int>({2, 2, 1, 1}));
  // long root 2 eps_3 = a3
  CHECK(jordan_type(sp6.root_element({0, 0, 1}, F3->one())) == std::vector<int>({2, 1, 1, 1, 1}));

  auto so7 = make_classical('B', 3, F3);
  // long root eps_1 - eps_2 = a1
  CHECK(jordan_type(so7.root_element({1, 0, 0}, F3->one())) ==
        std::vector<int>({2, 2, 1, 1, 1}));
  // short root eps_3 = a3: J3 + J1^4 when p != 2
  CHECK(jordan_type(so7.root_element({0, 0, 1}, F3->one())) ==
        std::vector<int>({3, 1, 1, 1, 1}));
  // at p=2 the coefficient -2 on v0 vanishes, leaving a single J2
  auto F2 = make_field(2, 1);
  auto so7b = make_classical('B', 3, F2);
  CHECK(jordan_type(so7b.root_element({0, 0, 1}, F2->one())) ==
        std::vector<int>({2, 1, 1, 1, 1, 1}));

  CHECK(jordan_type(Mat::identity(F3, 4)) == std::vector<int>({1, 1, 1, 1}));
  Mat notunip(F3, 2, 2);
  notunip.at(0, 0) = F3->from_int(2);
  notunip.at(1, 1) = F3->one();
  CHECK_THROWS(jordan_type(notunip));
}

TEST_CASE("torus elements match the twisted character restriction") {
  auto F = make_field(2, 3);
  auto c3 = make_classical('C', 3, F);
  CocharacterWeighting cw;
  cw.factors.push_back({{{RootVec{2, 2, 1}, 1}}, 1});
  cw.factors.push_back({{{RootVec{0, 2, 1}, 1}}, 2});
  cw.factors.push_back({{{RootVec{0, 0, 1}, 1}}, 4});
  FF c = F->gen();
  Mat h = c3.torus_element(cw, c);
  // expected weights on (e1,e2,e3,f3,f2,f1)
  std::vector<long long> w = {1, 2, 4, -4, -2, -1};
  std::map<long long, long long> eig;
  for (int i = 0; i < 6; ++i) {
    FF want = w[i] >= 0 ? F->pow(c, w[i]) : F->pow(F->inv(c), -w[i]);
    CHECK(h.at(i, i) == want);
    eig[w[i]] += 1;
  }
  // same multiset as the character-level twisted restriction
  auto nat = formal_character(c3.sys, {1, 0, 0});
  CHECK(restrict_twisted(c3.sys, nat, cw) == eig);
  CHECK(c3.preserves_forms(h));
  // torus normalizes each root group with the right weight
  for (const auto& g : c3.sys.roots()) {
    long long tw = torus_weight(c3.sys, cw, g);
    Mat lhs = mat_mul(h, mat_mul(c3.root_element(g, F->one()), mat_inverse(h)));
    FF cc = tw >= 0 ? F->pow(c, tw) : F->pow(F->inv(c), -tw);
    CHECK(lhs == c3.root_element(g, cc));
  }
}

TEST_CASE("burnside span") {
  auto F = make_field(3, 1);
  CHECK(burnside_span_dim({Mat::identity(F, 3)}) == 1);
  auto a1 = make_classical('A', 1, F);
  CHECK(burnside_span_dim({a1.root_element({1}, F->one()), a1.root_element({-1}, F->one())}) ==
        4);
  // C3 p=2 a=1 twisted witness generators span all of 6x6
  auto F8 = make_field(2, 3);
  auto sp6 = make_classical('C', 3, F8);
  CocharacterWeighting cw;
  cw.factors.push_back({{{RootVec{2, 2, 1}, 1}}, 1});
  cw.factors.push_back({{{RootVec{0, 2, 1}, 1}}, 2});
  cw.factors.push_back({{{RootVec{0, 0, 1}, 1}}, 4});
  auto xj = [&](FF t) {
    return sp6.unip_product(
        {{RootVec{2, 2, 1}, 1, 1}, {RootVec{0, 2, 1}, 1, 2}, {RootVec{0, 0, 1}, 1, 4}}, t);
  };
  auto xjm = [&](FF t) {
    return sp6.unip_product(
        {{RootVec{-2, -2, -1}, 1, 1}, {RootVec{0, -2, -1}, 1, 2}, {RootVec{0, 0, -1}, 1, 4}},
        t);
  };
  auto y = [&](FF t) {
    return sp6.unip_product({{RootVec{1, 2, 1}, 1, 1}, {RootVec{0, 1, 1}, 1, 2}}, t);
  };
  std::vector<Mat> gens = {sp6.torus_element(cw, F8->gen()),
                           xj(F8->one()),
                           xj(F8->gen()),
                           xjm(F8->one()),
                           xjm(F8->gen()),
                           y(F8->one()),
                           y(F8->gen())};
  CHECK(burnside_span_dim(gens) == 36);
}

TEST_CASE("normalizes") {
  auto F = make_field(3, 2);
  auto a1 = make_classical('A', 1, F);
  auto yminus = [&](FF u) { return a1.root_element({-1}, u); };
  CHECK(normalizes({Mat::identity(F, 2)}, yminus, F, {F->one(), F->gen()}));
  // the positive root group does not normalize the negative one
  CHECK_FALSE(
      normalizes({a1.root_element({1}, F->one())}, yminus, F, {F->one()}));

  // C3: the twisted torus normalizes Y = x_{eps1+eps2}(t) x_{eps2+eps3}(t^2)
  auto F8 = make_field(2, 3);
  auto sp6 = make_classical('C', 3, F8);
  CocharacterWeighting cw;
  cw.factors.push_back({{{RootVec{2, 2, 1}, 1}}, 1});
  cw.factors.push_back({{{RootVec{0, 2, 1}, 1}}, 2});
  cw.factors.push_back({{{RootVec{0, 0, 1}, 1}}, 4});
  auto y = [&](FF t) {
    return sp6.unip_product({{RootVec{1, 2, 1}, 1, 1}, {RootVec{0, 1, 1}, 1, 2}}, t);
  };
  Mat h = sp6.torus_element(cw, F8->gen());
  CHECK(normalizes({h}, y, F8, {F8->one(), F8->gen()}));
  // and the conjugation exponent is 1 + p^a = 3: h y(u) h^{-1} = y(c^3 u)
  for (FF u = 0; u < F8->q(); ++u) {
    Mat lhs = mat_mul(h, mat_mul(y(u), mat_inverse(h)));
    CHECK(lhs == y(F8->mul(F8->pow(F8->gen(), 3), u)));
  }
}

TEST_CASE("principal A1") {
  auto F = make_field(7, 1);
  auto sp6 = make_classical('C', 3, F);
  auto rep = principal_a1(sp6);
  const Mat& x = rep.get("x");
  const Mat& h = rep.get("h");
  CHECK(mat_is_identity(mat_pow(x, 7)));
  CHECK(jordan_type(x) == std::vector<int>({6}));
  CHECK(principal_weights(sp6) == std::vector<long long>({5, 3, 1, -1, -3, -5}));
  CHECK(sp6.preserves_forms(x));
  CHECK(sp6.preserves_forms(h));
  // h scales the regular unipotent direction with weight 2: h x h^-1 has the
  // same Jordan type and is again a product of simple root elements
  Mat conj = mat_mul(h, mat_mul(x, mat_inverse(h)));
  CHECK(jordan_type(conj) == std::vector<int>({6}));

  // p < h rejected
  auto F5 = make_field(5, 1);
  CHECK_THROWS(principal_a1(make_classical('C', 3, F5)));

  // SL2: principal A1 is the identity embedding
  auto a1 = make_classical('A', 1, make_field(3, 1));
  auto r1 = principal_a1(a1);
  CHECK(r1.get("x") == a1.root_element({1}, a1.F->one()));
}
