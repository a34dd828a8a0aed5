#pragma once
// Exact matrix models of the classical groups on their natural modules:
// root elements, invariant forms, cocharacter torus elements, normalization
// checks, and the principal A1 for p >= h.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "gf.hpp"
#include "rootsys.hpp"

namespace epiwit {

// Basis order: e_1, ..., e_l, [v0 for odd orthogonal], f_l, ..., f_1 for
// types B/C/D (so positive root elements are upper triangular);
// v_1, ..., v_{l+1} for type A.
struct ClassicalModel {
  char letter = 'A';
  int rank = 0;
  int n = 0;  // dim W
  RootSystem sys;
  FieldPtr F;

  int e(int i) const { return i - 1; }          // 1-based hyperbolic index
  int f(int i) const { return n - i; }          // partner of e(i)
  int v0() const { return letter == 'B' ? rank : -1; }

  // eps-coordinate weight of a basis vector (length rank for B/C/D,
  // rank + 1 for A)
  std::vector<int> eps_weight(int basis) const;
  // root in eps coordinates
  std::vector<int> root_eps(const RootVec& g) const;

  Mat root_element(const RootVec& g, FF t) const;
  // product of x_{root}(coeff * t^exp) factors, left to right
  struct Factor {
    RootVec root;
    long long coeff = 1;
    unsigned long long exp = 1;
  };
  Mat unip_product(const std::vector<Factor>& factors, FF t) const;
  // diagonal torus element: basis vector of weight w gets c^{<w, chi>}
  // summed over the weighting's factors with their twists
  Mat torus_element(const CocharacterWeighting& cw, FF c) const;

  bool has_bilinear() const { return letter != 'A'; }
  Mat bilinear_form() const;                     // polarization matrix
  bool has_quadratic() const { return letter == 'B' || letter == 'D'; }
  FF quad_eval(const std::vector<FF>& v) const;  // Q(v)
  bool preserves_forms(const Mat& g) const;      // bilinear and, if any, quadratic
};

ClassicalModel make_classical(char letter, int rank, FieldPtr F);

// Burnside criterion: dim of the generated matrix algebra; n^2 certifies
// absolute irreducibility (thin wrapper over algebra_span_dim).
int burnside_span_dim(const std::vector<Mat>& gens);

// Jordan partition of a unipotent matrix; rejects non-unipotent input.
std::vector<int> jordan_type(const Mat& u);

// Does every b in bgens conjugate the one-parameter family y into itself?
// Exhaustive: for each sample u, search u' over the field with
// b y(u) b^{-1} = y(u').
bool normalizes(const std::vector<Mat>& bgens, const std::function<Mat(FF)>& y,
                const FieldPtr& F, const std::vector<FF>& samples);

struct MatrixRep {
  FieldPtr F;
  std::vector<std::pair<std::string, Mat>> gens;
  const Mat& get(const std::string& name) const;
};

// Principal (regular) A1 for p >= h: x(t) = exp(t e_reg) with
// e_reg = sum of simple root elements, and the principal torus.
MatrixRep principal_a1(const ClassicalModel& model);
// the principal cocharacter weight of each basis vector
std::vector<long long> principal_weights(const ClassicalModel& model);

}  // namespace epiwit
