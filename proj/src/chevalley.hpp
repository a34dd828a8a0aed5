#pragma once
// Chevalley basis structure constants, the commutator formula between root
// elements, cocharacter weightings, and the adjoint representation over
// small finite fields.

#include <map>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "rootsys.hpp"

namespace epiwit {

class StructureConstants {
public:
  explicit StructureConstants(RootSystem sys);

  const RootSystem& sys() const { return sys_; }

  // N_{g,d}: bracket coefficient [e_g, e_d] = N e_{g+d}; 0 when g+d is not
  // a root.  Signs fixed by the deterministic extraspecial-pair algorithm
  // over the (height, lex) root order.
  int N(const RootVec& g, const RootVec& d) const;

  // true iff no root of the form i*g + j*d (i, j >= 1) exists, so the root
  // groups U_g and U_d commute identically.
  bool roots_commute(const RootVec& g, const RootVec& d) const;

  // Chevalley commutator formula, [x, y] = x^{-1} y^{-1} x y:
  //   [x_g(t), x_d(u)] = prod x_{i*g+j*d}( c * (-t)^i * u^j )
  // with factors ordered by (i + j, i) ascending.
  struct CommTerm {
    RootVec root;
    int i = 0, j = 0;
    long long c = 0;
  };
  std::vector<CommTerm> commutator_terms(const RootVec& g, const RootVec& d) const;

  // --- adjoint representation over Z, basis (e_roots in root order, h_1..h_l)
  int adjoint_dim() const { return (int)sys_.roots().size() + sys_.rank(); }
  int basis_index(const RootVec& g) const;  // index of e_g
  // bracket of two basis elements, as a coordinate vector
  std::vector<long long> bracket_basis(int i, int j) const;
  // integral matrix of ad e_g (columns = images of basis vectors)
  std::vector<std::vector<long long>> ad_matrix(const RootVec& g) const;
  // x_g(t) = sum_k t^k (ad e_g)^k / k!, reduced into GF(p^m)
  Mat adjoint_element(const FieldPtr& F, const RootVec& g, FF t) const;

private:
  RootSystem sys_;
  std::vector<RootVec> pos_;              // positive roots, root order
  std::map<RootVec, int> pos_index_;
  std::map<std::pair<int, int>, int> npos_;  // N on positive pairs

  int n_pos(const RootVec& a, const RootVec& b) const;
  int chain_down(const RootVec& a, const RootVec& b) const;  // max k: b - k*a in Phi
};

// One cocharacter factor: chi = sum coeff * root~ acting with twist q.
struct CochFactor {
  std::vector<std::pair<RootVec, int>> coroots;
  long long twist = 1;
};

struct CocharacterWeighting {
  std::vector<CochFactor> factors;
};

std::vector<long long> weight_tuple(const RootSystem& sys, const CocharacterWeighting& cw,
                                    const RootVec& g);
long long torus_weight(const RootSystem& sys, const CocharacterWeighting& cw, const RootVec& g);

// All roots whose weight tuple equals the target.
std::vector<RootVec> find_roots_with_torus_weight(const RootSystem& sys,
                                                  const CocharacterWeighting& cw,
                                                  const std::vector<long long>& target);

// Dimension of the smallest subspace containing the seeds and stable under
// every operator.
int ad_closure_dim(const FieldPtr& F, const std::vector<std::vector<FF>>& seeds,
                   const std::vector<Mat>& ops);

}  // namespace epiwit
