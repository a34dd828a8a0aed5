#pragma once
// Root systems of simple type, rank <= 8.  Roots are integer coefficient
// vectors over the simple roots, Bourbaki numbering.

#include <map>
#include <string>
#include <vector>

namespace epiwit {

using RootVec = std::vector<int>;

RootVec negate(const RootVec& r);
RootVec add_vec(const RootVec& a, const RootVec& b);

class RootSystem {
public:
  static RootSystem build(char letter, int rank);

  char letter() const { return letter_; }
  int rank() const { return rank_; }
  const std::vector<RootVec>& roots() const { return roots_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }  // cartan[i][j] = <a_i, a_j~>
  const RootVec& highest_root() const { return highest_; }
  int coxeter_number() const { return coxeter_; }

  bool is_root(const RootVec& r) const { return index_.count(r) > 0; }
  int root_index(const RootVec& r) const;
  int height(const RootVec& r) const;
  int norm2(const RootVec& r) const;          // (r, r), short roots normalized to 2
  int simple_norm2(int i) const { return simple_norm2_[i]; }
  bool is_long(const RootVec& r) const;
  int inner(const RootVec& a, const RootVec& b) const;    // (a, b)
  int pairing(const RootVec& a, const RootVec& b) const;  // <a, b~> = 2(a,b)/(b,b)
  std::vector<int> coroot_coords(const RootVec& r) const; // r~ over simple coroots
  std::vector<RootVec> positive_roots() const;
  RootVec simple_root(int i) const;

private:
  char letter_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_norm2_;
  std::vector<RootVec> roots_;
  std::map<RootVec, int> index_;
  RootVec highest_;
  int coxeter_ = 0;
};

struct Component {
  char letter;
  int rank;
  char length_flag;  // 'l' all long / 's' all short / 'm' mixed / '-' simply-laced ambient
  std::vector<RootVec> simple_roots;  // Bourbaki order, in ambient coordinates
};

struct Subsystem {
  std::vector<RootVec> closed_roots;
  std::vector<RootVec> positive_roots;
  std::vector<RootVec> simple_roots;  // concatenated per component
  std::vector<Component> components;
};

// Smallest closed symmetric subsystem containing the seeds.
Subsystem subsystem_closure(const RootSystem& sys, const std::vector<RootVec>& seeds);

// Classify a set of simple roots (pairwise obtuse-or-orthogonal, independent)
// into Bourbaki-ordered components.
std::vector<Component> classify_cartan_type(const RootSystem& sys,
                                            const std::vector<RootVec>& simples);

// Extend a Cartan-matrix-preserving permutation of the simple roots to all
// roots; returns the induced permutation of root indices.
std::vector<int> graph_automorphism(const RootSystem& sys, const std::vector<int>& simple_perm);

}  // namespace epiwit
