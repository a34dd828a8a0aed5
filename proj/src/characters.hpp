#pragma once
// Formal characters of Weyl modules: exact weight multiplicities
// (Freudenthal), the Weyl dimension formula, restriction to subsystems and
// to twisted diagonal A1 cocharacters, and decomposition into Weyl
// characters by leading-term subtraction.

#include <map>
#include <vector>

#include "chevalley.hpp"
#include "rootsys.hpp"

namespace epiwit {

// Product of simple systems; weights live in concatenated
// fundamental-weight coordinates.
struct CompositeSystem {
  std::vector<RootSystem> parts;
  int rank() const {
    int r = 0;
    for (const auto& p : parts) r += p.rank();
    return r;
  }
};

CompositeSystem make_composite(const std::vector<std::pair<char, int>>& parts);

using Weight = std::vector<long long>;

struct FormalCharacter {
  CompositeSystem sys;
  std::map<Weight, long long> mult;
  long long dim() const {
    long long d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
  }
};

// Exact dimension of the Weyl module W(lambda); lambda dominant.
long long weyl_dim(const CompositeSystem& sys, const Weight& lambda);
long long weyl_dim(const RootSystem& sys, const Weight& lambda);

// Full weight multiset of W(lambda).  Guarded: dimension must be <= 10^4.
FormalCharacter formal_character(const CompositeSystem& sys, const Weight& lambda);
FormalCharacter formal_character(const RootSystem& sys, const Weight& lambda);

// Sum of characters over the same system shape.
FormalCharacter character_sum(const FormalCharacter& a, const FormalCharacter& b);

// Restrict an ambient character to a subsystem: ambient weight mu maps to
// (<mu, beta_i~>)_i over the subsystem's Bourbaki-ordered simple roots.
// The result lives over the composite system of sub.components.
FormalCharacter restrict_to_subsystem(const RootSystem& ambient, const FormalCharacter& ch,
                                      const Subsystem& sub);

// Restrict to a twisted diagonal A1: each weight mu goes to the integer
// sum_i q_i * <mu, chi_i>; returns the multiset as value -> multiplicity.
std::map<long long, long long> restrict_twisted(const RootSystem& ambient,
                                                const FormalCharacter& ch,
                                                const CocharacterWeighting& cw);

// Unique multiset D of dominant weights with ch = sum_{l in D} ch W(l);
// throws if ch is not a nonnegative combination of Weyl characters.
std::map<Weight, long long> decompose_into_weyl(const FormalCharacter& ch);

// Weight multiset of the sl2 string of highest weight n: {n, n-2, ..., -n}.
std::map<long long, long long> sl2_string(long long n);

}  // namespace epiwit
