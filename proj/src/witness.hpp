#pragma once
// Witness certificates for the epimorphic-subgroup constructions, per-case
// builders, and a multi-level verifier (symbolic / matrix / adjoint checks).

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "rootsys.hpp"
#include "torus.hpp"

namespace epiwit {

// One factor x_root(coeff * (t^{p^pexp})^mult) of a one-parameter unipotent
// group. Exponents of p are kept in factored form so they never overflow.
struct UnipFactorW {
  RootVec root;
  long long coeff = 1;  // integer, read mod p
  long long mult = 1;   // small multiplier
  long long pexp = 0;   // power-of-p part of the t-exponent
};

struct UnipGroupW {
  std::string name;
  std::vector<UnipFactorW> factors;
};

struct CochCorootW {
  RootVec root;
  long long coeff = 1;
};

// A cocharacter factor c |-> prod coroot(c^{p^pexp * coeff}).
struct CochFactorW {
  std::vector<CochCorootW> coroots;
  long long pexp = 0;
};

struct SubsystemSpec {
  std::string name;
  std::vector<RootVec> seeds;
  std::string expected_type;  // e.g. "B4", "A1 A1 A1 A1"
};

struct MembershipClaim {
  RootVec root;
  std::string subsystem;
  bool inside = false;  // claim: root is (not) in the closed subsystem
};

struct HighestWeightClaim {
  RootVec root;
  std::string subsystem;  // e_root is annihilated by the positive part mod p
};

struct JordanClaim {
  RootVec root;
  std::vector<int> blocks;  // expected Jordan type of x_root(1) on W
};

struct Certificate {
  int schema_version = 1;
  char type = 0;
  int rank = 0;
  long long p = 0;
  long long a = 1;
  std::string case_tag;
  std::vector<CochFactorW> cochar;
  std::vector<UnipGroupW> j_unip;  // unipotent one-parameter subgroups of J
  std::vector<UnipGroupW> y_groups;
  std::vector<UnipGroupW> z_groups;
  int claimed_dim = 0;
  TorusFamily family = TorusFamily::S;
  std::vector<SubsystemSpec> subsystems;
  std::vector<MembershipClaim> memberships;
  std::vector<HighestWeightClaim> hw_claims;
  std::vector<JordanClaim> jordan_claims;
  std::vector<std::string> annotations;
  bool classical_model = false;  // natural matrix representation available
  int ad_target = 0;             // adjoint invariant-subspace dimension target
  std::vector<RootVec> ad_seeds; // seed root vectors for the adjoint closure
  long long field_exp = 1;       // matrix/adjoint checks run over GF(p^field_exp)
  long long seed = 0;
};

// Coverage of (type, rank, p): either a certificate is constructible or the
// caller is redirected / out of scope.
struct Coverage {
  bool covered = false;
  std::string redirect;  // human-readable reason / redirection when not covered
};

Coverage coverage_for(char type, int rank, long long p);

// Throws std::invalid_argument for malformed input, CoverageError when the
// triple is valid but not covered by a construction.
struct CoverageError : std::runtime_error {
  explicit CoverageError(const std::string& m) : std::runtime_error(m) {}
};

Certificate build_certificate(char type, int rank, long long p, long long a);

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", "skip"
  std::string detail;
};

struct Report {
  bool pass = false;
  std::vector<CheckResult> checks;
  long long seed = 0;
};

// level: "symbolic", "matrix", or "all" (matrix implies symbolic; "all" adds
// the adjoint-representation closure checks).
Report verify_certificate(const Certificate& c, const std::string& level,
                          long long max_field_bits = 64);

// Deterministic fault injection: returns a certificate with one seeded,
// guaranteed-detectable corruption.
Certificate mutate_certificate(const Certificate& c, std::mt19937_64& rng);

// The representation-theoretic identities used by the exceptional cases.
std::vector<CheckResult> character_suite();

// Default verification grid: every covered (type, rank <= max_rank, p) triple.
struct GridCell {
  char type;
  int rank;
  long long p;
};
std::vector<GridCell> default_grid(int max_rank = 6);

}  // namespace epiwit
