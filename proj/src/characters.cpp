#include "characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "torus.hpp"

namespace epiwit {

CompositeSystem make_composite(const std::vector<std::pair<char, int>>& parts) {
  CompositeSystem c;
  for (auto [t, l] : parts) c.parts.push_back(RootSystem::build(t, l));
  return c;
}

long long weyl_dim(const RootSystem& sys, const Weight& lambda) {
  if ((int)lambda.size() != sys.rank()) throw std::invalid_argument("weyl_dim: rank mismatch");
  for (long long v : lambda)
    if (v < 0) throw std::invalid_argument("weyl_dim: lambda not dominant");
  BigInt num = 1, den = 1;
  for (const auto& a : sys.positive_roots()) {
    auto cc = sys.coroot_coords(a);
    long long hn = 0, hd = 0;
    for (int i = 0; i < sys.rank(); ++i) {
      hn += (lambda[i] + 1) * cc[i];
      hd += cc[i];
    }
    num *= hn;
    den *= hd;
  }
  BigInt d = num / den;
  if (d * den != num) throw std::logic_error("weyl_dim: nonintegral");
  return (long long)d;
}

long long weyl_dim(const CompositeSystem& sys, const Weight& lambda) {
  if ((int)lambda.size() != sys.rank()) throw std::invalid_argument("weyl_dim: rank mismatch");
  long long d = 1;
  size_t off = 0;
  for (const auto& p : sys.parts) {
    Weight part(lambda.begin() + off, lambda.begin() + off + p.rank());
    d *= weyl_dim(p, part);
    off += p.rank();
  }
  return d;
}

namespace {

constexpr long long kDimGuard = 10000;

FormalCharacter character_simple(const RootSystem& s, const Weight& lambda) {
  long long wd = weyl_dim(s, lambda);
  if (wd > kDimGuard)
    throw std::invalid_argument("formal_character: dimension " + std::to_string(wd) +
                                " exceeds guard " + std::to_string(kDimGuard));
  int l = s.rank();
  const auto& A = s.cartan();
  auto pos = s.positive_roots();
  std::vector<std::vector<int>> poscc;
  std::vector<int> posn2;
  for (const auto& a : pos) {
    poscc.push_back(s.coroot_coords(a));
    posn2.push_back(s.norm2(a));
  }
  auto fund_of = [&](const std::vector<int>& k) {
    Weight mu(l);
    for (int i = 0; i < l; ++i) {
      long long v = lambda[i];
      for (int j = 0; j < l; ++j) v -= (long long)k[j] * A[j][i];
      mu[i] = v;
    }
    return mu;
  };

  std::map<std::vector<int>, long long> multk;
  std::vector<std::vector<int>> frontier;
  multk[std::vector<int>(l, 0)] = 1;
  frontier.push_back(std::vector<int>(l, 0));
  while (!frontier.empty()) {
    std::map<std::vector<int>, bool> cand;
    for (const auto& k : frontier)
      for (int i = 0; i < l; ++i) {
        auto k2 = k;
        k2[i] += 1;
        if (!multk.count(k2)) cand[k2] = true;
      }
    frontier.clear();
    for (const auto& [k, _] : cand) {
      Weight mu = fund_of(k);
      // c = (lambda + mu + 2 rho, lambda - mu)
      long long c = 0;
      for (int i = 0; i < l; ++i)
        c += k[i] * (lambda[i] + mu[i] + 2) * (s.simple_norm2(i) / 2);
      long long rhs = 0;
      for (size_t ai = 0; ai < pos.size(); ++ai) {
        long long pair_mu = 0;
        for (int i = 0; i < l; ++i) pair_mu += poscc[ai][i] * mu[i];
        for (int j = 1;; ++j) {
          std::vector<int> k2 = k;
          bool ok = true;
          for (int i = 0; i < l && ok; ++i) {
            k2[i] -= j * pos[ai][i];
            if (k2[i] < 0) ok = false;
          }
          if (!ok) break;
          auto it = multk.find(k2);
          if (it == multk.end() || it->second == 0) continue;
          rhs += it->second * (pair_mu + 2LL * j) * (posn2[ai] / 2);
        }
      }
      if (c <= 0) {
        // outside the hull: numerator must vanish too
        if (rhs != 0) throw std::logic_error("freudenthal: inconsistent recursion");
        multk[k] = 0;
        continue;
      }
      long long m = 2 * rhs / c;
      if (m * c != 2 * rhs) throw std::logic_error("freudenthal: nonintegral multiplicity");
      multk[k] = m;
      if (m > 0) frontier.push_back(k);
    }
  }

  FormalCharacter ch;
  ch.sys.parts.push_back(s);
  for (const auto& [k, m] : multk)
    if (m > 0) ch.mult[fund_of(k)] += m;
  if (ch.dim() != wd) throw std::logic_error("freudenthal: dimension mismatch");
  return ch;
}

}  // namespace

FormalCharacter formal_character(const RootSystem& sys, const Weight& lambda) {
  return character_simple(sys, lambda);
}

FormalCharacter formal_character(const CompositeSystem& sys, const Weight& lambda) {
  if ((int)lambda.size() != sys.rank())
    throw std::invalid_argument("formal_character: rank mismatch");
  FormalCharacter ch;
  ch.sys = sys;
  ch.mult[{}] = 1;
  size_t off = 0;
  for (const auto& p : sys.parts) {
    Weight part(lambda.begin() + off, lambda.begin() + off + p.rank());
    auto pc = character_simple(p, part);
    std::map<Weight, long long> next;
    for (const auto& [w, m] : ch.mult)
      for (const auto& [v, n] : pc.mult) {
        Weight cat = w;
        cat.insert(cat.end(), v.begin(), v.end());
        next[cat] += m * n;
      }
    ch.mult = std::move(next);
    off += p.rank();
  }
  if (ch.dim() > kDimGuard) throw std::invalid_argument("formal_character: guard exceeded");
  return ch;
}

FormalCharacter character_sum(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out = a;
  for (const auto& [w, m] : b.mult) out.mult[w] += m;
  return out;
}

FormalCharacter restrict_to_subsystem(const RootSystem& ambient, const FormalCharacter& ch,
                                      const Subsystem& sub) {
  if (ch.sys.parts.size() != 1 || ch.sys.parts[0].rank() != ambient.rank())
    throw std::invalid_argument("restrict_to_subsystem: character not over the ambient system");
  std::vector<std::pair<char, int>> shape;
  for (const auto& c : sub.components) shape.push_back({c.letter, c.rank});
  FormalCharacter out;
  out.sys = make_composite(shape);
  std::vector<std::vector<int>> cc;  // coroot coords of subsystem simples, in order
  for (const auto& c : sub.components)
    for (const auto& b : c.simple_roots) cc.push_back(ambient.coroot_coords(b));
  for (const auto& [w, m] : ch.mult) {
    Weight r(cc.size());
    for (size_t i = 0; i < cc.size(); ++i) {
      long long v = 0;
      for (int j = 0; j < ambient.rank(); ++j) v += (long long)cc[i][j] * w[j];
      r[i] = v;
    }
    out.mult[r] += m;
  }
  return out;
}

std::map<long long, long long> restrict_twisted(const RootSystem& ambient,
                                                const FormalCharacter& ch,
                                                const CocharacterWeighting& cw) {
  if (ch.sys.parts.size() != 1 || ch.sys.parts[0].rank() != ambient.rank())
    throw std::invalid_argument("restrict_twisted: character not over the ambient system");
  std::map<long long, long long> out;
  for (const auto& [w, m] : ch.mult) {
    long long v = 0;
    for (const auto& f : cw.factors) {
      long long t = 0;
      for (const auto& [r, c] : f.coroots) {
        auto cc = ambient.coroot_coords(r);
        long long pr = 0;
        for (int j = 0; j < ambient.rank(); ++j) pr += (long long)cc[j] * w[j];
        t += c * pr;
      }
      v += f.twist * t;
    }
    out[v] += m;
  }
  return out;
}

std::map<Weight, long long> decompose_into_weyl(const FormalCharacter& ch) {
  // height functional: for each part, F(mu) = det(A) * sum of root
  // coordinates of mu, linear with integer coefficients via Cramer
  std::vector<long long> coeff;
  for (const auto& p : ch.sys.parts) {
    int l = p.rank();
    std::vector<std::vector<BigInt>> AT(l, std::vector<BigInt>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) AT[i][j] = p.cartan()[j][i];
    for (int i = 0; i < l; ++i) {
      // F(e_i): replace each column j of A^T by e_i in turn and sum dets
      BigInt f = 0;
      for (int j = 0; j < l; ++j) {
        auto M = AT;
        for (int r = 0; r < l; ++r) M[r][j] = (r == i) ? 1 : 0;
        f += det_exact(M);
      }
      coeff.push_back((long long)f);
    }
  }
  auto height = [&](const Weight& w) {
    long long h = 0;
    for (size_t i = 0; i < w.size(); ++i) h += coeff[i] * w[i];
    return h;
  };

  std::map<Weight, long long> rem = ch.mult;
  std::map<Weight, long long> out;
  for (int guard = 0; guard < 100000; ++guard) {
    // drop exhausted entries; reject negatives
    for (auto it = rem.begin(); it != rem.end();) {
      if (it->second < 0) throw std::invalid_argument("not a nonnegative Weyl combination");
      it = (it->second == 0) ? rem.erase(it) : std::next(it);
    }
    if (rem.empty()) return out;
    auto best = rem.begin();
    long long bh = height(best->first);
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      long long h = height(it->first);
      if (h > bh || (h == bh && it->first > best->first)) {
        best = it;
        bh = h;
      }
    }
    Weight top = best->first;
    long long m = best->second;
    for (long long v : top)
      if (v < 0) throw std::invalid_argument("leading weight not dominant");
    auto wc = formal_character(ch.sys, top);
    for (const auto& [w, n] : wc.mult) rem[w] -= m * n;
    out[top] += m;
  }
  throw std::logic_error("decompose_into_weyl: did not terminate");
}

std::map<long long, long long> sl2_string(long long n) {
  std::map<long long, long long> out;
  for (long long v = -n; v <= n; v += 2) out[v] += 1;
  return out;
}

}  // namespace epiwit
