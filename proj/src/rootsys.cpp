#include "rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace epiwit {

RootVec negate(const RootVec& r) {
  RootVec v(r.size());
  for (size_t i = 0; i < r.size(); ++i) v[i] = -r[i];
  return v;
}

RootVec add_vec(const RootVec& a, const RootVec& b) {
  RootVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return v;
}

namespace {

struct TypeData {
  std::vector<std::vector<int>> cartan;
  std::vector<int> norm2;  // (a_i, a_i), short = 2
  int coxeter;
};

TypeData type_data(char letter, int l) {
  auto bad = [&] { throw std::invalid_argument("invalid simple type/rank"); };
  if (l < 1 || l > 8) bad();
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  std::vector<int> n2(l, 2);
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto chain = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  int cox = 0;
  switch (letter) {
    case 'A': {
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      cox = l + 1;
      break;
    }
    case 'B': {
      if (l < 2) bad();
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      // a_{l-1} long, a_l short
      c[l - 2][l - 1] = -2;
      c[l - 1][l - 2] = -1;
      for (int i = 0; i < l - 1; ++i) n2[i] = 4;
      n2[l - 1] = 2;
      cox = 2 * l;
      break;
    }
    case 'C': {
      if (l < 2) bad();
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      c[l - 2][l - 1] = -1;
      c[l - 1][l - 2] = -2;
      for (int i = 0; i < l - 1; ++i) n2[i] = 2;
      n2[l - 1] = 4;
      cox = 2 * l;
      break;
    }
    case 'D': {
      if (l < 4) bad();
      for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      cox = 2 * l - 2;
      break;
    }
    case 'E': {
      if (l < 6 || l > 8) bad();
      // Bourbaki: 1-3-4-5-...-l, 2 attached to 4
      chain(0, 2);
      for (int i = 2; i + 1 < l; ++i) chain(i, i + 1);
      chain(1, 3);
      cox = (l == 6) ? 12 : (l == 7 ? 18 : 30);
      break;
    }
    case 'F': {
      if (l != 4) bad();
      chain(0, 1);
      chain(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      n2[0] = n2[1] = 4;
      n2[2] = n2[3] = 2;
      cox = 12;
      break;
    }
    case 'G': {
      if (l != 2) bad();
      c[0][1] = -1;
      c[1][0] = -3;
      n2[0] = 2;
      n2[1] = 6;
      cox = 6;
      break;
    }
    default:
      bad();
  }
  return {c, n2, cox};
}

}  // namespace

RootSystem RootSystem::build(char letter, int rank) {
  RootSystem s;
  s.letter_ = letter;
  s.rank_ = rank;
  TypeData td = type_data(letter, rank);
  s.cartan_ = td.cartan;
  s.simple_norm2_ = td.norm2;
  s.coxeter_ = td.coxeter;

  // positive roots by closure along simple-root strings
  std::set<RootVec> pos;
  std::vector<RootVec> frontier;
  for (int i = 0; i < rank; ++i) {
    RootVec e(rank, 0);
    e[i] = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  auto pair_with_simple = [&](const RootVec& b, int i) {
    int v = 0;
    for (int j = 0; j < rank; ++j) v += b[j] * s.cartan_[j][i];
    return v;
  };
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < rank; ++i) {
        // q = down-length of the a_i-string through b
        int q = 0;
        RootVec t = b;
        for (;;) {
          t[i] -= 1;
          bool zero = std::all_of(t.begin(), t.end(), [](int x) { return x == 0; });
          if (zero || !pos.count(t)) break;
          ++q;
        }
        if (q - pair_with_simple(b, i) > 0) {
          RootVec up = b;
          up[i] += 1;
          if (pos.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& r : pos) {
    s.roots_.push_back(r);
    s.roots_.push_back(negate(r));
  }
  std::sort(s.roots_.begin(), s.roots_.end(), [&](const RootVec& a, const RootVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (size_t i = 0; i < s.roots_.size(); ++i) s.index_[s.roots_[i]] = (int)i;
  s.highest_ = s.roots_.back();
  if (s.height(s.highest_) + 1 != s.coxeter_)
    throw std::logic_error("coxeter number mismatch with highest root height");
  return s;
}

int RootSystem::root_index(const RootVec& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(const RootVec& r) const {
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
  // (a_i, a_j) = cartan[i][j] * (a_j,a_j)/2
  long long v = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j) {
      if (!b[j]) continue;
      v += (long long)a[i] * b[j] * cartan_[i][j] * simple_norm2_[j] / 2;
    }
  }
  return (int)v;
}

int RootSystem::norm2(const RootVec& r) const { return inner(r, r); }

bool RootSystem::is_long(const RootVec& r) const {
  int mx = 0;
  for (int i = 0; i < rank_; ++i) mx = std::max(mx, simple_norm2_[i]);
  return norm2(r) == mx;
}

int RootSystem::pairing(const RootVec& a, const RootVec& b) const {
  int n2 = norm2(b);
  int twice = 2 * inner(a, b);
  if (twice % n2 != 0) throw std::domain_error("pairing: b is not a root");
  return twice / n2;
}

std::vector<int> RootSystem::coroot_coords(const RootVec& r) const {
  // r~ = sum_j r_j (a_j,a_j)/(r,r) a_j~
  int n2 = norm2(r);
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) {
    int num = r[j] * simple_norm2_[j];
    if (num % n2 != 0) throw std::domain_error("coroot_coords: not a root");
    c[j] = num / n2;
  }
  return c;
}

std::vector<RootVec> RootSystem::positive_roots() const {
  std::vector<RootVec> v;
  for (const auto& r : roots_)
    if (height(r) > 0) v.push_back(r);
  return v;
}

RootVec RootSystem::simple_root(int i) const {
  RootVec e(rank_, 0);
  e[i] = 1;
  return e;
}

Subsystem subsystem_closure(const RootSystem& sys, const std::vector<RootVec>& seeds) {
  for (const auto& r : seeds)
    if (!sys.is_root(r)) throw std::invalid_argument("subsystem seed is not a root");
  std::set<RootVec> closed;
  for (const auto& r : seeds) {
    closed.insert(r);
    closed.insert(negate(r));
  }
  // close under the reflections of members: s_b(g) = g - <g, b~> b
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVec> cur(closed.begin(), closed.end());
    for (const auto& g : cur)
      for (const auto& b : cur) {
        RootVec r = g;
        int p = sys.pairing(g, b);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= p * b[i];
        if (!closed.count(r)) {
          closed.insert(r);
          closed.insert(negate(r));
          grew = true;
        }
      }
  }

  // positivity functional nonvanishing on the subsystem
  std::vector<RootVec> all(closed.begin(), closed.end());
  int rank = sys.rank();
  std::vector<long long> w;
  for (long long M = 10;; ++M) {
    w.assign(rank, 0);
    long long m = 1;
    for (int i = 0; i < rank; ++i) {
      w[i] = m;
      m *= M;
    }
    bool ok = true;
    for (const auto& r : all) {
      long long f = 0;
      for (int i = 0; i < rank; ++i) f += w[i] * r[i];
      if (f == 0) {
        ok = false;
        break;
      }
    }
    if (ok) break;
    if (M > 100) throw std::logic_error("no positivity functional found");
  }
  auto fval = [&](const RootVec& r) {
    long long f = 0;
    for (int i = 0; i < rank; ++i) f += w[i] * r[i];
    return f;
  };

  Subsystem out;
  out.closed_roots = all;
  std::set<RootVec> posset;
  for (const auto& r : all)
    if (fval(r) > 0) {
      out.positive_roots.push_back(r);
      posset.insert(r);
    }
  // simple = indecomposable positives
  std::vector<RootVec> simples;
  for (const auto& r : out.positive_roots) {
    bool decomposable = false;
    for (const auto& x : out.positive_roots) {
      RootVec diff(rank);
      for (int i = 0; i < rank; ++i) diff[i] = r[i] - x[i];
      bool zero = std::all_of(diff.begin(), diff.end(), [](int v) { return v == 0; });
      if (!zero && posset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(r);
  }
  out.components = classify_cartan_type(sys, simples);
  for (const auto& c : out.components)
    for (const auto& r : c.simple_roots) out.simple_roots.push_back(r);
  return out;
}

namespace {

char length_flag_for(const RootSystem& sys, const std::vector<RootVec>& roots) {
  bool simply_laced = true;
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.simple_norm2(i) != sys.simple_norm2(0)) simply_laced = false;
  if (simply_laced) return '-';
  bool any_long = false, any_short = false;
  for (const auto& r : roots) (sys.is_long(r) ? any_long : any_short) = true;
  if (any_long && any_short) return 'm';
  return any_long ? 'l' : 's';
}

// Bourbaki-order the simple roots of one connected component.
Component order_component(const RootSystem& sys, std::vector<RootVec> comp) {
  int n = (int)comp.size();
  auto pairs = [&](int i, int j) { return sys.pairing(comp[i], comp[j]); };
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && pairs(i, j) != 0) adj[i].push_back(j);

  auto result = [&](char letter, const std::vector<int>& order) {
    Component c;
    c.letter = letter;
    c.rank = n;
    for (int idx : order) c.simple_roots.push_back(comp[idx]);
    c.length_flag = length_flag_for(sys, c.simple_roots);
    return c;
  };

  if (n == 1) return result('A', {0});

  int bond_max = 1;
  for (int i = 0; i < n; ++i)
    for (int j : adj[i]) bond_max = std::max(bond_max, pairs(i, j) * pairs(j, i));
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) branch = i;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() > 3) throw std::invalid_argument("not a finite-type diagram");

  auto walk_path = [&](int start) {
    std::vector<int> order{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    while ((int)order.size() < n) {
      int cur = order.back(), next = -1;
      for (int j : adj[cur])
        if (!seen[j]) next = j;
      if (next < 0) throw std::invalid_argument("diagram is not the expected shape");
      order.push_back(next);
      seen[next] = 1;
    }
    return order;
  };

  if (branch < 0) {
    // path diagram
    std::vector<int> ends;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() == 1) ends.push_back(i);
    if (ends.size() != 2) throw std::invalid_argument("diagram is not a path");
    if (bond_max == 3) {
      // G2: short root first
      int shrt = sys.norm2(comp[0]) < sys.norm2(comp[1]) ? 0 : 1;
      return result('G', {shrt, 1 - shrt});
    }
    if (bond_max == 2) {
      // locate double bond; decide B / C / F4
      auto try_order = [&](int start) { return walk_path(start); };
      for (int e : ends) {
        auto order = try_order(e);
        // double bond position
        int dpos = -1;
        for (int i = 0; i + 1 < n; ++i)
          if (pairs(order[i], order[i + 1]) * pairs(order[i + 1], order[i]) == 2) dpos = i;
        if (n == 4 && dpos == 1 && sys.norm2(comp[order[0]]) > sys.norm2(comp[order[3]]))
          return result('F', order);
        if (dpos == n - 2) {
          bool last_short = sys.norm2(comp[order[n - 1]]) < sys.norm2(comp[order[n - 2]]);
          if (n == 2) {
            // B2: first long, second short
            if (last_short) return result('B', order);
            continue;
          }
          if (n == 4 && sys.norm2(comp[order[0]]) != sys.norm2(comp[order[1]])) continue;
          return result(last_short ? 'B' : 'C', order);
        }
      }
      throw std::invalid_argument("unrecognized doubly-laced path");
    }
    // simply laced path: A_n; deterministic end choice by lex
    auto o1 = walk_path(ends[0]), o2 = walk_path(ends[1]);
    std::vector<RootVec> r1, r2;
    for (int i : o1) r1.push_back(comp[i]);
    for (int i : o2) r2.push_back(comp[i]);
    return result('A', r1 <= r2 ? o1 : o2);
  }

  // branched diagram: D or E
  std::vector<std::vector<int>> arms;  // paths away from branch
  for (int s : adj[branch]) {
    std::vector<int> arm{s};
    std::vector<char> used(n, 0);
    used[branch] = 1;
    used[s] = 1;
    for (;;) {
      int cur = arm.back(), nxt = -1;
      for (int j : adj[cur])
        if (!used[j]) nxt = j;
      if (nxt < 0) break;
      arm.push_back(nxt);
      used[nxt] = 1;
    }
    arms.push_back(arm);
  }
  if (arms.size() != 3) throw std::invalid_argument("bad branch");
  std::sort(arms.begin(), arms.end(), [&](const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return comp[x[0]] < comp[y[0]];
  });
  size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
  if (l1 == 1 && l2 == 1) {
    // D_n: long arm then branch then the two fork leaves (lex order)
    std::vector<int> order;
    for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) order.push_back(*it);
    order.push_back(branch);
    int f1 = arms[0][0], f2 = arms[1][0];
    if (comp[f2] < comp[f1]) std::swap(f1, f2);
    order.push_back(f1);
    order.push_back(f2);
    return result('D', order);
  }
  if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
    // E_{4+l3}: Bourbaki 1-3-4-5..., 2 on 4
    std::vector<int> order;
    order.push_back(arms[1][1]);  // a1
    order.push_back(arms[0][0]);  // a2
    order.push_back(arms[1][0]);  // a3
    order.push_back(branch);      // a4
    for (int v : arms[2]) order.push_back(v);
    return result('E', order);
  }
  throw std::invalid_argument("not a finite-type branched diagram");
}

}  // namespace

std::vector<Component> classify_cartan_type(const RootSystem& sys,
                                            const std::vector<RootVec>& simples) {
  for (const auto& r : simples)
    if (!sys.is_root(r)) throw std::invalid_argument("classify: not a root");
  int n = (int)simples.size();
  // connected components
  std::vector<int> compof(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (compof[i] >= 0) continue;
    std::vector<int> stack{i};
    compof[i] = ncomp;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (compof[j] < 0 && sys.pairing(simples[c], simples[j]) != 0) {
          compof[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<Component> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<RootVec> comp;
    for (int i = 0; i < n; ++i)
      if (compof[i] == c) comp.push_back(simples[i]);
    out.push_back(order_component(sys, comp));
  }
  // deterministic component order: by (letter, rank, first simple root)
  std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    if (x.letter != y.letter) return x.letter < y.letter;
    if (x.rank != y.rank) return x.rank > y.rank;
    return x.simple_roots < y.simple_roots;
  });
  return out;
}

std::vector<int> graph_automorphism(const RootSystem& sys, const std::vector<int>& perm) {
  int l = sys.rank();
  if ((int)perm.size() != l) throw std::invalid_argument("graph_automorphism: bad permutation size");
  const auto& C = sys.cartan();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (C[perm[i]][perm[j]] != C[i][j])
        throw std::invalid_argument("permutation does not preserve the Cartan matrix");
  std::vector<int> out(sys.roots().size());
  for (size_t k = 0; k < sys.roots().size(); ++k) {
    const RootVec& r = sys.roots()[k];
    RootVec img(l, 0);
    for (int i = 0; i < l; ++i) img[perm[i]] = r[i];
    int idx = sys.root_index(img);
    if (idx < 0) throw std::logic_error("automorphism image is not a root");
    out[k] = idx;
  }
  return out;
}

}  // namespace epiwit
