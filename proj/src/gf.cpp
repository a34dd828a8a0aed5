#include "gf.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>

namespace epiwit {

namespace {

// polynomial arithmetic over GF(p), coefficient vectors little-endian
std::vector<long long> poly_mulmod(const std::vector<long long>& a, const std::vector<long long>& b,
                                   const std::vector<long long>& mod, long long p) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce by monic mod
  int dm = (int)mod.size() - 1;
  for (int i = (int)r.size() - 1; i >= dm; --i) {
    long long c = r[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      r[i - dm + j] = ((r[i - dm + j] - c * mod[j]) % p + p * p) % p;
    }
  }
  r.resize(dm);
  return r;
}

bool poly_is_zero(const std::vector<long long>& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

// trial-division irreducibility for small degrees
bool is_irreducible(const std::vector<long long>& f, long long p) {
  int d = (int)f.size() - 1;
  if (d == 1) return true;
  // iterate monic divisors of degree k <= d/2
  for (int k = 1; k <= d / 2; ++k) {
    uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= (uint64_t)p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<long long> g(k + 1, 0);
      uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = (long long)(t % (uint64_t)p);
        t /= (uint64_t)p;
      }
      g[k] = 1;
      // remainder f mod g
      std::vector<long long> r = f;
      for (int i = (int)r.size() - 1; i >= k; --i) {
        long long c = r[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= k; ++j)
          r[i - k + j] = ((r[i - k + j] - c * g[j]) % p + p * p) % p;
      }
      r.resize(k);
      if (poly_is_zero(r)) return false;
    }
  }
  return true;
}

uint64_t hard_cap_bits() {
  long long bits = 64;
  if (const char* e = std::getenv("EPIWIT_MAX_FIELD_BITS")) {
    bits = std::atoll(e);
    if (bits <= 0) bits = 64;
  }
  return (uint64_t)bits;
}

}  // namespace

Field::Field(long long p, int m) : p_(p), m_(m) {
  if (p < 2 || m < 1) throw std::invalid_argument("field: bad p or m");
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > (1ull << 22) / (uint64_t)p)
      throw std::runtime_error("field guard: p^m exceeds table representation limit");
    q *= (uint64_t)p;
  }
  double bits = m * std::log2((double)p);
  if (bits > (double)hard_cap_bits())
    throw std::runtime_error("field guard: p^m exceeds EPIWIT_MAX_FIELD_BITS");
  q_ = q;

  // lexicographically first monic irreducible of degree m: order by
  // (c_{m-1},...,c_0) ascending - scan constant-first is fine since we fix
  // the leading coefficient; any deterministic first hit works, we take
  // the smallest index encoding.
  for (uint64_t idx = 0;; ++idx) {
    if (idx >= q_) throw std::logic_error("no irreducible found");
    std::vector<long long> f(m + 1, 0);
    uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      f[i] = (long long)(t % (uint64_t)p);
      t /= (uint64_t)p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      mod_ = f;
      break;
    }
  }

  // find multiplicative generator by brute force
  auto idx_to_poly = [&](FF a) {
    std::vector<long long> v(m, 0);
    uint64_t t = a;
    for (int i = 0; i < m; ++i) {
      v[i] = (long long)(t % (uint64_t)p);
      t /= (uint64_t)p;
    }
    return v;
  };
  auto poly_to_idx = [&](const std::vector<long long>& v) {
    uint64_t r = 0;
    for (int i = m - 1; i >= 0; --i) r = r * (uint64_t)p + (uint64_t)v[i];
    return (FF)r;
  };

  uint64_t order = q_ - 1;
  std::vector<uint64_t> prime_factors;
  {
    uint64_t n = order;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_factors.push_back(n);
  }
  auto pow_idx = [&](FF a, uint64_t e) {
    std::vector<long long> base = idx_to_poly(a), acc(m, 0);
    acc[0] = 1;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, base, mod_, p);
      base = poly_mulmod(base, base, mod_, p);
      e >>= 1;
    }
    return poly_to_idx(acc);
  };
  for (FF g = 1; g < q_; ++g) {
    bool ok = true;
    for (uint64_t f : prime_factors)
      if (pow_idx(g, order / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = g;
      break;
    }
  }

  exp_.resize(order);
  log_.assign(q_, 0);
  std::vector<long long> acc(m, 0), gpoly = idx_to_poly(gen_);
  acc[0] = 1;
  for (uint64_t i = 0; i < order; ++i) {
    FF v = poly_to_idx(acc);
    exp_[i] = v;
    log_[v] = (uint32_t)i;
    acc = poly_mulmod(acc, gpoly, mod_, p);
  }
}

FF Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return (FF)r;
}

FF Field::add(FF a, FF b) const {
  uint64_t r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    long long da = (long long)(a % (uint64_t)p_), db = (long long)(b % (uint64_t)p_);
    a /= (FF)p_;
    b /= (FF)p_;
    r += mult * (uint64_t)((da + db) % p_);
    mult *= (uint64_t)p_;
  }
  return (FF)r;
}

FF Field::neg(FF a) const {
  uint64_t r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    long long da = (long long)(a % (uint64_t)p_);
    a /= (FF)p_;
    r += mult * (uint64_t)((p_ - da) % p_);
    mult *= (uint64_t)p_;
  }
  return (FF)r;
}

FF Field::sub(FF a, FF b) const { return add(a, neg(b)); }

FF Field::mul(FF a, FF b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t s = (uint64_t)log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

FF Field::inv(FF a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  uint64_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FF Field::pow(FF a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t l = ((uint64_t)log_[a] * (e % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

FF Field::frobenius(FF a, int k) const {
  uint64_t e = 1;
  for (int i = 0; i < k; ++i) e = e * (uint64_t)p_ % ((q_ - 1) == 0 ? 1 : (q_ - 1));
  if (a == 0) return 0;
  return pow(a, e);
}

FF Field::frobenius_inv(FF a, int k) const {
  // p^m = identity on the field, so inverse of p^k is p^(m-k mod m) iterated
  int kk = ((k % m_) + m_) % m_;
  return frobenius(a, (m_ - kk) % m_ == 0 ? m_ : (m_ - kk));
}

std::string Field::str(FF a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s = "[";
  for (int i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(a % (FF)p_);
    a /= (FF)p_;
  }
  return s + "]";
}

FieldPtr make_field(long long p, int m) { return std::make_shared<Field>(p, m); }

Mat Mat::identity(FieldPtr f, int n) {
  Mat r(std::move(f), n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = r.F->one();
  return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul shape");
  const Field& F = *x.F;
  Mat r(x.F, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      FF v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) {
        FF w = y.at(k, j);
        if (w) r.at(i, j) = F.add(r.at(i, j), F.mul(v, w));
      }
    }
  return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->add(r.a[i], y.a[i]);
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->sub(r.a[i], y.a[i]);
  return r;
}

Mat mat_pow(const Mat& x, uint64_t e) {
  Mat acc = Mat::identity(x.F, x.rows), base = x;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.F, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

bool mat_is_identity(const Mat& x) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x.at(i, j) != (i == j ? x.F->one() : 0)) return false;
  return true;
}

Mat mat_inverse(const Mat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_inverse shape");
  const Field& F = *x.F;
  int n = x.rows;
  Mat a = x, inv = Mat::identity(x.F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    FF d = F.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), d);
      inv.at(col, j) = F.mul(inv.at(col, j), d);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      FF c = a.at(i, col);
      if (!c) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(col, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

int mat_rank(Mat x) {
  const Field& F = *x.F;
  int rank = 0;
  for (int col = 0; col < x.cols && rank < x.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < x.rows; ++i)
      if (x.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(piv, j), x.at(rank, j));
    FF d = F.inv(x.at(rank, col));
    for (int j = col; j < x.cols; ++j) x.at(rank, j) = F.mul(x.at(rank, j), d);
    for (int i = 0; i < x.rows; ++i) {
      if (i == rank) continue;
      FF c = x.at(i, col);
      if (!c) continue;
      for (int j = col; j < x.cols; ++j) x.at(i, j) = F.sub(x.at(i, j), F.mul(c, x.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

void RowSpace::reduce(std::vector<FF>& v) const {
  const Field& f = *F;
  for (size_t r = 0; r < rows_.size(); ++r) {
    FF c = v[pivots_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    for (int j = 0; j < width_; ++j)
      if (row[j]) v[j] = f.sub(v[j], f.mul(c, row[j]));
  }
}

bool RowSpace::insert(std::vector<FF>& v) {
  reduce(v);
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const Field& f = *F;
  FF d = f.inv(v[piv]);
  for (int j = 0; j < width_; ++j) v[j] = f.mul(v[j], d);
  rows_.push_back(v);
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(std::vector<FF> v) const {
  reduce(v);
  for (auto c : v)
    if (c) return false;
  return true;
}

int algebra_span_dim(const std::vector<Mat>& gens) {
  if (gens.empty()) return 0;
  int n = gens[0].rows;
  FieldPtr F = gens[0].F;
  RowSpace space(F, n * n);
  std::vector<Mat> basis;
  auto push = [&](const Mat& m) {
    std::vector<FF> v = m.a;
    if (space.insert(v)) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  push(Mat::identity(F, n));
  for (const auto& g : gens) push(g);
  // closure: multiply existing basis by generators until stable
  for (size_t i = 0; i < basis.size(); ++i) {
    if (space.rank() == n * n) break;
    for (const auto& g : gens) {
      push(mat_mul(basis[i], g));
      push(mat_mul(g, basis[i]));
      if (space.rank() == n * n) break;
    }
  }
  return space.rank();
}

std::vector<int> unipotent_jordan_type(const Mat& u) {
  int n = u.rows;
  Mat nilp = mat_sub(u, Mat::identity(u.F, n));
  // ranks of (u-1)^k
  std::vector<int> ranks{n};
  Mat pw = Mat::identity(u.F, n);
  for (int k = 1; k <= n; ++k) {
    pw = mat_mul(pw, nilp);
    ranks.push_back(mat_rank(pw));
    if (ranks.back() == 0) break;
  }
  // number of blocks of size >= k is rank((u-1)^{k-1}) - rank((u-1)^k)
  std::vector<int> type;
  for (size_t k = 1; k + 1 <= ranks.size(); ++k) {
    int ge_k = ranks[k - 1] - ranks[k];
    int ge_k1 = (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
    int exactly = ge_k - ge_k1;
    for (int i = 0; i < exactly; ++i) type.push_back((int)k);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace epiwit
