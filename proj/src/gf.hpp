#pragma once
// Small finite fields GF(p^m) with table-based arithmetic, plus dense
// matrices and exact Gaussian elimination over them.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace epiwit {

// Element = index in [0, q).  Index encodes the coefficient vector of the
// residue modulo the field polynomial, base p (digit i = coeff of x^i).
using FF = uint32_t;

class Field {
public:
  // Modulus is the lexicographically first monic irreducible of degree m.
  Field(long long p, int m);

  long long p() const { return p_; }
  int m() const { return m_; }
  uint64_t q() const { return q_; }
  const std::vector<long long>& modulus() const { return mod_; }

  FF zero() const { return 0; }
  FF one() const { return 1; }
  FF from_int(long long v) const;  // image of an integer (mod p)
  FF gen() const { return gen_; }  // multiplicative generator

  FF add(FF a, FF b) const;
  FF sub(FF a, FF b) const;
  FF neg(FF a) const;
  FF mul(FF a, FF b) const;
  FF inv(FF a) const;
  FF pow(FF a, uint64_t e) const;
  FF frobenius(FF a, int k = 1) const;      // a^(p^k)
  FF frobenius_inv(FF a, int k = 1) const;  // unique b with b^(p^k) = a

  std::string str(FF a) const;  // human-readable polynomial form

private:
  long long p_;
  int m_;
  uint64_t q_;
  std::vector<long long> mod_;  // monic, length m+1
  std::vector<FF> exp_;         // exp_[i] = gen^i, i in [0, q-1)
  std::vector<uint32_t> log_;   // log_[a] for a != 0
  FF gen_ = 0;

  FF mul_slow(FF a, FF b) const;
};

using FieldPtr = std::shared_ptr<const Field>;

// Guard on field size; configured by EPIWIT_MAX_FIELD_BITS (default 64),
// with an internal hard cap from the table representation.
FieldPtr make_field(long long p, int m);

struct Mat {
  int rows = 0, cols = 0;
  FieldPtr F;
  std::vector<FF> a;

  Mat() = default;
  Mat(FieldPtr f, int r, int c) : rows(r), cols(c), F(std::move(f)), a((size_t)r * c, 0) {}
  static Mat identity(FieldPtr f, int n);

  FF& at(int i, int j) { return a[(size_t)i * cols + j]; }
  FF at(int i, int j) const { return a[(size_t)i * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& x, uint64_t e);
Mat mat_inverse(const Mat& x);  // throws if singular
int mat_rank(Mat x);
Mat mat_transpose(const Mat& x);
bool mat_is_identity(const Mat& x);

// Incremental row space over a field: feed vectors, tracks rank.
class RowSpace {
public:
  RowSpace(FieldPtr f, int width) : F(std::move(f)), width_(width) {}
  // Reduces v against the basis; if independent, inserts it and returns
  // true.  v is modified in place.
  bool insert(std::vector<FF>& v);
  bool contains(std::vector<FF> v) const;
  int rank() const { return (int)rows_.size(); }

private:
  FieldPtr F;
  int width_;
  std::vector<std::vector<FF>> rows_;  // echelon rows
  std::vector<int> pivots_;
  void reduce(std::vector<FF>& v) const;
};

// Dimension of the matrix algebra (with 1) generated by gens under
// multiplication.
int algebra_span_dim(const std::vector<Mat>& gens);

// Jordan block sizes of a unipotent matrix u (descending).
std::vector<int> unipotent_jordan_type(const Mat& u);

}  // namespace epiwit
