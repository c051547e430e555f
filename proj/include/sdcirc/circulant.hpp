#pragma once

// Lambda-circulant matrices, the exchange matrix, and the Theta mapping
// whose floor(n/2)+1 values certify products like A*A^T = -I without
// materializing any matrix.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdcirc/ring.hpp"

namespace sdcirc {

// Dense matrix over one of the five alphabets, row-major. Sizes stay tiny
// (block size n <= 23 in the catalog), so no packing is attempted.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingId ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RingMatrix: negative dimension");
  }

  static RingMatrix identity(RingId ring, int n) {
    RingMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  RingId ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint8_t at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const std::uint8_t> row(int r) const {
    return {e_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  RingVector row_vector(int r) const {
    return {ring_, std::vector<std::uint8_t>(row(r).begin(), row(r).end())};
  }

  bool operator==(const RingMatrix&) const = default;

  bool is_zero() const {
    for (std::uint8_t x : e_)
      if (x) return false;
    return true;
  }

 private:
  RingId ring_{};
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> e_;
};

inline RingMatrix transpose(const RingMatrix& a) {
  RingMatrix t(a.ring(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

inline RingMatrix multiply(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "multiply");
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  const Ring& r = ring_info(a.ring());
  RingMatrix out(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      std::uint8_t aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.at(i, j) = r.add(out.at(i, j), r.mul(aik, b.at(k, j)));
    }
  }
  return out;
}

inline RingMatrix negate(const RingMatrix& a) {
  const Ring& r = ring_info(a.ring());
  RingMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = r.neg(a.at(i, j));
  return out;
}

inline RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "hconcat");
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  RingMatrix out(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

// Generating data of a lambda-circulant matrix. lambda need not be
// involutory for the construction itself; the Theta-based criteria below
// enforce lambda^2 = 1 where they require it.
struct LambdaCirculantSpec {
  RingId ring{};
  RingElement lambda{};
  RingVector gen;
};

// Row 0 is the generating vector; each later row is the previous one
// rotated right with the wrapped entry scaled by lambda.
inline RingMatrix lambda_circulant(const RingVector& gen, RingElement lambda) {
  require_same_ring(gen.ring, lambda.ring, "lambda_circulant");
  require_code(lambda.ring, lambda.code, "lambda_circulant");
  const Ring& r = ring_info(gen.ring);
  int n = static_cast<int>(gen.size());
  RingMatrix a(gen.ring, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint8_t e = gen.v[(j - i + n) % n];
      a.at(i, j) = j < i ? r.mul(lambda.code, e) : e;
    }
  }
  return a;
}

inline RingMatrix lambda_circulant(const LambdaCirculantSpec& spec) {
  return lambda_circulant(spec.gen, spec.lambda);
}

// J_n: entry (i,j) = 1 iff i+j = n+1 in 1-based indexing. Symmetric and
// involutory; multiplication by it reverses row or column order.
inline RingMatrix exchange_matrix(RingId ring, int n) {
  if (n < 1) throw std::invalid_argument("exchange_matrix: n must be >= 1");
  RingMatrix j(ring, n, n);
  for (int i = 0; i < n; ++i) j.at(i, n - 1 - i) = 1;
  return j;
}

// Theta(x, y, j)[lambda] on raw codes. j = 0 gives the plain inner product,
// independent of lambda. The wrapped residue [i+j]_n is handled by two
// straight-line segments, so the hot path has no per-element branching.
inline std::uint8_t theta_raw(const Ring& r, std::span<const std::uint8_t> x,
                              std::span<const std::uint8_t> y, std::size_t j,
                              std::uint8_t lambda) {
  std::size_t n = x.size();
  std::uint8_t head = 0;
  for (std::size_t i = 0; i + j < n; ++i) head = r.add(head, r.mul(x[i + j], y[i]));
  if (j == 0) return head;
  std::uint8_t tail = 0;
  for (std::size_t i = n - j; i < n; ++i) tail = r.add(tail, r.mul(x[i + j - n], y[i]));
  return r.add(head, r.mul(lambda, tail));
}

inline RingElement theta(const RingVector& x, const RingVector& y, std::size_t j,
                         RingElement lambda) {
  require_same_ring(x.ring, y.ring, "theta");
  require_same_ring(x.ring, lambda.ring, "theta");
  if (x.size() != y.size()) throw std::invalid_argument("theta: length mismatch");
  if (j >= x.size()) throw std::invalid_argument("theta: shift out of range");
  require_code(lambda.ring, lambda.code, "theta");
  return {x.ring, theta_raw(ring_info(x.ring), x.v, y.v, j, lambda.code)};
}

inline void require_involutory(RingId ring, std::uint8_t code, const char* what) {
  if (!ring_info(ring).is_involutory_unit(code))
    throw std::invalid_argument(std::string(what) + ": scalar is not an involutory unit");
}

// Generating vector of B*A^T for lambda-circulants A, B: v_j = Theta(b,a,j)[lambda].
inline RingVector circulant_product_vector(const RingVector& b, const RingVector& a,
                                           RingElement lambda) {
  require_same_ring(a.ring, b.ring, "circulant_product_vector");
  require_same_ring(a.ring, lambda.ring, "circulant_product_vector");
  if (a.size() != b.size()) throw std::invalid_argument("circulant_product_vector: length mismatch");
  require_involutory(lambda.ring, lambda.code, "circulant_product_vector");
  const Ring& r = ring_info(a.ring);
  RingVector out{a.ring, std::vector<std::uint8_t>(a.size())};
  for (std::size_t j = 0; j < a.size(); ++j) out.v[j] = theta_raw(r, b.v, a.v, j, lambda.code);
  return out;
}

// True iff sum over x in S of X*X^T equals -I for the lambda-circulants X,
// decided by floor(n/2)+1 Theta values:
//   sum Theta(x,x,0) = -1 and sum Theta(x,x,j)[lambda] = 0 for 1 <= j <= n/2.
inline bool satisfies_neg_identity(std::span<const RingVector> s, RingElement lambda) {
  if (s.empty()) throw std::invalid_argument("satisfies_neg_identity: empty set");
  const Ring& r = ring_info(lambda.ring);
  require_involutory(lambda.ring, lambda.code, "satisfies_neg_identity");
  std::size_t n = s[0].size();
  for (const RingVector& x : s) {
    require_same_ring(x.ring, lambda.ring, "satisfies_neg_identity");
    if (x.size() != n) throw std::invalid_argument("satisfies_neg_identity: length mismatch");
  }
  for (std::size_t j = 0; j <= n / 2; ++j) {
    std::uint8_t sum = 0;
    for (const RingVector& x : s) sum = r.add(sum, theta_raw(r, x.v, x.v, j, lambda.code));
    std::uint8_t want = j == 0 ? r.minus_one() : 0;
    if (sum != want) return false;
  }
  return true;
}

// True iff C*C^T = I for the mu-circulant generated by c, decided via Theta.
inline bool is_orthogonal_circulant(const RingVector& c, RingElement mu) {
  require_same_ring(c.ring, mu.ring, "is_orthogonal_circulant");
  require_involutory(mu.ring, mu.code, "is_orthogonal_circulant");
  const Ring& r = ring_info(c.ring);
  std::size_t n = c.size();
  for (std::size_t j = 0; j <= n / 2; ++j) {
    std::uint8_t want = j == 0 ? 1 : 0;
    if (theta_raw(r, c.v, c.v, j, mu.code) != want) return false;
  }
  return true;
}

}  // namespace sdcirc
