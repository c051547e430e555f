#pragma once

// Code constructions: the modified four-circulant generator built from
// blocks A, B, C, J, validated through Theta alone, and the building-up
// extension of an existing self-dual code. Also the census of orthogonal
// mu-circulant matrices that bounds the C-part of the search space.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdcirc/circulant.hpp"
#include "sdcirc/ring.hpp"

namespace sdcirc {

// Parameters (ring, n, lambda, mu, a, b, c) of a candidate [4n,2n] code.
struct FourCirculantParams {
  RingId ring{};
  int n = 0;
  RingElement lambda{};
  RingElement mu{};
  RingVector a, b, c;

  void validate() const {
    const Ring& r = ring_info(ring);
    if (n < 1) throw std::invalid_argument("four_circulant: n must be >= 1");
    if (lambda.ring != ring || mu.ring != ring || a.ring != ring || b.ring != ring || c.ring != ring)
      throw std::invalid_argument("four_circulant: ring mismatch");
    if (!r.is_involutory_unit(lambda.code)) throw std::invalid_argument("four_circulant: lambda^2 != 1");
    if (!r.is_involutory_unit(mu.code)) throw std::invalid_argument("four_circulant: mu^2 != 1");
    if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n) ||
        c.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("four_circulant: generating vectors must have length n");
  }
};

// G = (I_2n | X) with X = ((-A^T C J, -B), (B^T C J, -A)). An optional
// orthogonal matrix may replace the mu-circulant C. Construction alone
// implies nothing; pair with check_four_circulant.
inline RingMatrix build_four_circulant_generator(const FourCirculantParams& p,
                                                 const RingMatrix* c_override = nullptr) {
  p.validate();
  const int n = p.n;
  RingMatrix a = lambda_circulant(p.a, p.lambda);
  RingMatrix b = lambda_circulant(p.b, p.lambda);
  RingMatrix c = c_override ? *c_override : lambda_circulant(p.c, p.mu);
  if (c.rows() != n || c.cols() != n || c.ring() != p.ring)
    throw std::invalid_argument("four_circulant: C block must be n x n over the same ring");
  RingMatrix j = exchange_matrix(p.ring, n);

  RingMatrix atcj = multiply(multiply(transpose(a), c), j);
  RingMatrix btcj = multiply(multiply(transpose(b), c), j);

  RingMatrix x(p.ring, 2 * n, 2 * n);
  const Ring& r = ring_info(p.ring);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      x.at(i, k) = r.neg(atcj.at(i, k));
      x.at(i, n + k) = r.neg(b.at(i, k));
      x.at(n + i, k) = btcj.at(i, k);
      x.at(n + i, n + k) = r.neg(a.at(i, k));
    }
  }
  return hconcat(RingMatrix::identity(p.ring, 2 * n), x);
}

// Necessary and sufficient condition for the generator above to span a
// self-dual [4n,2n] code, evaluated purely through Theta (no matrix is
// ever materialized on this path).
inline bool check_four_circulant(const FourCirculantParams& p) {
  p.validate();
  const RingVector s[2] = {p.a, p.b};
  return satisfies_neg_identity(s, p.lambda) && is_orthogonal_circulant(p.c, p.mu);
}

// Building-up extension data: a generator matrix of a self-dual [2n,n]
// code over the ring, epsilon with epsilon^2 = -1
// and delta in R^2n with <delta,delta> = -1.
struct BuildingUpParams {
  RingMatrix parent;
  RingElement epsilon{};
  RingVector delta;
};

// Extends the parent [2n,n] code to a self-dual [2n+2,n+1] code:
// first row (1, 0, delta), then (-gamma_i, epsilon*gamma_i, r_i) with
// gamma_i = <r_i, delta>. Throws naming the first violated precondition.
// Row self-orthogonality of the parent is verified here; full self-duality
// of the parent (rank of the binary image) is the caller's responsibility.
inline RingMatrix building_up_extend(const BuildingUpParams& p) {
  RingId ring = p.parent.ring();
  const Ring& r = ring_info(ring);
  require_same_ring(ring, p.epsilon.ring, "building_up");
  require_same_ring(ring, p.delta.ring, "building_up");
  if (p.parent.cols() != 2 * p.parent.rows())
    throw std::invalid_argument("building_up: parent must be an n x 2n generator matrix");
  if (r.mul(p.epsilon.code, p.epsilon.code) != r.minus_one())
    throw std::invalid_argument("building_up: epsilon^2 != -1");
  if (p.delta.size() != static_cast<std::size_t>(p.parent.cols()))
    throw std::invalid_argument("building_up: delta must have length 2n");
  if (inner_product(p.delta, p.delta).code != r.minus_one())
    throw std::invalid_argument("building_up: <delta,delta> != -1");
  for (int i = 0; i < p.parent.rows(); ++i)
    for (int k = i; k < p.parent.rows(); ++k)
      if (inner_product(p.parent.row_vector(i), p.parent.row_vector(k)).code != 0)
        throw std::invalid_argument("building_up: parent rows are not self-orthogonal");

  int n = p.parent.rows();
  RingMatrix g(ring, n + 1, 2 * n + 2);
  g.at(0, 0) = 1;
  for (int j = 0; j < 2 * n; ++j) g.at(0, 2 + j) = p.delta.v[j];
  for (int i = 0; i < n; ++i) {
    std::uint8_t gamma = inner_product(p.parent.row_vector(i), p.delta).code;
    g.at(i + 1, 0) = r.neg(gamma);
    g.at(i + 1, 1) = r.mul(p.epsilon.code, gamma);
    for (int j = 0; j < 2 * n; ++j) g.at(i + 1, 2 + j) = p.parent.at(i, j);
  }
  return g;
}

// Number of pairs (mu involutory, c in R^n) whose mu-circulant is
// orthogonal. The published counts follow the pair reading; distinct mu
// can produce the same matrix, and such coincidences are counted per pair.
// Refuses enumerations above `budget` scan steps.
inline std::uint64_t count_orthogonal_circulants(RingId ring, int n,
                                                 std::uint64_t budget = std::uint64_t(1) << 28) {
  if (n < 1) throw std::invalid_argument("count_orthogonal_circulants: n must be >= 1");
  const Ring& r = ring_info(ring);
  double cost = static_cast<double>(r.involutory_count);
  for (int i = 0; i < n; ++i) cost *= r.order;
  if (cost > static_cast<double>(budget))
    throw std::invalid_argument(
        "count_orthogonal_circulants: enumeration of about " + std::to_string(cost) +
        " candidates exceeds the budget of " + std::to_string(budget));

  std::uint64_t total = static_cast<std::uint64_t>(1);
  for (int i = 0; i < n; ++i) total *= r.order;
  std::uint64_t count = 0;
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint8_t>(t % r.order);
      t /= r.order;
    }
    // Theta(c,c,0) = 1 is mu-independent; test it once per vector.
    if (theta_raw(r, c, c, 0, 1) != 1) continue;
    for (std::uint8_t mu : r.involutory_units()) {
      bool ok = true;
      for (std::size_t j = 1; j <= static_cast<std::size_t>(n) / 2; ++j) {
        if (theta_raw(r, c, c, j, mu) != 0) { ok = false; break; }
      }
      if (ok) ++count;
    }
  }
  return count;
}

}  // namespace sdcirc
