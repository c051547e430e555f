#pragma once

// Shared oracles and generators for the test suites. Everything here is
// deliberately independent of the library's fast paths: matrices are
// materialized, products are computed definitionally.

#include <random>
#include <vector>

#include "sdcirc/bitmatrix.hpp"
#include "sdcirc/circulant.hpp"
#include "sdcirc/construct.hpp"
#include "sdcirc/ring.hpp"

namespace testutil {

using namespace sdcirc;

inline RingVector random_vector(RingId id, int n, std::mt19937_64& rng) {
  const Ring& r = ring_info(id);
  RingVector v{id, std::vector<std::uint8_t>(n)};
  for (int i = 0; i < n; ++i) v.v[i] = static_cast<std::uint8_t>(rng() % r.order);
  return v;
}

inline RingElement random_involutory(RingId id, std::mt19937_64& rng) {
  auto span = ring_info(id).involutory_units();
  return {id, span[rng() % span.size()]};
}

// Definitional check of M == -I over the ring.
inline bool equals_neg_identity(const RingMatrix& m) {
  const Ring& r = ring_info(m.ring());
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? r.minus_one() : 0)) return false;
  return true;
}

inline bool is_zero(const RingMatrix& m) { return m.is_zero(); }

// Random binary self-dual [2m, m] code grown from the [2,1] repetition
// code with the building-up extension (delta over F2 needs odd weight).
inline BitMatrix random_binary_self_dual(int m, std::mt19937_64& rng) {
  RingMatrix g(RingId::F2, 1, 2);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  while (g.rows() < m) {
    RingVector delta{RingId::F2, std::vector<std::uint8_t>(g.cols())};
    int w = 0;
    for (auto& x : delta.v) {
      x = static_cast<std::uint8_t>(rng() & 1);
      w += x;
    }
    if (w % 2 == 0) delta.v[rng() % delta.v.size()] ^= 1;
    g = building_up_extend({g, {RingId::F2, 1}, delta});
  }
  BitMatrix out(0, g.cols());
  for (int i = 0; i < g.rows(); ++i) {
    std::vector<std::uint8_t> bits(g.row(i).begin(), g.row(i).end());
    out.append_row_bits(bits);
  }
  return out;
}

}  // namespace testutil
