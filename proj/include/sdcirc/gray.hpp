#pragma once

// Gray maps onto the binary Hamming space and the Lee weight.
//
// The maps act on whole vectors: the input is split into coefficient
// vectors a, b over the subring and the image is the concatenation of two
// halves, never a per-coordinate interleaving.
//
//   phi  (F2+uF2)^n       -> F2^2n        a+bu       -> (b, a+b)
//   phi  (R16UV)^n        -> (F2+uF2)^2n  a+bv       -> (b, a+b)
//   psi  F4^n             -> F2^2n        aw+b(1+w)  -> (a, b)
//   psi  (F4+uF4)^n       -> (F2+uF2)^2n  aw+b(1+w)  -> (a, b)
//
// Binary images: F2 = identity, F2+uF2 = phi, F4 = psi,
// R16UV = phi o phi, F4+uF4 = phi o psi.

#include <cstdint>
#include <span>
#include <vector>

#include "sdcirc/ring.hpp"

namespace sdcirc {

// (F2+uF2)^n -> F2^2n, a+bu -> (b, a+b)
inline std::vector<std::uint8_t> map_phi_f2u(std::span<const std::uint8_t> v) {
  std::size_t n = v.size();
  std::vector<std::uint8_t> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t a = v[i] & 1, b = (v[i] >> 1) & 1;
    out[i] = b;
    out[n + i] = a ^ b;
  }
  return out;
}

// F4^n -> F2^2n, aw+b(1+w) -> (a, b); element c0+c1*w has b=c0, a=c0^c1
inline std::vector<std::uint8_t> map_psi_f4(std::span<const std::uint8_t> v) {
  std::size_t n = v.size();
  std::vector<std::uint8_t> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t c0 = v[i] & 1, c1 = (v[i] >> 1) & 1;
    out[i] = c0 ^ c1;
    out[n + i] = c0;
  }
  return out;
}

// (R16UV)^n -> (F2+uF2)^2n, a+bv -> (b, a+b) with a,b over F2+uF2
inline std::vector<std::uint8_t> map_phi_r16uv(std::span<const std::uint8_t> v) {
  std::size_t n = v.size();
  std::vector<std::uint8_t> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t a = v[i] & 3, b = (v[i] >> 2) & 3;
    out[i] = b;
    out[n + i] = a ^ b;
  }
  return out;
}

// (F4+uF4)^n -> (F2+uF2)^2n, aw+b(1+w) -> (a, b) with a,b over F2+uF2.
// Element x + y*u with x = x0+x1*w, y = y0+y1*w rewrites as P + Q*w over
// F2+uF2 where P = x0+y0*u, Q = x1+y1*u; then b = P and a = P+Q.
inline std::vector<std::uint8_t> map_psi_f4u(std::span<const std::uint8_t> v) {
  std::size_t n = v.size();
  std::vector<std::uint8_t> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t e = v[i];
    std::uint8_t x0 = e & 1, x1 = (e >> 1) & 1, y0 = (e >> 2) & 1, y1 = (e >> 3) & 1;
    std::uint8_t p = static_cast<std::uint8_t>(x0 | (y0 << 1));
    std::uint8_t q = static_cast<std::uint8_t>(x1 | (y1 << 1));
    out[i] = p ^ q;
    out[n + i] = p;
  }
  return out;
}

// Composition landing in F2^(gray_width * n).
inline std::vector<std::uint8_t> gray_binary_image(const RingVector& x) {
  switch (x.ring) {
    case RingId::F2: return x.v;
    case RingId::F2U: return map_phi_f2u(x.v);
    case RingId::F4: return map_psi_f4(x.v);
    case RingId::R16UV: return map_phi_f2u(map_phi_r16uv(x.v));
    case RingId::F4U: return map_phi_f2u(map_psi_f4u(x.v));
  }
  throw std::invalid_argument("gray_binary_image: bad ring");
}

// Lee weight: Hamming weight of the binary image.
inline int lee_weight(const RingVector& x) {
  int w = 0;
  for (std::uint8_t bit : gray_binary_image(x)) w += bit;
  return w;
}

}  // namespace sdcirc
