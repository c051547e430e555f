#pragma once

// Arithmetic for the five code alphabets: F2, F2+uF2, F2+uF2+vF2+uvF2,
// F4 and F4+uF4. Elements are carried as 4-bit hex codes where bit k is
// the coefficient of the k-th basis monomial of the ring (see RingId).
// All five rings have characteristic 2, so addition is XOR on the codes;
// multiplication is served from tables generated at compile time from the
// defining relations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdcirc {

enum class RingId : std::uint8_t {
  F2,     // {0,1}
  F2U,    // F2[u]/(u^2), basis 1,u
  R16UV,  // F2[u,v]/(u^2,v^2,uv+vu), basis 1,u,v,uv
  F4,     // F2[w]/(w^2+w+1), basis 1,w
  F4U,    // F4[u]/(u^2), basis 1,w,u,wu
};

inline constexpr std::array<RingId, 5> all_rings = {
    RingId::F2, RingId::F2U, RingId::R16UV, RingId::F4, RingId::F4U};

namespace detail {

constexpr std::uint8_t mul_f2(std::uint8_t a, std::uint8_t b) { return a & b; }

// (a0 + a1 u)(b0 + b1 u) with u^2 = 0
constexpr std::uint8_t mul_f2u(std::uint8_t a, std::uint8_t b) {
  std::uint8_t a0 = a & 1, a1 = (a >> 1) & 1;
  std::uint8_t b0 = b & 1, b1 = (b >> 1) & 1;
  return static_cast<std::uint8_t>((a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1));
}

// basis 1,u,v,uv with u^2 = v^2 = 0 and uv = vu
constexpr std::uint8_t mul_r16uv(std::uint8_t a, std::uint8_t b) {
  std::uint8_t a0 = a & 1, a1 = (a >> 1) & 1, a2 = (a >> 2) & 1, a3 = (a >> 3) & 1;
  std::uint8_t b0 = b & 1, b1 = (b >> 1) & 1, b2 = (b >> 2) & 1, b3 = (b >> 3) & 1;
  std::uint8_t c0 = a0 & b0;
  std::uint8_t c1 = (a0 & b1) ^ (a1 & b0);
  std::uint8_t c2 = (a0 & b2) ^ (a2 & b0);
  std::uint8_t c3 = static_cast<std::uint8_t>((a0 & b3) ^ (a3 & b0) ^ (a1 & b2) ^ (a2 & b1));
  return static_cast<std::uint8_t>(c0 | (c1 << 1) | (c2 << 2) | (c3 << 3));
}

// (a0 + a1 w)(b0 + b1 w) with w^2 = 1 + w
constexpr std::uint8_t mul_f4(std::uint8_t a, std::uint8_t b) {
  std::uint8_t a0 = a & 1, a1 = (a >> 1) & 1;
  std::uint8_t b0 = b & 1, b1 = (b >> 1) & 1;
  std::uint8_t c0 = (a0 & b0) ^ (a1 & b1);
  std::uint8_t c1 = static_cast<std::uint8_t>((a0 & b1) ^ (a1 & b0) ^ (a1 & b1));
  return static_cast<std::uint8_t>(c0 | (c1 << 1));
}

// (x1 + y1 u)(x2 + y2 u) with x,y in F4 and u^2 = 0
constexpr std::uint8_t mul_f4u(std::uint8_t a, std::uint8_t b) {
  std::uint8_t x1 = a & 3, y1 = (a >> 2) & 3;
  std::uint8_t x2 = b & 3, y2 = (b >> 2) & 3;
  std::uint8_t z = mul_f4(x1, x2);
  std::uint8_t w = mul_f4(x1, y2) ^ mul_f4(y1, x2);
  return static_cast<std::uint8_t>(z | (w << 2));
}

constexpr std::uint8_t mul_dispatch(RingId id, std::uint8_t a, std::uint8_t b) {
  switch (id) {
    case RingId::F2: return mul_f2(a, b);
    case RingId::F2U: return mul_f2u(a, b);
    case RingId::R16UV: return mul_r16uv(a, b);
    case RingId::F4: return mul_f4(a, b);
    case RingId::F4U: return mul_f4u(a, b);
  }
  return 0;
}

}  // namespace detail

// Precomputed descriptor of one alphabet: order, operation tables, unit
// structure and the additive F2-module basis used for binary row closures.
class Ring {
 public:
  RingId id{};
  std::uint8_t order{};
  const char* name = "";   // display name, e.g. "F2+uF2+vF2+uvF2"
  const char* token = "";  // short token used by the CLI and catalog, e.g. "F2uv"
  int gray_width{};        // binary image length per symbol: 1, 2 or 4

  std::uint8_t add_table[16][16] = {};
  std::uint8_t mul_table[16][16] = {};
  std::uint8_t neg_table[16] = {};

  std::uint8_t module_basis[4] = {};  // codes of the basis monomials
  int module_rank{};                  // log2(order)

  std::uint8_t unit_list[16] = {};
  int unit_count{};
  std::uint8_t involutory_list[16] = {};
  int involutory_count{};

  constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_table[a][b]; }
  constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_table[a][b]; }
  constexpr std::uint8_t neg(std::uint8_t a) const { return neg_table[a]; }
  constexpr std::uint8_t one() const { return 1; }
  constexpr std::uint8_t minus_one() const { return neg_table[1]; }

  constexpr bool is_unit(std::uint8_t a) const {
    for (int i = 0; i < unit_count; ++i)
      if (unit_list[i] == a) return true;
    return false;
  }
  constexpr bool is_involutory_unit(std::uint8_t a) const { return mul(a, a) == 1; }

  std::span<const std::uint8_t> units() const { return {unit_list, static_cast<std::size_t>(unit_count)}; }
  std::span<const std::uint8_t> involutory_units() const {
    return {involutory_list, static_cast<std::size_t>(involutory_count)};
  }
  std::span<const std::uint8_t> basis() const {
    return {module_basis, static_cast<std::size_t>(module_rank)};
  }
};

namespace detail {

constexpr Ring make_ring(RingId id) {
  Ring r{};
  r.id = id;
  switch (id) {
    case RingId::F2:
      r.order = 2; r.name = "F2"; r.token = "F2"; r.gray_width = 1;
      r.module_rank = 1; r.module_basis[0] = 1;
      break;
    case RingId::F2U:
      r.order = 4; r.name = "F2+uF2"; r.token = "F2u"; r.gray_width = 2;
      r.module_rank = 2; r.module_basis[0] = 1; r.module_basis[1] = 2;
      break;
    case RingId::R16UV:
      r.order = 16; r.name = "F2+uF2+vF2+uvF2"; r.token = "F2uv"; r.gray_width = 4;
      r.module_rank = 4;
      r.module_basis[0] = 1; r.module_basis[1] = 2; r.module_basis[2] = 4; r.module_basis[3] = 8;
      break;
    case RingId::F4:
      r.order = 4; r.name = "F4"; r.token = "F4"; r.gray_width = 2;
      r.module_rank = 2; r.module_basis[0] = 1; r.module_basis[1] = 2;
      break;
    case RingId::F4U:
      r.order = 16; r.name = "F4+uF4"; r.token = "F4u"; r.gray_width = 4;
      r.module_rank = 4;
      r.module_basis[0] = 1; r.module_basis[1] = 2; r.module_basis[2] = 4; r.module_basis[3] = 8;
      break;
  }
  for (int a = 0; a < r.order; ++a) {
    for (int b = 0; b < r.order; ++b) {
      r.add_table[a][b] = static_cast<std::uint8_t>(a ^ b);  // char 2
      r.mul_table[a][b] = mul_dispatch(id, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
    }
  }
  // neg(x) is the additive inverse found by scanning, not assumed to be x
  for (int a = 0; a < r.order; ++a) {
    for (int b = 0; b < r.order; ++b) {
      if (r.add_table[a][b] == 0) { r.neg_table[a] = static_cast<std::uint8_t>(b); break; }
    }
  }
  for (int a = 0; a < r.order; ++a) {
    bool unit = false;
    for (int b = 0; b < r.order; ++b)
      if (r.mul_table[a][b] == 1) { unit = true; break; }
    if (unit) r.unit_list[r.unit_count++] = static_cast<std::uint8_t>(a);
    if (r.mul_table[a][a] == 1) r.involutory_list[r.involutory_count++] = static_cast<std::uint8_t>(a);
  }
  return r;
}

inline constexpr std::array<Ring, 5> ring_table = {
    make_ring(RingId::F2), make_ring(RingId::F2U), make_ring(RingId::R16UV),
    make_ring(RingId::F4), make_ring(RingId::F4U)};

}  // namespace detail

inline const Ring& ring_info(RingId id) { return detail::ring_table[static_cast<std::size_t>(id)]; }

// Resolves a CLI/catalog ring token ("F2", "F2u", "F2uv", "F4", "F4u").
inline RingId ring_from_token(std::string_view token) {
  for (RingId id : all_rings)
    if (token == ring_info(id).token) return id;
  throw std::invalid_argument("unknown ring token '" + std::string(token) + "'");
}

struct RingElement {
  RingId ring{};
  std::uint8_t code{};
  bool operator==(const RingElement&) const = default;
};

struct RingVector {
  RingId ring{};
  std::vector<std::uint8_t> v;
  std::size_t size() const { return v.size(); }
  bool operator==(const RingVector&) const = default;
};

inline void require_same_ring(RingId a, RingId b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

inline void require_code(RingId id, std::uint8_t code, const char* what) {
  if (code >= ring_info(id).order)
    throw std::invalid_argument(std::string(what) + ": code out of range for " + ring_info(id).name);
}

inline RingElement ring_add(RingElement x, RingElement y) {
  require_same_ring(x.ring, y.ring, "ring_add");
  require_code(x.ring, x.code, "ring_add");
  require_code(y.ring, y.code, "ring_add");
  return {x.ring, ring_info(x.ring).add(x.code, y.code)};
}

inline RingElement ring_mul(RingElement x, RingElement y) {
  require_same_ring(x.ring, y.ring, "ring_mul");
  require_code(x.ring, x.code, "ring_mul");
  require_code(y.ring, y.code, "ring_mul");
  return {x.ring, ring_info(x.ring).mul(x.code, y.code)};
}

inline RingElement ring_neg(RingElement x) {
  require_code(x.ring, x.code, "ring_neg");
  return {x.ring, ring_info(x.ring).neg(x.code)};
}

// Exactly the elements with x*x = 1, found by exhaustive scan of the ring.
inline std::vector<RingElement> involutory_units(RingId id) {
  std::vector<RingElement> out;
  for (std::uint8_t c : ring_info(id).involutory_units()) out.push_back({id, c});
  return out;
}

// ---- hex codec (notation table of the catalog) ----

inline char encode_hex_digit(RingId id, std::uint8_t code) {
  require_code(id, code, "encode_hex_digit");
  return code < 10 ? static_cast<char>('0' + code) : static_cast<char>('A' + code - 10);
}

inline std::uint8_t decode_hex_digit(RingId id, char ch, std::size_t position) {
  int value = -1;
  if (ch >= '0' && ch <= '9') value = ch - '0';
  else if (ch >= 'A' && ch <= 'F') value = ch - 'A' + 10;
  else if (ch >= 'a' && ch <= 'f') value = ch - 'a' + 10;
  if (value < 0 || value >= ring_info(id).order)
    throw std::invalid_argument("invalid symbol '" + std::string(1, ch) + "' for " +
                                ring_info(id).name + " at position " + std::to_string(position));
  return static_cast<std::uint8_t>(value);
}

// Parses a vector written as hex symbols, optionally wrapped in parentheses,
// e.g. "(957)". Order matches left-to-right text order.
inline RingVector parse_vector(RingId id, std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) throw std::invalid_argument("empty vector literal");
  RingVector out{id, {}};
  out.v.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) out.v.push_back(decode_hex_digit(id, body[i], i));
  return out;
}

inline std::string format_vector(const RingVector& x, bool parenthesized = true) {
  std::string s;
  if (parenthesized) s.push_back('(');
  for (std::uint8_t c : x.v) s.push_back(encode_hex_digit(x.ring, c));
  if (parenthesized) s.push_back(')');
  return s;
}

// Euclidean inner product <x,y> = sum x_i y_i.
inline RingElement inner_product(const RingVector& x, const RingVector& y) {
  require_same_ring(x.ring, y.ring, "inner_product");
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
  const Ring& r = ring_info(x.ring);
  std::uint8_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = r.add(acc, r.mul(x.v[i], y.v[i]));
  return {x.ring, acc};
}

inline RingVector scaled(const RingVector& x, std::uint8_t m) {
  const Ring& r = ring_info(x.ring);
  RingVector out{x.ring, std::vector<std::uint8_t>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) out.v[i] = r.mul(m, x.v[i]);
  return out;
}

}  // namespace sdcirc
