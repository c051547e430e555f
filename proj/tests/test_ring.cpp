#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sdcirc/gray.hpp"
#include "sdcirc/ring.hpp"
#include "test_helpers.hpp"

using namespace sdcirc;

TEST_CASE("ring orders and characteristic") {
  REQUIRE(ring_info(RingId::F2).order == 2);
  REQUIRE(ring_info(RingId::F2U).order == 4);
  REQUIRE(ring_info(RingId::F4).order == 4);
  REQUIRE(ring_info(RingId::R16UV).order == 16);
  REQUIRE(ring_info(RingId::F4U).order == 16);
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    for (int x = 0; x < r.order; ++x) REQUIRE(r.add(x, x) == 0);  // char 2
  }
}

TEST_CASE("ring axioms hold exhaustively") {
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    const int o = r.order;
    for (int x = 0; x < o; ++x) {
      REQUIRE(r.mul(x, 1) == x);
      REQUIRE(r.mul(x, 0) == 0);
      REQUIRE(r.add(x, 0) == x);
      REQUIRE(r.add(x, r.neg(x)) == 0);
      for (int y = 0; y < o; ++y) {
        REQUIRE(r.add(x, y) == r.add(y, x));
        REQUIRE(r.mul(x, y) == r.mul(y, x));
        for (int z = 0; z < o; ++z) {
          REQUIRE(r.add(r.add(x, y), z) == r.add(x, r.add(y, z)));
          REQUIRE(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
          REQUIRE(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("arithmetic spot values") {
  auto e = [](RingId id, int c) { return RingElement{id, static_cast<std::uint8_t>(c)}; };
  // additions
  REQUIRE(ring_add(e(RingId::F4, 2), e(RingId::F4, 3)).code == 1);
  REQUIRE(ring_add(e(RingId::F2U, 1), e(RingId::F2U, 3)).code == 2);
  REQUIRE(ring_add(e(RingId::R16UV, 0x5), e(RingId::R16UV, 0xC)).code == 0x9);
  // products
  REQUIRE(ring_mul(e(RingId::F4, 2), e(RingId::F4, 2)).code == 3);    // w^2 = 1+w
  REQUIRE(ring_mul(e(RingId::F2U, 2), e(RingId::F2U, 2)).code == 0);  // u^2 = 0
  REQUIRE(ring_mul(e(RingId::F4U, 2), e(RingId::F4U, 4)).code == 8);  // w*u = wu
  REQUIRE(ring_mul(e(RingId::R16UV, 6), e(RingId::R16UV, 6)).code == 0);
  // negation is the identity map in characteristic 2, but found generically
  REQUIRE(ring_neg(e(RingId::F2, 1)).code == 1);
  REQUIRE(ring_neg(e(RingId::R16UV, 0xB)).code == 0xB);
  REQUIRE(ring_neg(e(RingId::F4, 0)).code == 0);
  // mismatched rings are rejected
  REQUIRE_THROWS_AS(ring_add(e(RingId::F2, 1), e(RingId::F4, 1)), std::invalid_argument);
  REQUIRE_THROWS_AS(ring_mul(e(RingId::F2, 1), e(RingId::F4, 1)), std::invalid_argument);
}

TEST_CASE("involutory units match a brute-force census") {
  std::map<RingId, std::set<int>> expected = {
      {RingId::F2, {1}},
      {RingId::F4, {1}},
      {RingId::F2U, {1, 3}},
      {RingId::F4U, {1, 5, 9, 13}},
  };
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    std::set<int> brute;
    for (int x = 0; x < r.order; ++x)
      if (r.mul(x, x) == 1) brute.insert(x);
    std::set<int> got;
    for (const RingElement& x : involutory_units(id)) got.insert(x.code);
    REQUIRE(got == brute);
    if (expected.count(id)) REQUIRE(got == expected[id]);
    // every unit not in the set fails the involution test
    for (std::uint8_t u : r.units())
      REQUIRE((r.mul(u, u) == 1) == (got.count(u) != 0));
  }
  REQUIRE(involutory_units(RingId::R16UV).size() == 8);
  REQUIRE(ring_info(RingId::R16UV).unit_count == 8);  // all units are involutory there
}

TEST_CASE("hex codec round trips and rejects bad symbols") {
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    for (int c = 0; c < r.order; ++c) {
      char ch = encode_hex_digit(id, static_cast<std::uint8_t>(c));
      REQUIRE(decode_hex_digit(id, ch, 0) == c);
    }
  }
  RingVector a = parse_vector(RingId::F4, "(1110320)");
  REQUIRE(a.size() == 7);
  REQUIRE(format_vector(a) == "(1110320)");
  RingVector b = parse_vector(RingId::R16UV, "957");
  REQUIRE(b.v == std::vector<std::uint8_t>{9, 5, 7});
  REQUIRE(format_vector(b, false) == "957");

  REQUIRE_THROWS_WITH(parse_vector(RingId::F4, "(14)"),
                      Catch::Matchers::ContainsSubstring("position 1"));
  REQUIRE_THROWS_AS(parse_vector(RingId::F2, "012"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_vector(RingId::F2U, "(x)"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_vector(RingId::F2, "()"), std::invalid_argument);
}

TEST_CASE("inner product") {
  RingVector x{RingId::F2, {1, 1, 0}};
  RingVector y{RingId::F2, {1, 1, 1}};
  REQUIRE(inner_product(x, y).code == 0);
  RingVector z{RingId::F4U, {0, 0, 0, 0}};
  RingVector w{RingId::F4U, {3, 9, 14, 7}};
  REQUIRE(inner_product(w, z).code == 0);
  // <delta,delta> = -1 precondition of the first building-up record
  RingVector delta = parse_vector(RingId::R16UV, "(EBEB4DA6D9A6)");
  REQUIRE(inner_product(delta, delta).code == ring_info(RingId::R16UV).minus_one());
  REQUIRE_THROWS_AS(inner_product(x, w), std::invalid_argument);
  RingVector shorter{RingId::F2, {1}};
  REQUIRE_THROWS_AS(inner_product(x, shorter), std::invalid_argument);
}

TEST_CASE("gray map images") {
  REQUIRE(gray_binary_image({RingId::F2U, {2}}) == std::vector<std::uint8_t>{1, 1});
  REQUIRE(gray_binary_image({RingId::F4, {2}}) == std::vector<std::uint8_t>{1, 0});
  REQUIRE(gray_binary_image({RingId::R16UV, {0}}) == std::vector<std::uint8_t>{0, 0, 0, 0});
  // image of 1 in F4+uF4 under phi o psi, fixed by composing the two maps
  // by hand: 1 = w + (1+w) gives psi image (1,1) over F2+uF2, then phi
  REQUIRE(gray_binary_image({RingId::F4U, {1}}) == std::vector<std::uint8_t>{0, 0, 1, 1});
  // identity on F2
  REQUIRE(gray_binary_image({RingId::F2, {1, 0, 1}}) == std::vector<std::uint8_t>{1, 0, 1});
  // halves concatenation, not interleaving: (u, 0) -> (1,0 | 1,0)
  REQUIRE(gray_binary_image({RingId::F2U, {2, 0}}) == std::vector<std::uint8_t>{1, 0, 1, 0});
}

TEST_CASE("lee weights") {
  REQUIRE(lee_weight({RingId::F2U, {2}}) == 2);
  REQUIRE(lee_weight({RingId::F4, {2, 3}}) == 2);
  for (RingId id : all_rings) {
    RingVector zero{id, std::vector<std::uint8_t>(5, 0)};
    REQUIRE(lee_weight(zero) == 0);
  }
}

TEST_CASE("gray maps are additive and preserve orthogonality") {
  std::mt19937_64 rng(0x5eed0001);
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    for (int trial = 0; trial < 1000; ++trial) {
      int n = 1 + static_cast<int>(rng() % 8);
      RingVector v = testutil::random_vector(id, n, rng);
      RingVector w = testutil::random_vector(id, n, rng);
      // additivity
      RingVector sum{id, std::vector<std::uint8_t>(n)};
      for (int i = 0; i < n; ++i) sum.v[i] = r.add(v.v[i], w.v[i]);
      auto iv = gray_binary_image(v), iw = gray_binary_image(w), is = gray_binary_image(sum);
      for (std::size_t i = 0; i < is.size(); ++i) REQUIRE(is[i] == (iv[i] ^ iw[i]));
      // orthogonality preservation on orthogonal pairs
      if (inner_product(v, w).code == 0) {
        int dot = 0;
        for (std::size_t i = 0; i < iv.size(); ++i) dot ^= iv[i] & iw[i];
        REQUIRE(dot == 0);
      }
    }
  }
}
