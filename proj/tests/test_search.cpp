#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sdcirc/search.hpp"

using namespace sdcirc;

TEST_CASE("splitmix64 reference sequence") {
  // published outputs for seed 0
  SplitMix64 rng(0);
  REQUIRE(rng.next() == 0xE220A8397B1DCDAFULL);
  REQUIRE(rng.next() == 0x6E789E6AA1B965F4ULL);
  REQUIRE(rng.next() == 0x06C45D188009454FULL);

  // below() stays in range and is deterministic
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t bound = 1 + (i % 37);
    std::uint64_t v = a.below(bound);
    REQUIRE(v < bound);
    REQUIRE(v == b.below(bound));
  }

  // worker substreams are distinct but reproducible
  SplitMix64 w0 = worker_stream(7, 0), w1 = worker_stream(7, 1), w0b = worker_stream(7, 0);
  REQUIRE(w0.next() != w1.next());
  REQUIRE(worker_stream(7, 0).next() == w0b.next());
}

TEST_CASE("four-circulant search finds self-dual codes deterministically") {
  SearchConfig cfg;
  cfg.ring = RingId::F2;
  cfg.n = 10;
  cfg.seed = 20260810;
  cfg.workers = 2;
  cfg.max_candidates = 6000;

  std::vector<SearchHit> hits = search_four_circulant(cfg);
  REQUIRE_FALSE(hits.empty());
  std::set<std::string> keys;
  for (const SearchHit& h : hits) {
    REQUIRE(h.bin_n == 40);
    REQUIRE(h.bin_k == 20);
    REQUIRE(is_self_dual(h.generator));
    REQUIRE(h.d >= 2);
    REQUIRE(keys.insert(h.dedup_key).second);  // dedup leaves no repeated key
  }

  // identical config, identical stream
  std::vector<SearchHit> again = search_four_circulant(cfg);
  REQUIRE(again.size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) REQUIRE(hit_line(again[i]) == hit_line(hits[i]));

  // a different seed moves the stream
  cfg.seed = 1;
  std::vector<SearchHit> other = search_four_circulant(cfg);
  bool same = other.size() == hits.size();
  if (same)
    for (std::size_t i = 0; i < hits.size(); ++i)
      if (hit_line(other[i]) != hit_line(hits[i])) same = false;
  REQUIRE_FALSE(same);
}

TEST_CASE("search honors stop conditions") {
  SearchConfig cfg;
  cfg.ring = RingId::F2;
  cfg.n = 4;
  cfg.seed = 3;
  cfg.max_candidates = 0;
  REQUIRE(search_four_circulant(cfg).empty());

  cfg.max_candidates = 5000;
  cfg.max_hits = 2;
  REQUIRE(search_four_circulant(cfg).size() <= 2);
}

TEST_CASE("search hits at family lengths re-verify from their records") {
  SearchConfig cfg;
  cfg.ring = RingId::F4;
  cfg.n = 7;
  cfg.seed = 99;
  cfg.max_candidates = 1500;
  cfg.max_hits = 3;
  cfg.dist_workers = 2;
  std::vector<SearchHit> hits = search_four_circulant(cfg);
  REQUIRE_FALSE(hits.empty());
  for (const SearchHit& h : hits) {
    REQUIRE(h.bin_n == 56);
    // the serialized record rebuilds to the identical binary generator
    Catalog tmp(parse_catalog(format_record(h.record)));
    BitMatrix rebuilt = tmp.binary_image(tmp.records()[0]);
    REQUIRE(rebuilt == h.generator);
  }
}

TEST_CASE("building-up search over a small parent") {
  RingMatrix rep(RingId::F2, 1, 2);
  rep.at(0, 0) = 1;
  rep.at(0, 1) = 1;

  SearchConfig cfg;
  cfg.seed = 5;
  cfg.max_candidates = 64;  // delta space has 4 elements; all get sampled
  std::vector<SearchHit> hits = search_building_up(cfg, rep, "repetition2");
  REQUIRE_FALSE(hits.empty());
  for (const SearchHit& h : hits) {
    REQUIRE(h.bin_n == 4);
    REQUIRE(h.bin_k == 2);
    REQUIRE(is_self_dual(h.generator));
  }

  // a non-self-dual parent is rejected
  RingMatrix bad(RingId::F2, 1, 2);
  bad.at(0, 0) = 1;
  REQUIRE_THROWS_AS(search_building_up(cfg, bad, "bad"), std::invalid_argument);
}

TEST_CASE("requested unit sets are validated") {
  SearchConfig cfg;
  cfg.ring = RingId::F2U;
  cfg.n = 2;
  cfg.lambdas = {2};  // u is not a unit
  REQUIRE_THROWS_AS(search_four_circulant(cfg), std::invalid_argument);
}
