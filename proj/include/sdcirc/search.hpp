#pragma once

// Seeded random search for construction parameters. Reproducibility
// contract: worker i consumes an independent SplitMix64 substream derived
// from the config seed, candidates are ranked (worker, index), and the
// collector merges in that order before deduplication, so identical
// configs produce identical hit streams. Wall-clock limits are the one
// stop condition that can truncate runs non-reproducibly.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sdcirc/bitmatrix.hpp"
#include "sdcirc/catalog.hpp"
#include "sdcirc/construct.hpp"
#include "sdcirc/wdist.hpp"

namespace sdcirc {

// SplitMix64 (Steele, Lea, Flood): state advances by the golden-gamma
// constant, outputs are a finalizing mix of the state. Chosen because the
// whole generator is these few lines, which keeps runs replicable across
// implementations.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Unbiased draw from [0, bound) by masked rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t(0) >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }
};

// Worker i draws from SplitMix64 seeded with the (i+1)-th output of a
// master SplitMix64 seeded with the config seed.
inline SplitMix64 worker_stream(std::uint64_t seed, int worker) {
  SplitMix64 master(seed);
  std::uint64_t s = 0;
  for (int i = 0; i <= worker; ++i) s = master.next();
  return SplitMix64(s);
}

struct SearchConfig {
  RingId ring = RingId::F2;
  int n = 0;
  std::vector<std::uint8_t> lambdas;  // empty = all involutory units
  std::vector<std::uint8_t> mus;      // empty = all involutory units
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t max_candidates = 100000;  // total across workers
  std::uint64_t max_hits = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  bool use_c_pool = true;                      // pre-enumerate orthogonal (mu, c) pairs
  std::uint64_t c_pool_budget = std::uint64_t(1) << 24;
  int dist_workers = 1;  // threads used to measure one surviving candidate
};

struct SearchHit {
  int worker = 0;
  std::uint64_t rank = 0;  // candidate index within the worker's stream
  CatalogRecord record;    // reconstructible parameters + measured values
  int bin_n = 0, bin_k = 0, d = 0;
  std::optional<long long> alpha, beta;
  std::string family;  // "-" when outside the published families
  std::string dedup_key;
  BitMatrix generator;
};

// One canonical line per hit; used for reports and byte-for-byte
// determinism comparisons.
inline std::string hit_line(const SearchHit& h) {
  std::ostringstream os;
  os << "worker=" << h.worker << " rank=" << h.rank << " [" << h.bin_n << "," << h.bin_k << ","
     << h.d << "] family=" << h.family;
  if (h.alpha) os << " alpha=" << *h.alpha;
  if (h.beta) os << " beta=" << *h.beta;
  os << " | " << format_record(h.record);
  return os.str();
}

namespace detail {

inline std::vector<std::uint8_t> resolve_unit_set(RingId ring, const std::vector<std::uint8_t>& req,
                                                  const char* what) {
  const Ring& r = ring_info(ring);
  if (req.empty()) {
    auto all = r.involutory_units();
    return {all.begin(), all.end()};
  }
  for (std::uint8_t u : req)
    if (!r.is_involutory_unit(u))
      throw std::invalid_argument(std::string(what) + ": " + std::string(1, encode_hex_digit(ring, u)) +
                                  " is not an involutory unit");
  return req;
}

inline RingVector draw_vector(RingId ring, int n, SplitMix64& rng) {
  const Ring& r = ring_info(ring);
  RingVector v{ring, std::vector<std::uint8_t>(n)};
  for (int i = 0; i < n; ++i) v.v[i] = static_cast<std::uint8_t>(rng.below(r.order));
  return v;
}

// Measure a verified self-dual binary generator: minimum distance, then
// family parameters when the length has published families.
inline void measure_hit(SearchHit& h, const BitMatrix& image, int dist_workers) {
  h.bin_n = image.cols();
  h.bin_k = image.rows();
  if (!is_self_dual(image)) throw std::logic_error("search: emitted candidate is not self-dual");
  WeightDistribution dist;
  if (h.bin_k <= 28) {
    dist = full_weight_distribution(image, 28, dist_workers);
  } else {
    h.d = min_distance(image, 28, dist_workers);
    int w_max = std::max(verify_w_max(h.bin_n, false), h.d + 2);
    dist = low_weight_distribution(image, w_max, dist_workers);
  }
  h.d = dist.smallest_nonzero_weight();
  h.family = "-";
  try {
    FamilyParams fp = extract_family_params(h.bin_n, dist);
    h.alpha = fp.alpha;
    h.beta = fp.beta;
    if (fp.family) h.family = family_name(*fp.family);
  } catch (const std::exception&) {
    // no published family at this length or counts outside every variant
  }
  std::ostringstream key;
  key << h.bin_n << ";" << h.family << ";";
  if (h.alpha) key << *h.alpha;
  key << ";";
  if (h.beta) key << *h.beta;
  if (h.family == "-") key << ";d=" << h.d << ";A" << h.d << "=" << dist.at(h.d) << ";A" << h.d + 2
                           << "=" << dist.at(h.d + 2);
  h.dedup_key = key.str();
  h.generator = image;
  // stash measured values in the record so serialized hits re-verify
  h.record.family_str = h.family;
  h.record.alpha = h.alpha.value_or(0);
  h.record.beta = h.beta;
  h.record.d = h.d;
  h.record.aut = "-";
}

// Deterministic collector: order by (worker, rank), drop later duplicates
// of the same dedup key, truncate to max_hits.
inline std::vector<SearchHit> collect(std::vector<std::vector<SearchHit>> per_worker,
                                      std::uint64_t max_hits) {
  std::vector<SearchHit> merged;
  for (auto& hits : per_worker)
    for (auto& h : hits) merged.push_back(std::move(h));
  std::sort(merged.begin(), merged.end(), [](const SearchHit& a, const SearchHit& b) {
    return a.worker != b.worker ? a.worker < b.worker : a.rank < b.rank;
  });
  std::vector<SearchHit> out;
  std::vector<std::string> seen;
  for (auto& h : merged) {
    bool dup = false;
    for (const std::string& k : seen)
      if (k == h.dedup_key) { dup = true; break; }
    if (dup) continue;
    seen.push_back(h.dedup_key);
    out.push_back(std::move(h));
    if (out.size() >= max_hits) break;
  }
  return out;
}

}  // namespace detail

// Orthogonal (mu, c) pool for the C block. Falls back to empty (caller
// then rejection-samples) when enumeration would exceed the budget.
inline std::vector<std::pair<std::uint8_t, RingVector>> orthogonal_circulant_pool(
    RingId ring, int n, const std::vector<std::uint8_t>& mus, std::uint64_t budget) {
  const Ring& r = ring_info(ring);
  double cost = static_cast<double>(mus.size());
  for (int i = 0; i < n; ++i) cost *= r.order;
  if (cost > static_cast<double>(budget)) return {};
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= r.order;
  std::vector<std::pair<std::uint8_t, RingVector>> pool;
  RingVector c{ring, std::vector<std::uint8_t>(n)};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < n; ++i) {
      c.v[i] = static_cast<std::uint8_t>(t % r.order);
      t /= r.order;
    }
    for (std::uint8_t mu : mus)
      if (is_orthogonal_circulant(c, {ring, mu})) pool.emplace_back(mu, c);
  }
  return pool;
}

// Random search over (lambda, mu, a, b, c): candidates are fast-rejected
// through the Theta conditions alone; survivors are built, checked
// self-dual, measured, and deduplicated by (length, family, alpha, beta).
inline std::vector<SearchHit> search_four_circulant(const SearchConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("search: n must be >= 1");
  const Ring& r = ring_info(cfg.ring);
  std::vector<std::uint8_t> lambdas = detail::resolve_unit_set(cfg.ring, cfg.lambdas, "lambda set");
  std::vector<std::uint8_t> mus = detail::resolve_unit_set(cfg.ring, cfg.mus, "mu set");
  std::vector<std::pair<std::uint8_t, RingVector>> pool;
  if (cfg.use_c_pool) pool = orthogonal_circulant_pool(cfg.ring, cfg.n, mus, cfg.c_pool_budget);

  auto t0 = std::chrono::steady_clock::now();
  int workers = std::max(1, cfg.workers);
  std::vector<std::vector<SearchHit>> results(workers);

  auto run_worker = [&](int w) {
    SplitMix64 rng = worker_stream(cfg.seed, w);
    std::uint64_t quota = cfg.max_candidates / workers +
                          (static_cast<std::uint64_t>(w) < cfg.max_candidates % workers ? 1 : 0);
    for (std::uint64_t rank = 0; rank < quota; ++rank) {
      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
          cfg.max_seconds)
        break;
      RingElement lambda{cfg.ring, lambdas[rng.below(lambdas.size())]};
      RingElement mu{cfg.ring, 1};
      RingVector c;
      if (!pool.empty()) {
        const auto& pick = pool[rng.below(pool.size())];
        mu = {cfg.ring, pick.first};
        c = pick.second;
      } else {
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
          mu = {cfg.ring, mus[rng.below(mus.size())]};
          c = detail::draw_vector(cfg.ring, cfg.n, rng);
          found = is_orthogonal_circulant(c, mu);
        }
        if (!found) continue;
      }
      RingVector a = detail::draw_vector(cfg.ring, cfg.n, rng);
      RingVector b = detail::draw_vector(cfg.ring, cfg.n, rng);
      const RingVector s[2] = {a, b};
      if (!satisfies_neg_identity(s, lambda)) continue;

      FourCirculantParams params{cfg.ring, cfg.n, lambda, mu, a, b, c};
      SearchHit hit;
      hit.worker = w;
      hit.rank = rank;
      hit.record.id = "S_" + std::to_string(w) + "." + std::to_string(rank);
      hit.record.cons = CatalogRecord::Construction::FourCirculant;
      hit.record.ring = cfg.ring;
      hit.record.n = cfg.n;
      hit.record.lambda_hex = std::string(1, encode_hex_digit(cfg.ring, lambda.code));
      hit.record.mu_hex = std::string(1, encode_hex_digit(cfg.ring, mu.code));
      hit.record.a_hex = format_vector(a, false);
      hit.record.b_hex = format_vector(b, false);
      hit.record.c_hex = format_vector(c, false);
      detail::measure_hit(hit, binary_generator(build_four_circulant_generator(params)),
                          cfg.dist_workers);
      results[w].push_back(std::move(hit));
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }
  return detail::collect(std::move(results), cfg.max_hits);
}

// Random building-up extensions of a verified self-dual parent code over
// its ring: epsilon ranges over the square roots of -1, delta is sampled
// until <delta,delta> = -1.
inline std::vector<SearchHit> search_building_up(const SearchConfig& cfg, const RingMatrix& parent,
                                                 const std::string& parent_label) {
  RingId ring = parent.ring();
  const Ring& r = ring_info(ring);
  if (parent.cols() != 2 * parent.rows())
    throw std::invalid_argument("search: parent must be an n x 2n generator matrix");
  if (!multiply(parent, transpose(parent)).is_zero() || !is_self_dual(binary_generator(parent)))
    throw std::invalid_argument("search: parent is not a self-dual code");

  std::vector<std::uint8_t> epsilons;
  for (std::uint8_t u : r.involutory_units())
    if (r.mul(u, u) == r.minus_one()) epsilons.push_back(u);

  auto t0 = std::chrono::steady_clock::now();
  int workers = std::max(1, cfg.workers);
  std::vector<std::vector<SearchHit>> results(workers);

  auto run_worker = [&](int w) {
    SplitMix64 rng = worker_stream(cfg.seed, w);
    std::uint64_t quota = cfg.max_candidates / workers +
                          (static_cast<std::uint64_t>(w) < cfg.max_candidates % workers ? 1 : 0);
    for (std::uint64_t rank = 0; rank < quota; ++rank) {
      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >
          cfg.max_seconds)
        break;
      RingElement eps{ring, epsilons[rng.below(epsilons.size())]};
      RingVector delta;
      bool found = false;
      for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        delta = detail::draw_vector(ring, parent.cols(), rng);
        found = inner_product(delta, delta).code == r.minus_one();
      }
      if (!found) continue;

      SearchHit hit;
      hit.worker = w;
      hit.rank = rank;
      hit.record.id = "S_" + std::to_string(w) + "." + std::to_string(rank);
      hit.record.cons = CatalogRecord::Construction::BuildingUp;
      hit.record.parent_id = parent_label;
      hit.record.epsilon_hex = std::string(1, encode_hex_digit(ring, eps.code));
      hit.record.delta_hex = format_vector(delta, false);
      detail::measure_hit(hit, binary_generator(building_up_extend({parent, eps, delta})),
                          cfg.dist_workers);
      results[w].push_back(std::move(hit));
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }
  return detail::collect(std::move(results), cfg.max_hits);
}

}  // namespace sdcirc
