// Acceptance suite: rebuilds and measures the reference codes and runs the
// statistical property suites, one pass/fail line per criterion. All
// comparisons are exact integer equality. Exit code = number of failures.
//
// Usage: acceptance [--criterion N] [--extended] [--workers W]
//   --criterion N  run only criterion N
//   --extended     criterion 8 additionally measures A_18 (about 1e9
//                  enumeration steps per side)
//   --workers W    thread count for the enumeration kernels

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "sdcirc/sdcirc.hpp"
#include "test_helpers.hpp"

using namespace sdcirc;

namespace {

struct Check {
  std::vector<std::string> failures;
  void require(bool cond, const std::string& msg) {
    if (!cond) failures.push_back(msg);
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    if (!(a == static_cast<A>(b))) {
      std::ostringstream os;
      os << what << ": got " << a << ", expected " << b;
      failures.push_back(os.str());
    }
  }
};

struct Options {
  int only = 0;
  bool extended = false;
  int workers = 2;
};

Options g_opt;

WeightDistribution measure(const char* id, int w_max) {
  const Catalog& cat = Catalog::embedded();
  BitMatrix image = cat.binary_image(cat.at(id));
  if (!is_self_dual(image)) throw std::runtime_error(std::string(id) + ": image not self-dual");
  return low_weight_distribution(image, w_max, g_opt.workers);
}

// --- criterion bodies ---

void criterion_rings(Check& c) {
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    for (int x = 0; x < r.order; ++x) {
      c.require(r.add(x, x) == 0, "char 2");
      c.require(r.mul(x, 1) == x, "unity");
      for (int y = 0; y < r.order; ++y) {
        c.require(r.add(x, y) == r.add(y, x), "add comm");
        c.require(r.mul(x, y) == r.mul(y, x), "mul comm");
        for (int z = 0; z < r.order; ++z) {
          c.require(r.add(r.add(x, y), z) == r.add(x, r.add(y, z)), "add assoc");
          c.require(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)), "mul assoc");
          c.require(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)), "distributivity");
        }
      }
    }
  }
  auto count = [](RingId id) { return involutory_units(id).size(); };
  c.equal(count(RingId::F2), std::size_t(1), "involutory units of F2");
  c.equal(count(RingId::F4), std::size_t(1), "involutory units of F4");
  c.equal(count(RingId::F2U), std::size_t(2), "involutory units of F2+uF2");
  c.equal(count(RingId::F4U), std::size_t(4), "involutory units of F4+uF4");
  c.equal(count(RingId::R16UV), std::size_t(8), "involutory units of the order-16 ring");
  // brute-force oracle for the counts
  for (RingId id : all_rings) {
    const Ring& r = ring_info(id);
    std::size_t brute = 0;
    for (int x = 0; x < r.order; ++x)
      if (r.mul(x, x) == 1) ++brute;
    c.equal(count(id), brute, "involutory census vs brute force");
  }
}

void criterion_theta_oracle(Check& c) {
  std::mt19937_64 rng(0xACC3);
  for (int trial = 0; trial < 1000; ++trial) {
    RingId id = all_rings[rng() % all_rings.size()];
    const Ring& r = ring_info(id);
    int n = 1 + static_cast<int>(rng() % 8);
    RingElement lam = testutil::random_involutory(id, rng);
    RingVector a = testutil::random_vector(id, n, rng);
    RingVector b = testutil::random_vector(id, n, rng);
    RingVector v = circulant_product_vector(b, a, lam);
    RingMatrix prod = multiply(lambda_circulant(b, lam), transpose(lambda_circulant(a, lam)));
    c.require(prod.row_vector(0) == v, "product vector != first row of B A^T");
    c.require(lambda_circulant(v, lam) == prod, "B A^T is not the lambda-circulant of v");
    for (int j = 1; j < n; ++j) {
      std::uint8_t lhs = theta(a, b, j, lam).code;
      std::uint8_t rhs = r.mul(lam.code, theta(b, a, n - j, lam).code);
      c.require(lhs == rhs, "theta symmetry lemma");
    }
  }
}

void criterion_census(Check& c) {
  c.equal(count_orthogonal_circulants(RingId::F2, 20), std::uint64_t(2560), "N_C(F2, 20)");
  c.equal(count_orthogonal_circulants(RingId::R16UV, 5), std::uint64_t(20480),
          "N_C(order-16 ring, 5)");
}

void criterion_c56(Check& c) {
  const Catalog& cat = Catalog::embedded();
  BitMatrix image = cat.binary_image(cat.at("C_56,1"));
  c.equal(image.cols(), 56, "length");
  c.equal(image.rows(), 28, "dimension");
  c.require(is_self_dual(image), "self-duality");
  WeightDistribution dist = full_weight_distribution(image, 32, g_opt.workers);
  c.equal(dist.smallest_nonzero_weight(), 10, "d");
  c.equal(dist.at(10), std::uint64_t(112), "A_10");
  c.equal(dist.at(12), std::uint64_t(4382), "A_12");
  FamilyParams fp = extract_family_params(56, dist);
  c.require(fp.family == WeightFamily::W56_2, "family");
  c.equal(fp.alpha, -49, "alpha");
}

void criterion_c58(Check& c) {
  const Catalog& cat = Catalog::embedded();
  BitMatrix image = cat.binary_image(cat.at("C_58,1"));
  c.equal(image.cols(), 58, "length");
  c.equal(image.rows(), 29, "dimension");
  c.require(is_self_dual(image), "self-duality");
  WeightDistribution dist = full_weight_distribution(image, 32, g_opt.workers);  // 2^29 codewords
  c.equal(dist.smallest_nonzero_weight(), 10, "d");
  c.equal(dist.at(10), std::uint64_t(59), "A_10");
  c.equal(dist.at(12), std::uint64_t(3520), "A_12");
  FamilyParams fp = extract_family_params(58, dist);
  c.require(fp.family == WeightFamily::W58_2, "family");
  c.equal(fp.alpha, 118, "alpha");
  c.require(fp.beta && *fp.beta == 1, "beta");
}

void criterion_c64(Check& c) {
  const Catalog& cat = Catalog::embedded();
  BitMatrix image = cat.binary_image(cat.at("C_64,1"));
  c.equal(image.cols(), 64, "length");
  c.equal(image.rows(), 32, "dimension");
  c.require(is_self_dual(image), "self-duality");
  WeightDistribution low = low_weight_distribution(image, 14, g_opt.workers);
  WeightDistribution full = full_weight_distribution(image, 32, g_opt.workers);  // 2^32 codewords
  for (int w = 0; w <= 14; ++w) c.equal(low.at(w), full.at(w), "two-sided vs full at weight " + std::to_string(w));
  c.equal(full.smallest_nonzero_weight(), 12, "d");
  c.equal(full.at(12), std::uint64_t(2160), "A_12");
  c.equal(full.at(14), std::uint64_t(19648), "A_14");
  FamilyParams fp = extract_family_params(64, full);
  c.require(fp.family == WeightFamily::W64_2, "family");
  c.equal(fp.alpha, 53, "alpha");
}

void criterion_c80(Check& c) {
  WeightDistribution dist = measure("C_80,1", 16);  // two-sided, p = 8
  c.equal(dist.smallest_nonzero_weight(), 14, "d");
  c.equal(dist.at(14), std::uint64_t(1440), "A_14");
  c.equal(dist.at(16), std::uint64_t(51165), "A_16");
  FamilyParams fp = extract_family_params(80, dist);
  c.require(fp.family == WeightFamily::W80, "family");
  c.equal(fp.alpha, -440, "alpha");
  c.require(fp.beta && *fp.beta == 0, "beta");
}

void criterion_c92(Check& c) {
  WeightDistribution dist = measure("C_92,1", 16);  // two-sided, p = 8
  c.equal(dist.smallest_nonzero_weight(), 16, "d");
  c.equal(dist.at(16), std::uint64_t(11868), "A_16");
  FamilyParams fp = extract_family_params(92, dist);
  c.equal(fp.alpha, 1794, "alpha");
  if (g_opt.extended) {
    WeightDistribution deep = measure("C_92,1", 18);  // p = 9
    c.equal(deep.at(16), std::uint64_t(11868), "A_16 (extended)");
    c.equal(deep.at(18), std::uint64_t(142784), "A_18");
    FamilyParams fp18 = extract_family_params(92, deep);
    c.require(fp18.beta && *fp18.beta == -69, "beta");
  }
}

void criterion_catalog_smoke(Check& c) {
  const Catalog& cat = Catalog::embedded();
  VerifyOptions smoke;
  smoke.smoke = true;
  int pass = 0, total = 0;
  for (const CatalogRecord& rec : cat.records()) {
    VerifyResult res = verify_record(cat, rec, smoke);
    if (!rec.is_parent) {
      ++total;
      pass += res.pass;
    }
    if (!res.pass) c.require(false, rec.id + ": " + res.failures.at(0));
  }
  c.equal(pass, 93, "records passing the smoke check");
  c.equal(total, 93, "records checked");
}

void criterion_properties(Check& c) {
  std::mt19937_64 rng(0xACC10);

  // Gray orthogonality preservation: 1000 orthogonal pairs per ring
  for (RingId id : all_rings) {
    int done = 0;
    while (done < 1000) {
      int n = 1 + static_cast<int>(rng() % 8);
      RingVector v = testutil::random_vector(id, n, rng);
      RingVector w = testutil::random_vector(id, n, rng);
      if (inner_product(v, w).code != 0) continue;
      ++done;
      auto iv = gray_binary_image(v), iw = gray_binary_image(w);
      int dot = 0;
      for (std::size_t i = 0; i < iv.size(); ++i) dot ^= iv[i] & iw[i];
      c.require(dot == 0, "gray images of an orthogonal pair are not orthogonal");
    }
  }

  // low-weight census vs full enumeration on 100 random small self-dual codes
  for (int trial = 0; trial < 100; ++trial) {
    BitMatrix code = testutil::random_binary_self_dual(3 + static_cast<int>(rng() % 10), rng);
    WeightDistribution full = full_weight_distribution(code);
    WeightDistribution low = low_weight_distribution(code, 2 + static_cast<int>(rng() % code.cols()));
    for (int w = 0; w <= low.w_max; ++w)
      c.require(low.at(w) == full.at(w), "low-weight census disagrees with full enumeration");
  }

  // building-up extensions of small parents are always self-dual
  {
    const Catalog& cat = Catalog::embedded();
    std::vector<RingMatrix> parents;
    RingMatrix rep(RingId::F2, 1, 2);
    rep.at(0, 0) = 1;
    rep.at(0, 1) = 1;
    parents.push_back(rep);
    parents.push_back(cat.ring_generator(cat.at("Cp_12,1")));
    parents.push_back(cat.ring_generator(cat.at("Cp_12,14")));
    int done = 0;
    while (done < 500) {
      const RingMatrix& parent = parents[rng() % parents.size()];
      RingId id = parent.ring();
      const Ring& r = ring_info(id);
      RingElement eps = testutil::random_involutory(id, rng);
      if (r.mul(eps.code, eps.code) != r.minus_one()) continue;
      RingVector delta = testutil::random_vector(id, parent.cols(), rng);
      if (inner_product(delta, delta).code != r.minus_one()) continue;
      ++done;
      RingMatrix ext = building_up_extend({parent, eps, delta});
      c.require(multiply(ext, transpose(ext)).is_zero(), "extension not self-orthogonal over the ring");
      c.require(is_self_dual(binary_generator(ext)), "extension image not self-dual");
    }
  }

  // MacWilliams self-invariance of complete distributions, k <= 20
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + static_cast<int>(rng() % 19);
    BitMatrix code = testutil::random_binary_self_dual(k, rng);
    WeightDistribution dist = full_weight_distribution(code);
    c.require(macwilliams_transform(dist, k).counts == dist.counts,
              "distribution moved under the MacWilliams transform");
  }

  // search determinism: identical seeded runs are byte-identical
  {
    SearchConfig cfg;
    cfg.ring = RingId::F2;
    cfg.n = 10;
    cfg.seed = 424242;
    cfg.workers = 2;
    cfg.max_candidates = 4000;
    std::vector<SearchHit> first = search_four_circulant(cfg);
    std::vector<SearchHit> second = search_four_circulant(cfg);
    c.require(!first.empty(), "seeded search found nothing");
    std::string s1, s2;
    for (const SearchHit& h : first) s1 += hit_line(h) + "\n";
    for (const SearchHit& h : second) s2 += hit_line(h) + "\n";
    c.require(s1 == s2, "two identical seeded runs differ");
    for (const SearchHit& h : first) c.require(is_self_dual(h.generator), "emitted hit not self-dual");
  }
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) g_opt.only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--extended")) g_opt.extended = true;
    else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) g_opt.workers = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--criterion N] [--extended] [--workers W]\n";
      return 2;
    }
  }

  std::vector<Criterion> criteria = {
      {1, "ring exhaustive suite", 1.0, criterion_rings},
      {2, "theta oracle equivalence", 5.0, criterion_theta_oracle},
      {3, "orthogonal-circulant census", 120.0, criterion_census},
      {4, "C_56,1 full enumeration", 300.0, criterion_c56},
      {5, "C_58,1 full enumeration", 600.0, criterion_c58},
      {6, "C_64,1 full and two-sided agree", 1800.0, criterion_c64},
      {7, "C_80,1 two-sided census", 600.0, criterion_c80},
      {8, "C_92,1 two-sided census", 1800.0, criterion_c92},
      {9, "full catalog smoke", 60.0, criterion_catalog_smoke},
      {10, "property suites", 600.0, criterion_properties},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    if (g_opt.only && cr.number != g_opt.only) continue;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds)
      check.failures.push_back("runtime " + std::to_string(secs) + "s exceeds budget " +
                               std::to_string(cr.budget_seconds) + "s");
    bool pass = check.failures.empty();
    failures += !pass;
    std::printf("%s  criterion %2d  %-36s (%.2fs)\n", pass ? "PASS" : "FAIL", cr.number, cr.title,
                secs);
    for (const std::string& f : check.failures) std::printf("      - %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failures;
}
