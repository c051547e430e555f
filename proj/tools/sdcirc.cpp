// Command-line front end: verification of the embedded catalog, seeded
// parameter searches, distance measurement of generator files, Gray-map
// evaluation, and the orthogonal-circulant census.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sdcirc/sdcirc.hpp"

using namespace sdcirc;
using nlohmann::json;

namespace {

std::vector<std::uint8_t> parse_unit_set(RingId ring, const std::string& text) {
  std::vector<std::uint8_t> out;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    out.push_back(decode_hex_digit(ring, ch, out.size()));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json verify_json(const VerifyResult& r) {
  json j{{"id", r.id},       {"pass", r.pass},          {"n", r.bin_n},
         {"k", r.bin_k},     {"d", r.d_measured},       {"alpha", r.alpha_measured},
         {"seconds", r.seconds}, {"failures", r.failures}};
  j["family"] = r.family_measured.empty() ? json(nullptr) : json(r.family_measured);
  j["beta"] = r.beta_measured ? json(*r.beta_measured) : json(nullptr);
  return j;
}

json hit_json(const SearchHit& h) {
  json j{{"worker", h.worker}, {"rank", h.rank},   {"n", h.bin_n},
         {"k", h.bin_k},       {"d", h.d},         {"family", h.family},
         {"record", format_record(h.record)}};
  j["alpha"] = h.alpha ? json(*h.alpha) : json(nullptr);
  j["beta"] = h.beta ? json(*h.beta) : json(nullptr);
  return j;
}

void print_hits(const std::vector<SearchHit>& hits, bool jsonl) {
  for (const SearchHit& h : hits) {
    if (jsonl)
      std::cout << hit_json(h).dump() << "\n";
    else
      std::cout << hit_line(h) << "\n";
  }
  if (!jsonl) std::cout << hits.size() << " hit(s)\n";
}

std::string describe(const VerifyResult& r, const CatalogRecord& rec) {
  std::ostringstream os;
  os << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  [" << r.bin_n << "," << r.bin_k;
  if (r.d_measured) os << "," << r.d_measured;
  os << "]";
  if (!r.family_measured.empty()) {
    os << " " << r.family_measured << " alpha=" << r.alpha_measured;
    if (r.beta_measured) os << " beta=" << *r.beta_measured;
  } else if (r.d_measured) {
    os << " alpha=" << r.alpha_measured;
    if (r.beta_measured) os << " beta=" << *r.beta_measured;
  }
  if (!rec.is_parent && !rec.aut.empty()) os << " (aut " << rec.aut << ")";
  char buf[32];
  std::snprintf(buf, sizeof buf, "  %.2fs", r.seconds);
  os << buf;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-dual codes from lambda-circulant constructions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a key=value file");
  bool jsonl = false;
  app.add_flag("--jsonl", jsonl, "machine-readable line-delimited JSON output");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "re-verify records of the embedded catalog");
  std::string verify_id;
  int verify_length = 0;
  bool verify_all = false, verify_extended = false, verify_smoke = false, verify_parents = false;
  int verify_workers = 1;
  verify->add_option("--id", verify_id, "verify a single record, e.g. C_56,1");
  verify->add_option("--length", verify_length, "verify all records of one binary length");
  verify->add_flag("--all", verify_all, "verify every record");
  verify->add_flag("--extended", verify_extended, "length 92: also measure A_18 and beta");
  verify->add_flag("--smoke", verify_smoke, "construction conditions and self-duality only");
  verify->add_flag("--parents", verify_parents, "include the intermediate parent codes");
  verify->add_option("--workers", verify_workers, "threads for the enumeration kernels");

  // ---- search ----
  auto* search = app.add_subcommand("search", "seeded random four-circulant parameter search");
  std::string search_ring = "F2", search_lambda, search_mu;
  int search_n = 0, search_workers = 1;
  std::uint64_t search_seed = 0, search_max_cand = 100000,
                search_max_hits = std::numeric_limits<std::uint64_t>::max();
  double search_max_seconds = std::numeric_limits<double>::infinity();
  bool search_no_pool = false;
  search->add_option("--ring", search_ring, "alphabet: F2, F2u, F2uv, F4, F4u")->required();
  search->add_option("--n", search_n, "circulant block size")->required();
  search->add_option("--seed", search_seed, "PRNG seed")->required();
  search->add_option("--lambda", search_lambda, "allowed lambda values, e.g. 1,3 (default: all involutory units)");
  search->add_option("--mu", search_mu, "allowed mu values (default: all involutory units)");
  search->add_option("--max-candidates", search_max_cand, "total candidates across workers");
  search->add_option("--max-hits", search_max_hits, "stop after this many deduplicated hits");
  search->add_option("--max-seconds", search_max_seconds, "wall-clock limit (soft, breaks reproducibility)");
  search->add_option("--workers", search_workers, "parallel worker substreams");
  search->add_flag("--no-pool", search_no_pool, "skip pre-enumerating the orthogonal (mu, c) pool");

  // ---- build-up ----
  auto* buildup = app.add_subcommand("build-up", "seeded building-up extension search");
  std::string bu_parent;
  std::uint64_t bu_seed = 0, bu_max_cand = 1000,
                bu_max_hits = std::numeric_limits<std::uint64_t>::max();
  int bu_workers = 1;
  buildup->add_option("--parent", bu_parent, "catalog id or generator file of the parent code")->required();
  buildup->add_option("--seed", bu_seed, "PRNG seed")->required();
  buildup->add_option("--max-candidates", bu_max_cand, "total candidates across workers");
  buildup->add_option("--max-hits", bu_max_hits, "stop after this many deduplicated hits");
  buildup->add_option("--workers", bu_workers, "parallel worker substreams");

  // ---- mindist ----
  auto* mindist = app.add_subcommand("mindist", "minimum distance of a generator file");
  std::string md_file;
  bool md_full = false;
  int md_lowweight = 0, md_workers = 1;
  mindist->add_option("file", md_file, "generator matrix text file")->required();
  auto* md_full_flag = mindist->add_flag("--full", md_full, "force complete enumeration");
  mindist->add_option("--lowweight", md_lowweight, "two-sided census with this message weight bound p")
      ->excludes(md_full_flag);
  mindist->add_option("--workers", md_workers, "threads for the enumeration kernels");

  // ---- graymap ----
  auto* graymap = app.add_subcommand("graymap", "binary Gray image of a ring vector");
  std::string gm_ring = "F2", gm_vector;
  graymap->add_option("--ring", gm_ring, "alphabet: F2, F2u, F2uv, F4, F4u")->required();
  graymap->add_option("--vector", gm_vector, "hex vector, e.g. (957)")->required();

  // ---- census ----
  auto* census = app.add_subcommand("census", "count orthogonal mu-circulant (mu, c) pairs");
  std::string cs_ring = "F2";
  int cs_n = 0;
  std::uint64_t cs_budget = std::uint64_t(1) << 28;
  census->add_option("--ring", cs_ring, "alphabet: F2, F2u, F2uv, F4, F4u")->required();
  census->add_option("--n", cs_n, "circulant size")->required();
  census->add_option("--budget", cs_budget, "maximum scan steps before refusing");

  // ---- export ----
  auto* exp = app.add_subcommand("export", "write a catalog record's binary generator file");
  std::string ex_id, ex_out;
  exp->add_option("--id", ex_id, "catalog record id")->required();
  exp->add_option("--out", ex_out, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      CatalogFilter filter;  // no selector means --all
      if (!verify_id.empty()) filter.id = verify_id;
      if (verify_length) filter.length = verify_length;
      filter.include_parents = verify_parents;
      VerifyOptions opt;
      opt.smoke = verify_smoke;
      opt.extended = verify_extended;
      opt.workers = verify_workers;
      const Catalog& cat = Catalog::embedded();
      std::vector<VerifyResult> results = catalog_verify(cat, filter, opt);
      int passed = 0;
      for (const VerifyResult& r : results) {
        passed += r.pass;
        if (jsonl) {
          std::cout << verify_json(r).dump() << "\n";
        } else {
          std::cout << describe(r, cat.at(r.id)) << "\n";
          for (const std::string& f : r.failures) std::cout << "    - " << f << "\n";
        }
      }
      if (!jsonl)
        std::cout << "verified " << passed << "/" << results.size() << " records"
                  << (verify_smoke ? " (smoke)" : "") << "\n";
      return passed == static_cast<int>(results.size()) ? 0 : 1;
    }

    if (*search) {
      SearchConfig cfg;
      cfg.ring = ring_from_token(search_ring);
      cfg.n = search_n;
      cfg.seed = search_seed;
      cfg.workers = search_workers;
      cfg.max_candidates = search_max_cand;
      cfg.max_hits = search_max_hits;
      cfg.max_seconds = search_max_seconds;
      cfg.use_c_pool = !search_no_pool;
      if (!search_lambda.empty()) cfg.lambdas = parse_unit_set(cfg.ring, search_lambda);
      if (!search_mu.empty()) cfg.mus = parse_unit_set(cfg.ring, search_mu);
      print_hits(search_four_circulant(cfg), jsonl);
      return 0;
    }

    if (*buildup) {
      SearchConfig cfg;
      cfg.seed = bu_seed;
      cfg.workers = bu_workers;
      cfg.max_candidates = bu_max_cand;
      cfg.max_hits = bu_max_hits;
      RingMatrix parent;
      std::string label = bu_parent;
      if (const CatalogRecord* rec = Catalog::embedded().find(bu_parent)) {
        parent = Catalog::embedded().ring_generator(*rec);
      } else {
        BitMatrix bits = parse_generator_text(read_file(bu_parent));
        RingMatrix m(RingId::F2, bits.rows(), bits.cols());
        for (int i = 0; i < bits.rows(); ++i)
          for (int j = 0; j < bits.cols(); ++j) m.at(i, j) = bits.get(i, j);
        parent = std::move(m);
        label = "file:" + bu_parent;
      }
      print_hits(search_building_up(cfg, parent, label), jsonl);
      return 0;
    }

    if (*mindist) {
      BitMatrix g = parse_generator_text(read_file(md_file));
      int d = 0;
      std::string method;
      if (md_full) {
        d = full_weight_distribution(g, 32, md_workers).smallest_nonzero_weight();
        method = "full enumeration";
      } else if (md_lowweight > 0) {
        WeightDistribution dist = low_weight_distribution(g, 2 * md_lowweight, md_workers);
        d = dist.smallest_nonzero_weight();
        method = "two-sided census, p = " + std::to_string(md_lowweight);
        if (d == 0) {
          std::cout << "d > " << dist.w_max << " (" << method << ")\n";
          return 0;
        }
      } else {
        d = min_distance(g, 32, md_workers);
        method = g.rows() <= 32 ? "full enumeration" : "two-sided census";
      }
      if (jsonl)
        std::cout << json{{"file", md_file}, {"n", g.cols()}, {"k", g.rows()}, {"d", d}}.dump()
                  << "\n";
      else
        std::cout << "[" << g.cols() << "," << g.rows() << "] d = " << d << " (" << method << ")\n";
      return 0;
    }

    if (*graymap) {
      RingId ring = ring_from_token(gm_ring);
      RingVector v = parse_vector(ring, gm_vector);
      std::vector<std::uint8_t> image = gray_binary_image(v);
      std::string bits;
      for (std::uint8_t b : image) bits.push_back(b ? '1' : '0');
      if (jsonl)
        std::cout << json{{"ring", gm_ring}, {"vector", format_vector(v)}, {"image", bits},
                          {"lee_weight", lee_weight(v)}}.dump()
                  << "\n";
      else
        std::cout << "(" << bits << ")  lee weight " << lee_weight(v) << "\n";
      return 0;
    }

    if (*census) {
      std::uint64_t count = count_orthogonal_circulants(ring_from_token(cs_ring), cs_n, cs_budget);
      if (jsonl)
        std::cout << json{{"ring", cs_ring}, {"n", cs_n}, {"count", count}}.dump() << "\n";
      else
        std::cout << "N_C(" << ring_info(ring_from_token(cs_ring)).name << ", " << cs_n
                  << ") = " << count << "\n";
      return 0;
    }

    if (*exp) {
      const Catalog& cat = Catalog::embedded();
      const CatalogRecord& rec = cat.at(ex_id);
      BitMatrix image = cat.binary_image(rec);
      std::vector<std::string> header = {format_record(rec)};
      std::string text = emit_generator_text(image, header);
      if (ex_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(ex_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + ex_out);
        out << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
