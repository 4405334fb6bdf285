// bkp: Belkale-Kumar puzzle counts, oracles, rigidity and cone inequalities.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bkpuzzle/cache.hpp"
#include "bkpuzzle/cone.hpp"
#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/factor.hpp"
#include "bkpuzzle/lr.hpp"
#include "bkpuzzle/oracle.hpp"
#include "bkpuzzle/puzzle_io.hpp"
#include "bkpuzzle/render.hpp"
#include "bkpuzzle/rigidity.hpp"
#include "bkpuzzle/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Bad user input; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string cache_path;
  bool no_cache = false;

  std::vector<std::string> words;
  std::string list_format = "json";
  std::string format = "text";
  int index = -1;
  bool no_arrows = false;

  int n = 0;
  std::string puzzle_file;
  std::string lam, mu, nu;

  int max_n = 5, max_d = 3, jobs = 1;
};

bkp::TripleKey key_from(const std::vector<std::string>& w) {
  try {
    return bkp::parse_key(w.at(0), w.at(1), w.at(2));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::unique_ptr<bkp::CoeffCache> open_cache(const Options& o) {
  if (o.no_cache) return nullptr;
  return std::make_unique<bkp::CoeffCache>(bkp::default_cache_path(o.cache_path));
}

bkp::Rational parse_rational(std::string s) {
  // decimals become fractions: 1.25 -> 125/100
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos)
    s = s.substr(0, dot) + s.substr(dot + 1) + "/1" + std::string(s.size() - dot - 1, '0');
  try {
    return bkp::Rational(s);
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "'");
  }
}

std::vector<bkp::Rational> parse_vector(const std::string& text) {
  std::vector<bkp::Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("empty entry in '" + text + "'");
    out.push_back(parse_rational(tok));
  }
  return out;
}

int cmd_count(const Options& o) {
  auto key = key_from(o.words);
  auto cache = open_cache(o);
  std::cout << bkp::bk_coefficient(key, cache.get()) << "\n";
  return kExitOk;
}

int cmd_list(const Options& o) {
  auto key = key_from(o.words);
  auto ps = bkp::list_puzzles(key);
  if (o.index >= 0) {
    if (o.index >= static_cast<int>(ps.size()))
      throw UsageError("--index " + std::to_string(o.index) + " but only " +
                       std::to_string(ps.size()) + " puzzles");
    ps = {ps[o.index]};
  }
  if (o.list_format == "json") {
    auto j = o.index >= 0 ? bkp::to_json(ps[0]) : bkp::to_json(ps);
    std::cout << j.dump(2) << "\n";
  } else if (o.list_format == "ascii") {
    for (std::size_t k = 0; k < ps.size(); ++k)
      std::cout << (k ? "\n" : "") << bkp::render_ascii(ps[k]);
  } else {
    if (ps.empty()) {
      std::cerr << "no puzzles\n";
      return kExitOk;
    }
    if (ps.size() > 1)
      std::cerr << "showing puzzle 0 of " << ps.size() << "; use --index to pick another\n";
    std::cout << bkp::render_svg(ps[0], {!o.no_arrows, true});
  }
  return kExitOk;
}

int cmd_factor(const Options& o) {
  auto key = key_from(o.words);
  auto r = bkp::factor_check(key);
  if (!r.same_content) {
    std::cout << "contents differ\ncount=" << r.count << (r.equal ? " OK" : " MISMATCH") << "\n";
    return r.equal ? kExitOk : kExitFailed;
  }
  for (const auto& f : r.factors) {
    const int n = f.key.size(), k = bkp::content(f.key.nw)[0];
    bkp::BigInt lr = bkp::lr_tableau(bkp::word_partition(f.key.nw, k, n),
                                     bkp::word_partition(f.key.ne, k, n),
                                     bkp::word_partition(f.key.s, k, n), k, n - k);
    std::cout << "(" << f.i << "," << f.j << ") " << f.key.to_string() << " count=" << f.count
              << " lr=" << lr << "\n";
  }
  for (auto [i, j] : r.violated)
    std::cout << "inv_" << i << j << " not additive\n";
  if (r.violated.empty())
    std::cout << "product=" << r.product << " count=" << r.count;
  else
    std::cout << "count=" << r.count;
  std::cout << (r.equal ? " OK" : " MISMATCH") << "\n";
  return r.equal ? kExitOk : kExitFailed;
}

int cmd_oracle(const Options& o) {
  auto key = key_from(o.words);
  auto cache = open_cache(o);
  bkp::BigInt cup = bkp::cup_constant(key.nw, key.ne, key.s);
  bkp::BigInt bk = bkp::bk_constant(key.nw, key.ne, key.s);
  bkp::BigInt count = bkp::bk_coefficient(key, cache.get());
  if (cache) cache->put(bkp::make_record(key, bk, bkp::Provenance::kOracle));
  bool agree = bk == count;
  std::cout << "cup=" << cup << " bk=" << bk << " count=" << count
            << (agree ? " agree" : " DISAGREE") << "\n";
  return agree ? kExitOk : kExitFailed;
}

int cmd_rigid(const Options& o) {
  auto key = key_from(o.words);
  auto ps = bkp::list_puzzles(key);
  std::cout << "count=" << ps.size() << "\n";
  bool consistent = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    auto loop = bkp::has_gentle_loop(ps[k]);
    std::cout << "puzzle " << k << ": ";
    if (!loop.found) {
      std::cout << "no gentle loop\n";
    } else {
      std::cout << "gentle loop";
      for (const auto& e : loop.witness) std::cout << " " << bkp::to_string(e);
      std::cout << "\n";
    }
    consistent = consistent && loop.found == (ps.size() >= 2);
  }
  std::cout << (ps.size() == 1 ? "rigid" : "not rigid") << "\n";
  if (!consistent) {
    std::cout << "gentle loops disagree with the count\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_facets(const Options& o) {
  if (o.n < 1) throw UsageError("facets needs N >= 1");
  const auto& fs = bkp::facets(o.n);
  if (o.format == "json") {
    bkp::Json out = bkp::Json::array();
    for (const auto& f : fs) out.push_back(bkp::to_json(f));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& f : fs) std::cout << f.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_face(const Options& o) {
  std::ifstream in(o.puzzle_file);
  if (!in) throw UsageError("cannot read " + o.puzzle_file);
  bkp::Puzzle p;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.is_array() && j.size() == 1) j = j[0];
    p = bkp::puzzle_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(o.puzzle_file + ": " + e.what());
  }
  if (p.alphabet() < 2) throw UsageError("face needs a puzzle with at least two letters");
  try {
    auto face = bkp::face_from_puzzle(p);
    if (o.format == "json") {
      std::cout << bkp::to_json(face).dump() << "\n";
    } else {
      for (std::size_t i = 0; i < face.equalities.size(); ++i) {
        std::string s = face.equalities[i].to_string();
        s.replace(s.rfind("≤"), std::string("≤").size(), "=");
        std::cout << "A_" << i + 1 << "]: " << s << "\n";
      }
    }
    return kExitOk;
  } catch (const bkp::GentleLoopError& e) {
    std::cout << "refused: gentle loop";
    for (const auto& de : e.loop().witness) std::cout << " " << bkp::to_string(de);
    std::cout << "\n";
    return kExitFailed;
  }
}

int cmd_member(const Options& o) {
  auto lam = parse_vector(o.lam), mu = parse_vector(o.mu), nu = parse_vector(o.nu);
  for (const auto* v : {&lam, &mu, &nu})
    if (static_cast<int>(v->size()) != o.n)
      throw UsageError("vectors must have " + std::to_string(o.n) + " entries");
  std::cout << (bkp::member(lam, mu, nu, o.n) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_selftest(const Options& o) {
  if (o.max_n < 1 || o.max_d < 1 || o.jobs < 1)
    throw UsageError("--max-n, --max-d and --jobs must be positive");
  bkp::SweepBounds b{o.max_n, o.max_d, o.jobs};
  int failed = 0;
  bkp::run_acceptance(b, [&](const bkp::CriterionResult& r) {
    std::cout << bkp::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << "\n";
  return failed ? kExitFailed : kExitOk;
}

int cmd_cache_check(const Options& o) {
  bkp::CoeffCache cache(bkp::default_cache_path(o.cache_path));
  auto a = bkp::audit(cache);
  std::cout << cache.path().string() << ": " << a.checked << " records checked, "
            << a.problems.size() << " problems\n";
  for (const auto& p : a.problems) std::cout << "  " << p << "\n";
  return a.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belkale-Kumar puzzles: counts, oracles, rigidity and LR-cone inequalities"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache", o.cache_path, "coefficient cache file (default $BKP_CACHE, then ~/.bkpuzzle/coefficients.jsonl)");
  app.add_flag("--no-cache", o.no_cache, "do not read or write the cache");

  auto words = [&](CLI::App* sub) {
    sub->add_option("words", o.words, "NW NE S boundary words")->expected(3)->required();
  };

  auto* count = app.add_subcommand("count", "number of BK-puzzles with the given boundary");
  words(count);
  auto* list = app.add_subcommand("list", "all BK-puzzles with the given boundary");
  words(list);
  list->add_option("--format", o.list_format, "json, ascii or svg")
      ->check(CLI::IsMember({"json", "ascii", "svg"}));
  list->add_option("--index", o.index, "only the puzzle at this position (0-based)");
  list->add_flag("--no-arrows", o.no_arrows, "svg: omit region-edge orientation");
  auto* factor = app.add_subcommand("factor", "count against the product of pair deflations");
  words(factor);
  auto* oracle = app.add_subcommand("oracle", "Schubert-polynomial constants against the count");
  words(oracle);
  auto* rigid = app.add_subcommand("rigid", "count and gentle-loop witnesses");
  words(rigid);

  auto* facets = app.add_subcommand("facets", "LR-cone inequalities from rigid 2-letter puzzles");
  facets->add_option("N", o.n, "size")->required();
  facets->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* face = app.add_subcommand("face", "face equalities of a loop-free puzzle");
  face->add_option("--puzzle", o.puzzle_file, "puzzle JSON file")->required();
  face->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* member = app.add_subcommand("member", "membership in the LR cone");
  member->add_option("--n", o.n, "size")->required();
  member->add_option("--lam", o.lam, "comma-separated entries")->required();
  member->add_option("--mu", o.mu, "comma-separated entries")->required();
  member->add_option("--nu", o.nu, "comma-separated entries")->required();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance sweep");
  selftest->add_option("--max-n", o.max_n, "largest size in the general sweeps");
  selftest->add_option("--max-d", o.max_d, "largest alphabet in the sweeps");
  selftest->add_option("--jobs", o.jobs, "worker threads");
  auto* cache_check = app.add_subcommand("cache-check", "recompute every cached coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    if (count->parsed()) return cmd_count(o);
    if (list->parsed()) return cmd_list(o);
    if (factor->parsed()) return cmd_factor(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (rigid->parsed()) return cmd_rigid(o);
    if (facets->parsed()) return cmd_facets(o);
    if (face->parsed()) return cmd_face(o);
    if (member->parsed()) return cmd_member(o);
    if (selftest->parsed()) return cmd_selftest(o);
    if (cache_check->parsed()) return cmd_cache_check(o);
  } catch (const UsageError& e) {
    std::cerr << "bkp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "bkp: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
