#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "bkpuzzle/bigint.hpp"
#include "bkpuzzle/board.hpp"
#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/oracle.hpp"

namespace bkp {

enum class Provenance : std::uint8_t { kEnumeration, kOracle };

inline const char* provenance_name(Provenance p) {
  return p == Provenance::kEnumeration ? "enumeration" : "oracle";
}

inline Provenance parse_provenance(const std::string& s) {
  if (s == "enumeration") return Provenance::kEnumeration;
  if (s == "oracle") return Provenance::kOracle;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

struct CoeffRecord {
  TripleKey key;
  BigInt count;
  bool rigid = false;  // count == 1
  Provenance provenance = Provenance::kEnumeration;
  std::string pin = kPinVersion;

  nlohmann::ordered_json to_json() const {
    return {{"nw", key.nw.to_string()}, {"ne", key.ne.to_string()},
            {"s", key.s.to_string()},   {"d", key.alphabet()},
            {"count", count.str()},     {"rigid", rigid},
            {"provenance", provenance_name(provenance)}, {"pin", pin}};
  }

  static CoeffRecord from_json(const nlohmann::json& j) {
    const int d = j.at("d").get<int>();
    CoeffRecord r;
    r.key = {Word::parse(j.at("nw").get<std::string>(), d),
             Word::parse(j.at("ne").get<std::string>(), d),
             Word::parse(j.at("s").get<std::string>(), d)};
    r.key.check();
    r.count = BigInt(j.at("count").get<std::string>());
    if (r.count < 0) throw std::invalid_argument("negative count in cache record");
    r.rigid = j.at("rigid").get<bool>();
    if (r.rigid != (r.count == 1)) throw std::invalid_argument("rigid flag disagrees with count");
    r.provenance = parse_provenance(j.at("provenance").get<std::string>());
    r.pin = j.at("pin").get<std::string>();
    return r;
  }
};

inline CoeffRecord make_record(const TripleKey& key, const BigInt& count, Provenance prov) {
  return {key, count, count == 1, prov, kPinVersion};
}

/// Thrown when two records for the same key disagree.
class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only JSON-lines store of coefficients, keyed by the triple and the
/// chirality pin. Records of either provenance must agree on a key.
class CoeffCache {
 public:
  explicit CoeffCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

  const std::filesystem::path& path() const { return file_; }

  std::optional<CoeffRecord> find(const TripleKey& key,
                                  const std::string& pin = kPinVersion) const {
    std::lock_guard lock(mu_);
    auto it = records_.find(index(key, pin));
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds a record; identical values are not written twice.
  void put(const CoeffRecord& r) {
    std::lock_guard lock(mu_);
    auto [it, fresh] = records_.try_emplace(index(r.key, r.pin), r);
    if (!fresh) {
      if (it->second.count != r.count)
        throw CacheConflict("cache conflict for " + r.key.to_string() + ": " +
                            it->second.count.str() + " vs " + r.count.str());
      if (written_.count({index(r.key, r.pin), r.provenance})) return;
    }
    if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
    std::ofstream out(file_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to cache " + file_.string());
    out << r.to_json().dump() << '\n';
    out.flush();
    written_.insert({index(r.key, r.pin), r.provenance});
    lines_.push_back(r);
  }

  /// Every record, in file order.
  std::vector<CoeffRecord> records() const {
    std::lock_guard lock(mu_);
    return lines_;
  }

  /// Lines that disagreed with an earlier record for the same key.
  const std::vector<std::string>& conflicts() const { return conflicts_; }

 private:
  using Index = std::tuple<std::string, std::string, std::string, int, std::string>;

  static Index index(const TripleKey& k, const std::string& pin) {
    return {k.nw.to_string(), k.ne.to_string(), k.s.to_string(), k.alphabet(), pin};
  }

  void load() {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      CoeffRecord r;
      try {
        r = CoeffRecord::from_json(nlohmann::json::parse(line));
      } catch (const std::exception& e) {
        throw std::runtime_error(file_.string() + ":" + std::to_string(lineno) + ": " +
                                 e.what());
      }
      lines_.push_back(r);
      auto [it, fresh] = records_.try_emplace(index(r.key, r.pin), r);
      if (!fresh && it->second.count != r.count)
        conflicts_.push_back(file_.string() + ":" + std::to_string(lineno) + ": " +
                             r.key.to_string() + " has count " + r.count.str() +
                             ", earlier " + it->second.count.str());
      written_.insert({index(r.key, r.pin), r.provenance});
    }
  }

  std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<Index, CoeffRecord> records_;
  std::set<std::pair<Index, Provenance>> written_;
  std::vector<CoeffRecord> lines_;
  std::vector<std::string> conflicts_;
};

/// Cache file location: explicit path, else $BKP_CACHE, else
/// $HOME/.bkpuzzle/coefficients.jsonl.
inline std::filesystem::path default_cache_path(const std::string& flag = {}) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("BKP_CACHE"); env && *env) return env;
  const char* home = std::getenv("HOME");
  std::filesystem::path base = home && *home ? home : ".";
  return base / ".bkpuzzle" / "coefficients.jsonl";
}

/// Puzzle count, read from and written to the cache when one is given.
inline BigInt bk_coefficient(const TripleKey& key, CoeffCache* cache = nullptr) {
  key.check();
  if (cache)
    if (auto r = cache->find(key)) return r->count;
  BigInt c = count_puzzles(key);
  if (cache) cache->put(make_record(key, c, Provenance::kEnumeration));
  return c;
}

struct CacheAudit {
  std::size_t checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Recomputes every record with the current pin and reports disagreements.
inline CacheAudit audit(const CoeffCache& cache) {
  CacheAudit a;
  for (const auto& m : cache.conflicts()) a.problems.push_back(m);
  for (const auto& r : cache.records()) {
    if (r.pin != kPinVersion) continue;
    ++a.checked;
    BigInt fresh = r.provenance == Provenance::kEnumeration
                       ? count_puzzles(r.key)
                       : bk_constant(r.key.nw, r.key.ne, r.key.s);
    if (fresh != r.count)
      a.problems.push_back(r.key.to_string() + " (" + provenance_name(r.provenance) +
                           "): cached " + r.count.str() + ", recomputed " + fresh.str());
  }
  return a;
}

}  // namespace bkp
