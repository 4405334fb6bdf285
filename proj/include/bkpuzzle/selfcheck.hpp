#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bkpuzzle/board.hpp"
#include "bkpuzzle/cone.hpp"
#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/factor.hpp"
#include "bkpuzzle/lr.hpp"
#include "bkpuzzle/oracle.hpp"
#include "bkpuzzle/rigidity.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

struct SweepBounds {
  int max_n = 5;  // general sweeps; the Grassmannian check goes to max_n + 2
  int max_d = 3;
  int jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time bound
};

// Wall-clock bounds, in seconds.
inline constexpr double kInstanceLimit = 1.0;
inline constexpr double kSweepLimit = 300.0;

/// Half-width of the integer box used for the cone check at size n.
inline constexpr int cone_box(int n) { return n <= 3 ? 3 : 2; }

/// Runs f(0..count-1) on up to `jobs` threads.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next++) < count;) f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Counts checks and keeps the first few failures, ordered by task index.
class Tally {
 public:
  void ok() { ++checked_; }
  void fail(std::size_t task, std::string msg) {
    ++checked_;
    std::lock_guard lock(mu_);
    ++failed_;
    failures_.push_back({task, std::move(msg)});
  }
  void check(bool cond, std::size_t task, const std::function<std::string()>& msg) {
    if (cond) ok();
    else fail(task, msg());
  }
  long checked() const { return checked_; }
  long failed() const { return failed_; }
  std::string summary(const std::string& what) {
    std::sort(failures_.begin(), failures_.end());
    std::string s = std::to_string(checked_.load()) + " " + what + ", " +
                    std::to_string(failed_) + " failed";
    for (std::size_t k = 0; k < failures_.size() && k < 5; ++k)
      s += "\n      " + failures_[k].second;
    return s;
  }

 private:
  std::atomic<long> checked_{0};
  long failed_ = 0;
  std::mutex mu_;
  std::vector<std::pair<std::size_t, std::string>> failures_;
};

/// Every triple of words sharing one content with all d letters present,
/// for n_lo <= n <= n_hi and d_lo <= d <= d_hi.
inline std::vector<TripleKey> equal_content_triples(int n_lo, int n_hi, int d_lo, int d_hi) {
  std::vector<TripleKey> out;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int d = d_lo; d <= d_hi; ++d)
      for (const auto& c : positive_contents(n, d)) {
        auto ws = words_with_content(c);
        for (const auto& a : ws)
          for (const auto& b : ws)
            for (const auto& s : ws) out.push_back({a, b, s});
      }
  return out;
}

inline bool additive(const TripleKey& k) { return inversions_additive(k.nw, k.ne, k.s); }

/// The boundary of reflect_dual of a puzzle with boundary k.
inline TripleKey dual_key(const TripleKey& k) {
  return {dual(relabel_reversed(k.ne)), dual(relabel_reversed(k.nw)),
          dual(relabel_reversed(k.s))};
}

namespace detail {

inline std::string key_text(const TripleKey& k) { return "(" + k.to_string() + ")"; }

inline long binom2(long m) { return m * (m - 1) / 2; }

/// Census identities of one puzzle; empty string when all hold.
inline std::string census_problem(const Puzzle& p) {
  const int d = p.alphabet();
  Boundary bd = boundary(p);
  Content c = content(bd.s);
  if (content(bd.nw) != c || content(bd.ne) != c) return "side contents differ";
  auto pc = census(p);
  // Each side read clockwise: S right to left.
  const std::array<std::pair<Corner, InversionTable>, 3> sides{
      {{Corner::kS, inversions(dual(bd.s))},
       {Corner::kNW, inversions(bd.nw)},
       {Corner::kNE, inversions(bd.ne)}}};
  static constexpr const char* kCornerName[3] = {"south", "north-west", "north-east"};
  long cells = 0;
  for (int i = 1; i <= d; ++i) {
    if (pc.up[i - 1] != binom2(c[i - 1] + 1)) return "up-triangle count of " + std::to_string(i);
    if (pc.down[i - 1] != binom2(c[i - 1])) return "down-triangle count of " + std::to_string(i);
    cells += pc.up[i - 1] + pc.down[i - 1];
    for (int j = 1; j < i; ++j) {
      if (pc.rhombus(i, j) != static_cast<long>(c[i - 1]) * c[j - 1])
        return "rhombus count of (" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (const auto& [corner, inv] : sides)
        if (pc.rhombus(corner, i, j) != inv.at(i, j))
          return std::string(kCornerName[static_cast<int>(corner)]) + "-pointing rhombi of (" +
                 std::to_string(i) + "," + std::to_string(j) + ")";
      cells += 2L * pc.rhombus(i, j);
    }
  }
  if (cells != static_cast<long>(p.size()) * p.size()) return "cells not covered";
  return {};
}

inline std::vector<std::vector<int>> decreasing_vectors(int n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int hi) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = hi; v >= -bound; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  return out;
}

}  // namespace detail

inline CriterionResult criterion_five_instance() {
  CriterionResult r{1, "instance (12132, 23112, 32121): count 1, factors 1 1 1", false, "", 0,
                    kInstanceLimit};
  TripleKey k = parse_key("12132", "23112", "32121");
  auto f = factor_check(k);
  bool ok = f.count == 1 && f.product == 1 && f.equal && f.violated.empty() &&
            f.factors.size() == 3;
  std::string d = "count=" + f.count.str() + " factors:";
  for (const auto& pf : f.factors) {
    BigInt lr = lr_tableau(word_partition(pf.key.nw, content(pf.key.nw)[0], pf.key.size()),
                           word_partition(pf.key.ne, content(pf.key.ne)[0], pf.key.size()),
                           word_partition(pf.key.s, content(pf.key.s)[0], pf.key.size()),
                           content(pf.key.nw)[0], pf.key.size() - content(pf.key.nw)[0]);
    ok = ok && pf.count == 1 && lr == 1;
    d += " (" + std::to_string(pf.i) + "," + std::to_string(pf.j) + ")=" + pf.count.str() +
         "/lr " + lr.str();
  }
  r.pass = ok;
  r.detail = d + " product=" + f.product.str();
  return r;
}

inline CriterionResult criterion_unique_instance() {
  CriterionResult r{2, "instance (12112, 12112, 21121): unique, rigid, no gentle loop",
                    false, "", 0, kInstanceLimit};
  auto ps = list_puzzles(parse_key("12112", "12112", "21121"));
  bool ok = ps.size() == 1;
  if (ok) {
    auto loop = has_gentle_loop(ps[0]);
    ok = !loop.found && is_rigid(ps[0]) && is_rigid_by_count(ps[0]);
  }
  r.pass = ok;
  r.detail = "puzzles=" + std::to_string(ps.size());
  return r;
}

inline CriterionResult criterion_oracle(const SweepBounds& b) {
  CriterionResult r{3, "puzzle count == Schubert oracle filtered by additivity", false, "", 0,
                    kSweepLimit};
  auto keys = equal_content_triples(1, b.max_n, 1, b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    BigInt c = count_puzzles(keys[i]);
    BigInt o = bk_constant(keys[i].nw, keys[i].ne, keys[i].s);
    t.check(c == o, i, [&] { return detail::key_text(keys[i]) + " count " + c.str() + " oracle " + o.str(); });
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("triples");
  return r;
}

inline CriterionResult criterion_grassmannian(const SweepBounds& b) {
  CriterionResult r{4, "two-letter puzzle count == tableau LR number", false, "", 0, kSweepLimit};
  auto keys = equal_content_triples(2, b.max_n + 2, 2, 2);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    const auto& k = keys[i];
    const int n = k.size(), m = content(k.nw)[0];
    BigInt c = count_puzzles(k);
    BigInt lr = lr_tableau(word_partition(k.nw, m, n), word_partition(k.ne, m, n),
                           word_partition(k.s, m, n), m, n - m);
    t.check(c == lr, i, [&] { return detail::key_text(k) + " count " + c.str() + " lr " + lr.str(); });
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("triples");
  return r;
}

inline CriterionResult criterion_factor(const SweepBounds& b) {
  CriterionResult r{5, "count == product of pair deflations; deflation tuple injective", false, "",
                    0, 0};
  auto keys = equal_content_triples(1, b.max_n, std::min(3, b.max_d), b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    const auto& k = keys[i];
    if (!additive(k)) return;
    auto f = factor_check(k);
    if (!f.equal) {
      t.fail(i, detail::key_text(k) + " count " + f.count.str() + " product " + f.product.str());
      return;
    }
    std::set<std::vector<Puzzle>> tuples;
    auto ps = list_puzzles(k);
    for (const auto& p : ps) tuples.insert(assembly_tuple(p));
    t.check(tuples.size() == ps.size(), i, [&] {
      return detail::key_text(k) + " " + std::to_string(ps.size()) + " puzzles, " +
             std::to_string(tuples.size()) + " distinct tuples";
    });
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("additive triples");
  return r;
}

inline CriterionResult criterion_coarse(const SweepBounds& b) {
  CriterionResult r{6, "coarse product over both two-block interval partitions", false, "", 0, 0};
  auto keys = equal_content_triples(1, b.max_n, std::min(3, b.max_d), b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    const auto& k = keys[i];
    if (!additive(k)) return;
    for (int cut = 1; cut < k.alphabet(); ++cut) {
      auto c = coarse_check(k, Ambiguator::cut(cut, k.alphabet()));
      t.check(c.applicable && c.equal, i, [&] {
        return detail::key_text(k) + " cut " + std::to_string(cut) + ": " + c.count.str() +
               " vs " + c.product.str();
      });
    }
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("(triple, partition) checks");
  return r;
}

inline CriterionResult criterion_census(const SweepBounds& b) {
  CriterionResult r{7, "piece census; rhombi by corner == inversions of that side read clockwise", false, "", 0,
                    0};
  auto keys = equal_content_triples(1, b.max_n, 1, b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    for (const auto& p : list_puzzles(keys[i])) {
      std::string why = detail::census_problem(p);
      t.check(why.empty(), i, [&] { return detail::key_text(keys[i]) + " " + why; });
    }
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("puzzles");
  return r;
}

inline CriterionResult criterion_rigidity(const SweepBounds& b) {
  CriterionResult r{8, "no gentle loop <=> boundary count 1", false, "", 0, 0};
  auto keys = equal_content_triples(1, b.max_n, 1, b.max_d);
  if (b.max_d >= 2) {
    auto more = equal_content_triples(b.max_n + 1, b.max_n + 1, 2, 2);
    keys.insert(keys.end(), more.begin(), more.end());
  }
  Tally t, cuts;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    auto res = enumerate(keys[i], EnumerateMode::kList);
    for (const auto& p : res.puzzles) {
      bool loop = has_gentle_loop(p).found;
      t.check(loop == (res.count >= 2), i, [&] {
        return detail::key_text(keys[i]) + " count " + res.count.str() +
               (loop ? " but a gentle loop was found" : " but no gentle loop was found");
      });
      if (loop) continue;
      for (int c = 1; c < p.alphabet(); ++c) {
        Puzzle q = ambiguate_puzzle(p, Ambiguator::cut(c, p.alphabet()));
        cuts.check(is_rigid_by_count(q) && is_rigid(q), i, [&] {
          return detail::key_text(keys[i]) + " A_" + std::to_string(c) + "] is not rigid";
        });
      }
    }
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("puzzles") + "\n    cut ambiguations of loop-free puzzles: " +
             cuts.summary("checked");
  r.pass = r.pass && cuts.failed() == 0;
  return r;
}

inline CriterionResult criterion_levi(const SweepBounds& b) {
  CriterionResult r{9, "pairwise additivity <=> per-cut sums (nonzero cup constant)", false, "",
                    0, 0};
  auto keys = equal_content_triples(1, b.max_n, std::min(3, b.max_d), b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    const auto& k = keys[i];
    if (cup_constant(k.nw, k.ne, k.s) == 0) return;
    auto c = criterion_equiv(k.nw, k.ne, k.s);
    t.check(c.pairwise == c.per_cut, i, [&] {
      return detail::key_text(k) + " pairwise=" + std::to_string(c.pairwise) +
             " per-cut=" + std::to_string(c.per_cut);
    });
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("triples with nonzero cup constant");
  return r;
}

inline CriterionResult criterion_cone(const SweepBounds& b) {
  CriterionResult r{10, "cone: LR-positive box triples == members of the puzzle cone", false, "",
                    0, kSweepLimit};
  Tally t;
  long positive = 0;
  std::string sizes;
  for (int n = 1; n <= std::max(1, b.max_n - 1); ++n) {
    const auto& ineqs = facets(n);
    auto vs = detail::decreasing_vectors(n, cone_box(n));
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = 0; y < vs.size(); ++y)
        for (std::size_t z = 0; z < vs.size(); ++z) {
          int s = 0;
          for (int i = 0; i < n; ++i) s += vs[x][i] + vs[y][i] + vs[z][i];
          if (s == 0) triples.push_back({x, y, z});
        }
    std::atomic<long> pos{0};
    parallel_for(triples.size(), b.jobs, [&](std::size_t i) {
      const auto& l = vs[triples[i][0]];
      const auto& m = vs[triples[i][1]];
      const auto& v = vs[triples[i][2]];
      bool lr = invariant_count(l, m, v) > 0;
      if (lr) ++pos;
      bool in = member_of(ineqs, {l.begin(), l.end()}, {m.begin(), m.end()}, {v.begin(), v.end()});
      t.check(lr == in, i, [&] {
        auto show = [](const std::vector<int>& x) {
          std::string s;
          for (int e : x) s += (s.empty() ? "" : ",") + std::to_string(e);
          return "(" + s + ")";
        };
        return "n=" + std::to_string(n) + " " + show(l) + " " + show(m) + " " + show(v) +
               (lr ? " positive but outside the cone" : " in the cone but LR number 0");
      });
    });
    positive += pos;
    sizes += " n=" + std::to_string(n) + ":" + std::to_string(ineqs.size()) + " facets, |x|<=" +
             std::to_string(cone_box(n));
  }
  r.pass = t.failed() == 0;
  r.detail = t.summary("box triples") + " (" + std::to_string(positive) + " LR-positive;" +
             sizes + ")";
  return r;
}

inline CriterionResult criterion_duality(const SweepBounds& b) {
  CriterionResult r{11, "count invariant under reflect_dual", false, "", 0, 0};
  auto keys = equal_content_triples(1, b.max_n, 1, b.max_d);
  Tally t;
  parallel_for(keys.size(), b.jobs, [&](std::size_t i) {
    const auto& k = keys[i];
    TripleKey dk = dual_key(k);
    auto ps = list_puzzles(k);
    BigInt c2 = count_puzzles(dk);
    bool ok = BigInt(ps.size()) == c2;
    for (const auto& p : ps) {
      Puzzle q = reflect_dual(p);
      Boundary bd = boundary(q);
      ok = ok && validate(q).ok() && TripleKey{bd.nw, bd.ne, bd.s} == dk && reflect_dual(q) == p;
    }
    t.check(ok, i, [&] {
      return detail::key_text(k) + " count " + std::to_string(ps.size()) + " dual count " + c2.str();
    });
  });
  r.pass = t.failed() == 0;
  r.detail = t.summary("triples");
  return r;
}

/// All criteria in order. `report` is called as each one finishes.
inline std::vector<CriterionResult> run_acceptance(
    const SweepBounds& b, const std::function<void(const CriterionResult&)>& report = {}) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::function<CriterionResult()>> steps{
      [] { return criterion_five_instance(); }, [] { return criterion_unique_instance(); },
      [&] { return criterion_oracle(b); },       [&] { return criterion_grassmannian(b); },
      [&] { return criterion_factor(b); },       [&] { return criterion_coarse(b); },
      [&] { return criterion_census(b); },       [&] { return criterion_rigidity(b); },
      [&] { return criterion_levi(b); },         [&] { return criterion_cone(b); },
      [&] { return criterion_duality(b); }};
  std::vector<CriterionResult> out;
  for (auto& step : steps) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = step();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.title = "criterion " + std::to_string(r.id);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += "\n    over the time bound";
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %2d ", r.pass ? "PASS" : "FAIL", r.id);
  char tail[64];
  if (r.limit_seconds > 0)
    std::snprintf(tail, sizeof tail, " (%.2fs, bound %.0fs)", r.seconds, r.limit_seconds);
  else
    std::snprintf(tail, sizeof tail, " (%.2fs)", r.seconds);
  return head + r.title + tail + "\n    " + r.detail;
}

}  // namespace bkp
