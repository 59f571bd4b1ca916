#include "bootperc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "bootperc/analysis.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

std::string_view to_string(BoundOrigin origin) {
  switch (origin) {
    case BoundOrigin::Trivial: return "trivial";
    case BoundOrigin::ForcedCount: return "forced-count";
    case BoundOrigin::ComponentSum: return "component-sum";
    case BoundOrigin::Perimeter: return "perimeter";
    case BoundOrigin::Search: return "search";
  }
  return "unknown";
}

VertexSet forced_vertices(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("threshold r must be >= 1, got " + std::to_string(r));
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < static_cast<std::size_t>(r)) out.insert(v);
  }
  return out;
}

VertexSet greedy_upper(const Graph& g, int r) {
  VertexSet chosen = forced_vertices(g, r);
  PercolationWorkspace ws(g, r);
  ws.run(chosen);
  VertexSet reached = ws.infected();
  while (!reached.is_full()) {
    Vertex best = 0;
    std::size_t best_size = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (reached.contains(v)) continue;
      VertexSet trial = chosen;
      trial.insert(v);
      const std::size_t size = ws.run(trial);
      if (size > best_size) {
        best_size = size;
        best = v;
      }
    }
    chosen.insert(best);
    ws.run(chosen);
    reached = ws.infected();
  }
  return chosen;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct BudgetExhausted {};

/// Shared across workers for one solve.
class Budget {
 public:
  Budget(std::uint64_t limit, std::optional<std::chrono::milliseconds> time_limit)
      : limit_(limit), start_(std::chrono::steady_clock::now()), time_limit_(time_limit) {}

  /// Adds `n` evaluations; returns false once the budget is gone.
  bool charge(std::uint64_t n) {
    const auto total = used_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > limit_) exhausted_.store(true, std::memory_order_relaxed);
    if (time_limit_ && std::chrono::steady_clock::now() - start_ > *time_limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
    }
    return !exhausted_.load(std::memory_order_relaxed);
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  /// Evaluations a worker may accumulate before charging; small budgets are
  /// charged one evaluation at a time so the limit is exact.
  std::uint64_t batch() const { return std::clamp<std::uint64_t>(limit_ / 1024, 1, 256); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::milliseconds> time_limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

/// Enumerates k-subsets of the non-forced vertices of one connected graph.
class ComponentSearch {
 public:
  ComponentSearch(const Graph& g, int r, const VertexSet& forced, Budget& budget, unsigned workers)
      : g_(g), r_(r), forced_(forced), budget_(budget), workers_(std::max(1u, workers)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!forced.contains(v)) pool_.push_back(v);
    }
    // suffix_[j] = pool_[j..] as a bitset.
    suffix_.assign(pool_.size() + 1, VertexSet(g.order()));
    for (std::size_t j = pool_.size(); j-- > 0;) {
      suffix_[j] = suffix_[j + 1];
      suffix_[j].insert(pool_[j]);
    }
  }

  std::size_t pool_size() const { return pool_.size(); }

  /// Lexicographically first percolating set with `extra` non-forced
  /// vertices, or nullopt. Throws BudgetExhausted.
  std::optional<VertexSet> find(std::size_t extra) {
    if (extra > pool_.size()) return std::nullopt;
    if (extra == 0) {
      PercolationWorkspace ws(g_, r_);
      charge_or_throw(1);
      if (ws.run(forced_) == g_.order()) return forced_;
      return std::nullopt;
    }
    const std::size_t chunks = pool_.size() - extra + 1;
    completed_ = std::vector<std::atomic<bool>>(chunks);
    std::vector<std::optional<VertexSet>> results(chunks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};
    std::atomic<std::size_t> dead_from{kNone};
    std::atomic<bool> out_of_budget{false};

    auto worker = [&] {
      Worker w(*this, extra);
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= chunks || out_of_budget.load(std::memory_order_relaxed)) return;
        if (i > best.load() || i >= dead_from.load()) continue;
        try {
          switch (w.run_chunk(i, best)) {
            case ChunkResult::Found: {
              results[i] = w.witness();
              std::size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              break;
            }
            case ChunkResult::DeadFromHere: {
              std::size_t cur = dead_from.load();
              while (i < cur && !dead_from.compare_exchange_weak(cur, i)) {
              }
              break;
            }
            case ChunkResult::Empty:
            case ChunkResult::Abandoned: break;
          }
        } catch (const BudgetExhausted&) {
          out_of_budget.store(true);
          return;
        }
      }
    };

    if (workers_ == 1) {
      worker();
    } else {
      std::vector<std::jthread> threads;
      for (unsigned t = 0; t < workers_; ++t) threads.emplace_back(worker);
    }
    const std::size_t winner = best.load();
    // A budget stop only matters if it could have hidden a smaller chunk.
    if (out_of_budget.load()) {
      bool settled = winner != kNone;
      for (std::size_t i = 0; settled && i < winner; ++i) {
        if (i >= dead_from.load()) break;
        // chunks below the winner must all have completed without a find
        settled = completed_[i].load();
      }
      if (!settled) throw BudgetExhausted{};
    }
    if (winner == kNone) return std::nullopt;
    return results[winner];
  }

 private:
  enum class ChunkResult { Found, Empty, DeadFromHere, Abandoned };

  void charge_or_throw(std::uint64_t n) {
    if (!budget_.charge(n)) throw BudgetExhausted{};
  }

  class Worker {
   public:
    Worker(ComponentSearch& s, std::size_t extra)
        : s_(s), extra_(extra), ws_(s.g_, s.r_), current_(s.forced_), probe_(s.g_.order()) {
      chosen_.reserve(extra);
    }

    ~Worker() {
      if (pending_ != 0) s_.budget_.charge(pending_);
    }

    ChunkResult run_chunk(std::size_t first, const std::atomic<std::size_t>& best) {
      best_ = &best;
      chunk_ = first;
      // Every completion of this chunk is a subset of forced ∪ pool[first..].
      if (!percolates_with_suffix(first)) {
        s_.completed_[first].store(true);
        return ChunkResult::DeadFromHere;
      }
      chosen_.clear();
      current_ = s_.forced_;
      push(first);
      abandoned_ = false;
      const bool found = descend(first + 1);
      if (abandoned_) return ChunkResult::Abandoned;
      s_.completed_[first].store(true);
      return found ? ChunkResult::Found : ChunkResult::Empty;
    }

    VertexSet witness() const { return current_; }

   private:
    void push(std::size_t j) {
      chosen_.push_back(j);
      current_.insert(s_.pool_[j]);
    }
    void pop() {
      current_.erase(s_.pool_[chosen_.back()]);
      chosen_.pop_back();
    }

    void tick() {
      if (++pending_ >= s_.budget_.batch()) flush();
    }
    void flush() {
      if (pending_ == 0) return;
      const bool ok = s_.budget_.charge(pending_);
      pending_ = 0;
      if (!ok) throw BudgetExhausted{};
    }

    bool percolates_with_suffix(std::size_t j) {
      probe_ = current_;
      probe_ |= s_.suffix_[j];
      tick();
      return ws_.run(probe_) == s_.g_.order();
    }

    bool descend(std::size_t next) {
      const std::size_t remaining = extra_ - chosen_.size();
      if (remaining == 0) {
        tick();
        return ws_.run(current_) == s_.g_.order();
      }
      if (best_->load(std::memory_order_relaxed) < chunk_) {
        abandoned_ = true;
        return false;
      }
      const std::size_t last = s_.pool_.size() - remaining;
      for (std::size_t j = next; j <= last; ++j) {
        // Monotone cut: if forced ∪ chosen ∪ pool[j..] fails, so does every later j.
        if (remaining >= 2 && !percolates_with_suffix(j)) return false;
        push(j);
        if (descend(j + 1)) return true;
        pop();
        if (abandoned_) return false;
      }
      return false;
    }

    ComponentSearch& s_;
    std::size_t extra_;
    PercolationWorkspace ws_;
    VertexSet current_;
    VertexSet probe_;
    std::vector<std::size_t> chosen_;
    const std::atomic<std::size_t>* best_ = nullptr;
    std::size_t chunk_ = 0;
    bool abandoned_ = false;
    std::uint64_t pending_ = 0;
  };

  const Graph& g_;
  int r_;
  const VertexSet& forced_;
  Budget& budget_;
  unsigned workers_;
  std::vector<Vertex> pool_;
  std::vector<VertexSet> suffix_;
  std::vector<std::atomic<bool>> completed_;
};

VertexSet lift(const VertexSet& local, const std::vector<Vertex>& origin, std::size_t width) {
  VertexSet out(width);
  local.for_each([&](Vertex v) { out.insert(origin[v]); });
  return out;
}

}  // namespace

SolverReport min_percolating(const Graph& g, int r, const SolveOptions& options) {
  if (r < 1) throw PreconditionError("threshold r must be >= 1, got " + std::to_string(r));
  if (options.budget == 0) throw PreconditionError("solver budget must be positive");
  const auto started = std::chrono::steady_clock::now();
  Budget budget(options.budget, options.time_limit);

  SolverReport report;
  report.witness = g.empty_set();
  bool out_of_budget = false;
  std::size_t start_sum = 0;
  std::size_t proven_sum = 0;
  std::size_t upper_sum = 0;

  for (const VertexSet& comp : connected_components(g)) {
    std::vector<Vertex> origin;
    const Graph sub = g.induced(comp, &origin);
    const VertexSet forced = forced_vertices(sub, r);

    ComponentReport cr;
    cr.vertices = comp;
    cr.forced = forced.size();
    const std::size_t trivial = std::min<std::size_t>(static_cast<std::size_t>(r), sub.order());
    cr.start_bound = forced.size() >= trivial ? LowerBound{forced.size(), BoundOrigin::ForcedCount}
                                              : LowerBound{trivial, BoundOrigin::Trivial};
    if (options.component_bound) {
      if (auto hint = options.component_bound(g, comp); hint && hint->value > cr.start_bound.value) {
        cr.start_bound = *hint;
      }
    }
    const VertexSet fallback = greedy_upper(sub, r);
    cr.upper = fallback.size();
    std::size_t proven = cr.start_bound.value;

    if (!out_of_budget) {
      ComponentSearch search(sub, r, forced, budget, options.workers);
      try {
        for (std::size_t k = cr.start_bound.value; k <= sub.order(); ++k) {
          if (auto found = search.find(k - forced.size())) {
            cr.value = k;
            cr.upper = k;
            cr.certificate = k == cr.start_bound.value ? cr.start_bound.origin : BoundOrigin::Search;
            report.witness |= lift(*found, origin, g.order());
            break;
          }
          proven = k + 1;
        }
      } catch (const BudgetExhausted&) {
        out_of_budget = true;
      }
    }
    if (!cr.value) report.witness |= lift(fallback, origin, g.order());
    start_sum += cr.start_bound.value;
    proven_sum += cr.value.value_or(proven);
    upper_sum += cr.upper;
    report.components.push_back(std::move(cr));
  }

  const bool several = report.components.size() > 1;
  report.sets_examined = budget.used();
  report.upper_bound = upper_sum;
  if (out_of_budget) {
    report.status = SolveStatus::Inconclusive;
    report.lower_bound_used = {proven_sum, several ? BoundOrigin::ComponentSum : BoundOrigin::Search};
  } else {
    report.status = SolveStatus::Optimal;
    report.value = upper_sum;
    report.exhaustive = true;
    if (several) {
      report.lower_bound_used = {start_sum, BoundOrigin::ComponentSum};
    } else if (!report.components.empty()) {
      report.lower_bound_used = report.components.front().start_bound;
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

void to_json(nlohmann::json& j, const SolverReport& report) {
  j = nlohmann::json{
      {"status", report.optimal() ? "optimal" : "inconclusive"},
      {"value", report.value ? nlohmann::json(*report.value) : nlohmann::json(nullptr)},
      {"witness", report.witness.members()},
      {"lower_bound", {{"value", report.lower_bound_used.value},
                       {"origin", std::string(to_string(report.lower_bound_used.origin))}}},
      {"upper_bound", report.upper_bound},
      {"exhaustive", report.exhaustive},
      {"sets_examined", report.sets_examined},
      {"wall_time_ms", std::chrono::duration<double, std::milli>(report.wall_time).count()},
  };
  auto& comps = j["components"] = nlohmann::json::array();
  for (const auto& c : report.components) {
    comps.push_back({{"size", c.vertices.size()},
                     {"forced", c.forced},
                     {"value", c.value ? nlohmann::json(*c.value) : nlohmann::json(nullptr)},
                     {"upper", c.upper},
                     {"certificate", c.certificate ? std::string(to_string(*c.certificate)) : "none"}});
  }
}

}  // namespace bootperc
