#include "bootperc/percolation.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <nlohmann/json.hpp>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

void check_inputs(const Graph& g, int r, const VertexSet& seeds) {
  if (r < 1) throw PreconditionError("threshold r must be >= 1, got " + std::to_string(r));
  if (seeds.width() != g.order()) throw WidthMismatch(g.order(), seeds.width());
}

}  // namespace

PercolationWorkspace::PercolationWorkspace(const Graph& g, int r)
    : g_(&g), r_(r), count_(g.order(), 0), infected_(g.order(), 0) {
  if (r < 1) throw PreconditionError("threshold r must be >= 1, got " + std::to_string(r));
  queue_.reserve(g.order());
}

void PercolationWorkspace::reset() {
  std::fill(count_.begin(), count_.end(), 0);
  std::fill(infected_.begin(), infected_.end(), 0);
  queue_.clear();
  infected_count_ = 0;
}

void PercolationWorkspace::infect(Vertex v) {
  if (infected_[v] != 0) return;
  infected_[v] = 1;
  ++infected_count_;
  queue_.push_back(v);
}

void PercolationWorkspace::drain() {
  const auto threshold = static_cast<std::uint32_t>(r_);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (Vertex u : g_->neighbor_list(queue_[head])) {
      if (infected_[u] == 0 && ++count_[u] >= threshold) infect(u);
    }
  }
}

std::size_t PercolationWorkspace::run(const VertexSet& seeds) {
  if (seeds.width() != g_->order()) throw WidthMismatch(g_->order(), seeds.width());
  return run_words(seeds.words());
}

std::size_t PercolationWorkspace::run_words(std::span<const std::uint64_t> seeds) {
  reset();
  for (std::size_t w = 0; w < seeds.size(); ++w) {
    std::uint64_t bits = seeds[w];
    while (bits != 0) {
      infect(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  drain();
  return infected_count_;
}

VertexSet PercolationWorkspace::infected() const {
  VertexSet out(g_->order());
  for (Vertex v = 0; v < g_->order(); ++v) {
    if (infected_[v] != 0) out.insert(v);
  }
  return out;
}

VertexSet closure(const Graph& g, int r, const VertexSet& seeds) {
  check_inputs(g, r, seeds);
  PercolationWorkspace ws(g, r);
  ws.run(seeds);
  return ws.infected();
}

bool propagates(const Graph& g, int r, const VertexSet& seeds) {
  check_inputs(g, r, seeds);
  if (seeds.empty()) return false;
  PercolationWorkspace ws(g, r);
  return ws.run(seeds) == g.order();
}

VertexSet closure_naive(const Graph& g, int r, const VertexSet& seeds) {
  check_inputs(g, r, seeds);
  VertexSet current = seeds;
  for (;;) {
    VertexSet next = current;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (current.contains(v)) continue;
      if ((g.neighbors(v) & current).size() >= static_cast<std::size_t>(r)) next.insert(v);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

PercolationTrace trace(const Graph& g, int r, const VertexSet& seeds) {
  check_inputs(g, r, seeds);
  PercolationTrace t;
  t.r = r;
  t.rounds.push_back(seeds);
  std::vector<std::uint32_t> count(g.order(), 0);
  VertexSet fresh = seeds;
  const auto threshold = static_cast<std::uint32_t>(r);
  for (;;) {
    // Only neighbors of last round's arrivals can cross the threshold now.
    const VertexSet& prev = t.rounds.back();
    VertexSet arrivals(g.order());
    fresh.for_each([&](Vertex v) {
      for (Vertex u : g.neighbor_list(v)) {
        if (!prev.contains(u) && ++count[u] >= threshold) arrivals.insert(u);
      }
    });
    if (arrivals.empty()) break;
    t.rounds.push_back(prev | arrivals);
    t.newly_infected.push_back(arrivals);
    fresh = std::move(arrivals);
  }
  return t;
}

void to_json(nlohmann::json& j, const VertexSet& s) { j = s.members(); }

void to_json(nlohmann::json& j, const PercolationTrace& t) {
  j = nlohmann::json{{"r", t.r},
                     {"final_round", t.final_round()},
                     {"rounds", t.rounds},
                     {"newly_infected", t.newly_infected},
                     {"final_size", t.final_set().size()},
                     {"percolates", t.final_set().is_full() && !t.rounds.front().empty()}};
}

}  // namespace bootperc
