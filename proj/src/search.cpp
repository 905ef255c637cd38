#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <thread>
#include <unordered_set>

#include "sft/deciders.hpp"

namespace sft {

namespace {

// Constraint network of an SFT restricted to a ball.
struct Network {
  BallGraph ball;
  std::size_t k = 0;
  std::vector<std::uint8_t> domain;  // n * k, 1 = still possible

  struct Binary {
    int u = 0, v = 0;                  // u < v
    std::vector<std::uint8_t> allowed;  // allowed[a * k + b] for u=a, v=b
  };
  std::vector<Binary> binaries;
  // arcs[w]: binary constraints touching w.
  std::vector<std::vector<int>> arcs;

  // Occurrences with three or more cells, bucketed by their last vertex.
  using Cells = std::vector<std::pair<int, Symbol>>;
  std::vector<std::vector<Cells>> ending;
};

Network build_network(const SftDefinition& s, int radius, std::size_t max_vertices) {
  const GroupModel& model = *s.model();
  Network net;
  net.ball = ball(model, radius, max_vertices);
  net.k = s.alphabet().size();
  const std::size_t n = net.ball.size();
  const std::size_t k = net.k;
  net.domain.assign(n * k, 1);
  net.arcs.assign(n, {});
  net.ending.assign(n, {});

  std::map<std::pair<int, int>, int> scope_index;
  for (const Pattern& p : s.forbidden()) {
    const GroupElement d0_inv = model.inverse(p.cells().front().first);
    std::unordered_set<GroupElement, GroupElementHash> positions;
    for (const GroupElement& v : net.ball.vertices) {
      positions.insert(model.multiply(v, d0_inv));
    }
    for (const GroupElement& at : positions) {
      Network::Cells cells;
      for (const auto& [d, sym] : p.cells()) {
        auto v = net.ball.find(model.multiply(at, d));
        if (!v) break;
        cells.emplace_back(*v, sym);
      }
      if (cells.size() != p.size()) continue;

      if (cells.size() == 1) {
        net.domain[cells[0].first * k + cells[0].second] = 0;
      } else if (cells.size() == 2) {
        auto [u, a] = cells[0];
        auto [v, b] = cells[1];
        if (u > v) {
          std::swap(u, v);
          std::swap(a, b);
        }
        auto [it, fresh] = scope_index.try_emplace({u, v}, static_cast<int>(net.binaries.size()));
        if (fresh) {
          net.binaries.push_back({u, v, std::vector<std::uint8_t>(k * k, 1)});
          net.arcs[u].push_back(it->second);
          net.arcs[v].push_back(it->second);
        }
        net.binaries[it->second].allowed[a * k + b] = 0;
      } else {
        int last = 0;
        for (const auto& c : cells) last = std::max(last, c.first);
        net.ending[last].push_back(std::move(cells));
      }
    }
  }
  // Deterministic arc order regardless of hash iteration.
  for (auto& a : net.arcs) std::sort(a.begin(), a.end());
  return net;
}

// AC-3 over binary constraints starting from the given changed vertices.
bool propagate(const Network& net, std::vector<std::uint8_t>& dom,
               std::vector<int> queue) {
  const std::size_t k = net.k;
  std::vector<std::uint8_t> queued(net.ball.size(), 0);
  for (int w : queue) queued[w] = 1;
  std::size_t head = 0;
  while (head < queue.size()) {
    const int w = queue[head++];
    queued[w] = 0;
    for (int ci : net.arcs[w]) {
      const Network::Binary& c = net.binaries[ci];
      const bool w_is_u = c.u == w;
      const int other = w_is_u ? c.v : c.u;
      bool changed = false;
      bool any = false;
      for (std::size_t a = 0; a < k; ++a) {
        if (!dom[other * k + a]) continue;
        bool supported = false;
        for (std::size_t b = 0; b < k && !supported; ++b) {
          if (!dom[w * k + b]) continue;
          supported = w_is_u ? c.allowed[b * k + a] : c.allowed[a * k + b];
        }
        if (supported) {
          any = true;
        } else {
          dom[other * k + a] = 0;
          changed = true;
        }
      }
      if (!any) return false;
      if (changed && !queued[other]) {
        queued[other] = 1;
        queue.push_back(other);
      }
    }
  }
  return true;
}

bool nary_violated(const Network& net, const std::vector<std::uint8_t>& dom, int v) {
  for (const auto& cells : net.ending[v]) {
    bool all = true;
    for (const auto& [u, sym] : cells) {
      // Every cell index <= v is a singleton, so membership is equality.
      if (!dom[u * net.k + sym]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

enum class BranchStatus { Found, Exhausted, OverBudget, Aborted };

struct BranchResult {
  BranchStatus status = BranchStatus::Exhausted;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> solution;
};

class Searcher {
 public:
  Searcher(const Network& net, std::uint64_t cap, const std::atomic<int>* first_found,
           int branch)
      : net_(net), cap_(cap), first_found_(first_found), branch_(branch) {}

  // Tries value `a` at vertex v on top of `dom`, then continues.
  BranchStatus assign(const std::vector<std::uint8_t>& dom, int v, std::size_t a) {
    if (++nodes_ > cap_) return BranchStatus::OverBudget;
    if (first_found_ && (nodes_ & 1023) == 0 &&
        first_found_->load(std::memory_order_relaxed) < branch_) {
      return BranchStatus::Aborted;
    }
    std::vector<std::uint8_t> next = dom;
    std::fill(next.begin() + v * net_.k, next.begin() + (v + 1) * net_.k, 0);
    next[v * net_.k + a] = 1;
    if (nary_violated(net_, next, v)) return BranchStatus::Exhausted;
    if (!propagate(net_, next, {v})) return BranchStatus::Exhausted;
    return descend(next, v + 1);
  }

  BranchStatus descend(const std::vector<std::uint8_t>& dom, int v) {
    if (static_cast<std::size_t>(v) == net_.ball.size()) {
      solution = dom;
      return BranchStatus::Found;
    }
    for (std::size_t a = 0; a < net_.k; ++a) {
      if (!dom[v * net_.k + a]) continue;
      BranchStatus st = assign(dom, v, a);
      if (st != BranchStatus::Exhausted) return st;
    }
    return BranchStatus::Exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::uint8_t> solution;

 private:
  const Network& net_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  const std::atomic<int>* first_found_;
  int branch_;
};

BranchResult run_branch(const Network& net, const std::vector<std::uint8_t>& root,
                        std::size_t a, std::uint64_t cap,
                        const std::atomic<int>* first_found, int branch) {
  Searcher s(net, cap, first_found, branch);
  BranchResult r;
  r.status = s.assign(root, 0, a);
  r.nodes = s.nodes();
  if (r.status == BranchStatus::Found) r.solution = std::move(s.solution);
  return r;
}

PartialConfiguration to_configuration(const SftDefinition& s, const Network& net,
                                      const std::vector<std::uint8_t>& dom) {
  PartialConfiguration out(s.alphabet());
  for (std::size_t v = 0; v < net.ball.size(); ++v) {
    for (std::size_t a = 0; a < net.k; ++a) {
      if (dom[v * net.k + a]) {
        out.set(net.ball.vertices[v], static_cast<Symbol>(a));
        break;
      }
    }
  }
  return out;
}

}  // namespace

SearchResult ball_admissibility_search(const SftDefinition& s, int radius,
                                       const SearchOptions& options) {
  if (radius < 0) throw PreconditionError("search radius must be non-negative");
  const Network net = build_network(s, radius, options.max_vertices);
  SearchResult result;

  std::vector<std::uint8_t> root = net.domain;
  std::vector<int> all(net.ball.size());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
  if (net.k == 0 || !propagate(net, root, all)) {
    result.outcome = SearchOutcome::Inadmissible;
    return result;
  }

  std::vector<std::size_t> branches;
  for (std::size_t a = 0; a < net.k; ++a) {
    if (root[a]) branches.push_back(a);
  }

  const std::uint64_t budget = options.budget;
  std::vector<BranchResult> results(branches.size());
  const unsigned threads =
      std::min<unsigned>(std::max(1u, options.threads), static_cast<unsigned>(branches.size()));

  if (threads <= 1) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      results[i] = run_branch(net, root, branches[i], budget - used, nullptr, 0);
      if (results[i].status != BranchStatus::Exhausted) break;
      used += results[i].nodes;
    }
  } else {
    // Each branch runs against the full budget; the sequential accounting
    // below reproduces the single-threaded outcome exactly.
    std::atomic<int> first_found{INT_MAX};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < branches.size(); i = next++) {
        if (first_found.load() < static_cast<int>(i)) continue;
        results[i] = run_branch(net, root, branches[i], budget, &first_found,
                                static_cast<int>(i));
        if (results[i].status == BranchStatus::Found) {
          int expected = first_found.load();
          while (static_cast<int>(i) < expected &&
                 !first_found.compare_exchange_weak(expected, static_cast<int>(i))) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::uint64_t used = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const BranchResult& r = results[i];
    if (r.status == BranchStatus::OverBudget || used + r.nodes > budget) {
      result.outcome = SearchOutcome::BudgetExceeded;
      result.nodes = budget;
      return result;
    }
    used += r.nodes;
    if (r.status == BranchStatus::Found) {
      result.outcome = SearchOutcome::Admissible;
      result.witness = to_configuration(s, net, r.solution);
      result.nodes = used;
      return result;
    }
  }
  result.outcome = SearchOutcome::Inadmissible;
  result.nodes = used;
  return result;
}

EmptinessVerdict emptiness_semidecide(const SftDefinition& s, int max_radius,
                                      const SearchOptions& options) {
  EmptinessVerdict v;
  v.method = "ball-search";
  v.kind = VerdictKind::Unknown;
  for (int r = 0; r <= max_radius; ++r) {
    SearchResult res = ball_admissibility_search(s, r, options);
    switch (res.outcome) {
      case SearchOutcome::Inadmissible:
        v.kind = VerdictKind::Empty;
        v.radius = r;
        v.witness.reset();
        return v;
      case SearchOutcome::BudgetExceeded:
        throw BudgetExceeded("search budget of " + std::to_string(options.budget) +
                             " nodes exhausted at radius " + std::to_string(r));
      case SearchOutcome::Admissible:
        v.radius = r;
        v.witness = std::move(res.witness);
        break;
    }
  }
  return v;
}

}  // namespace sft
