#include "sft/deciders.hpp"

#include <algorithm>
#include <functional>

namespace sft {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Empty: return "empty";
    case VerdictKind::Nonempty: return "nonempty";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool is_free_like(const GroupModel& m) {
  const std::string& n = m.name();
  return n == "z" || n.rfind("free", 0) == 0;
}

OneStepRelations checked_relations(const SftDefinition& s) {
  if (!s.is_one_step()) throw PreconditionError("SFT is not one-step");
  return one_step_relations(s);
}

// Removes, simultaneously per round, every symbol lacking an allowed
// successor or predecessor among the survivors in some generator direction.
// Returns the survivors and the number of rounds that removed something.
std::pair<std::vector<bool>, int> eliminate(const OneStepRelations& rel, int rank) {
  const std::size_t k = rel.symbols;
  std::vector<bool> alive(k, true);
  int rounds = 0;
  while (true) {
    std::vector<Symbol> doomed;
    for (std::size_t a = 0; a < k; ++a) {
      if (!alive[a]) continue;
      bool ok = true;
      for (int g = 0; g < rank && ok; ++g) {
        bool out = false, in = false;
        for (std::size_t b = 0; b < k; ++b) {
          if (!alive[b]) continue;
          out = out || rel.ok(g, a, b);
          in = in || rel.ok(g, b, a);
        }
        ok = out && in;
      }
      if (!ok) doomed.push_back(static_cast<Symbol>(a));
    }
    if (doomed.empty()) break;
    for (Symbol a : doomed) alive[a] = false;
    ++rounds;
  }
  return {alive, rounds};
}

std::vector<Symbol> alive_list(const std::vector<bool>& alive) {
  std::vector<Symbol> out;
  for (std::size_t a = 0; a < alive.size(); ++a) {
    if (alive[a]) out.push_back(static_cast<Symbol>(a));
  }
  return out;
}

}  // namespace

EmptinessVerdict decide_z(const SftDefinition& s) {
  const GroupModel& model = *s.model();
  if (model.rank() != 1 || !is_free_like(model)) {
    throw PreconditionError("decide_z requires a one-step SFT over z, got group " +
                            model.name());
  }
  const OneStepRelations rel = checked_relations(s);
  const std::size_t k = rel.symbols;

  auto [alive, rounds] = eliminate(rel, 1);
  EmptinessVerdict v;
  v.method = "transition-graph";
  v.surviving = alive_list(alive);

  if (!v.surviving.empty()) {
    // Every survivor has a surviving successor, so walking smallest
    // successors from the smallest survivor must close a cycle.
    std::vector<int> seen_at(k, -1);
    std::vector<Symbol> walk;
    Symbol cur = v.surviving.front();
    while (seen_at[cur] < 0) {
      seen_at[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      for (std::size_t b = 0; b < k; ++b) {
        if (alive[b] && rel.ok(0, cur, static_cast<Symbol>(b))) {
          cur = static_cast<Symbol>(b);
          break;
        }
      }
    }
    v.kind = VerdictKind::Nonempty;
    v.cycle.assign(walk.begin() + seen_at[cur], walk.end());
    return v;
  }

  // Acyclic transition graph: the longest path bounds admissible words.
  std::vector<int> longest(k, 0);
  std::function<int(Symbol)> depth = [&](Symbol a) -> int {
    if (longest[a]) return longest[a];
    int best = 1;
    for (std::size_t b = 0; b < k; ++b) {
      if (rel.ok(0, a, static_cast<Symbol>(b))) {
        best = std::max(best, 1 + depth(static_cast<Symbol>(b)));
      }
    }
    return longest[a] = best;
  };
  int max_word = 0;
  for (std::size_t a = 0; a < k; ++a) max_word = std::max(max_word, depth(a));
  v.kind = VerdictKind::Empty;
  v.obstruction_length = max_word + 1;
  v.rounds = rounds;
  return v;
}

EmptinessVerdict decide_tree(const SftDefinition& s) {
  const GroupModel& model = *s.model();
  if (!is_free_like(model)) {
    throw PreconditionError("decide_tree requires a one-step SFT over a free group, got " +
                            model.name());
  }
  const OneStepRelations rel = checked_relations(s);
  auto [alive, rounds] = eliminate(rel, model.rank());
  EmptinessVerdict v;
  v.method = "symbol-elimination";
  v.surviving = alive_list(alive);
  v.rounds = rounds;
  v.kind = v.surviving.empty() ? VerdictKind::Empty : VerdictKind::Nonempty;
  // A radius-`rounds` ball already refutes every symbol at its center.
  if (v.kind == VerdictKind::Empty) v.radius = rounds;
  return v;
}

}  // namespace sft
