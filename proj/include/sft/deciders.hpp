#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sft/sft.hpp"

namespace sft {

enum class VerdictKind { Empty, Nonempty, Unknown };

std::string to_string(VerdictKind k);

// Outcome of an emptiness query together with a re-checkable certificate.
struct EmptinessVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string method;

  // Empty from ball search: the inadmissible radius.  Unknown: the largest
  // radius that admitted a pattern.
  std::optional<int> radius;
  // Empty from decide_z: length of the shortest word that admits no
  // locally admissible assignment.
  std::optional<int> obstruction_length;
  // Symbol-elimination fixed point (decide_z and decide_tree).
  std::vector<Symbol> surviving;
  // decide_z Nonempty: a cycle a_0 -> a_1 -> ... -> a_0 in the transition
  // graph, i.e. the period of a periodic configuration.
  std::vector<Symbol> cycle;
  // decide_tree Empty: number of elimination rounds until nothing survived.
  std::optional<int> rounds;
  // Unknown: a locally admissible pattern on the largest searched ball.
  std::optional<PartialConfiguration> witness;
};

// One-step SFT over z (or free1): transition-graph cycle detection.
EmptinessVerdict decide_z(const SftDefinition& s);

// One-step SFT over free<k>: greatest-fixed-point symbol elimination.
EmptinessVerdict decide_tree(const SftDefinition& s);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::size_t max_vertices = kDefaultBallCap;
};

enum class SearchOutcome { Admissible, Inadmissible, BudgetExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetExceeded;
  std::optional<PartialConfiguration> witness;
  std::uint64_t nodes = 0;
};

// Exhaustive backtracking over assignments of ball(radius) in canonical
// vertex order and alphabet order, pruned by arc consistency on two-cell
// occurrences.  Returns the lexicographically first witness.  The outcome
// and witness do not depend on options.threads.
SearchResult ball_admissibility_search(const SftDefinition& s, int radius,
                                       const SearchOptions& options = {});

// Runs the ball search for r = 0..max_radius.  Never claims Nonempty.
// Throws BudgetExceeded when a radius exhausts the budget.
EmptinessVerdict emptiness_semidecide(const SftDefinition& s, int max_radius,
                                      const SearchOptions& options = {});

}  // namespace sft
