#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sft/coset.hpp"
#include "sft/deciders.hpp"
#include "sft/sft.hpp"

namespace sft {

// ---------------------------------------------------------------------------
// Subgroup lifting

// Re-indexes the forbidden patterns of an H-SFT through the embedding; the
// alphabet is unchanged.  The result is empty iff the input is.
SftDefinition lift_subgroup_sft(const SftDefinition& s_h, const CosetEmbedding& e);

// c'(g) = c(h(g)) for every g in the window.  Throws InsufficientSupport
// naming the first g whose h(g) is not covered by c.
PartialConfiguration lift_configuration(const PartialConfiguration& c,
                                        const CosetEmbedding& e,
                                        const std::vector<GroupElement>& window);

// ---------------------------------------------------------------------------
// Rays

// Eventually periodic word prefix . period^inf over positive generators,
// with cached prefix evaluations p_j = w_1 ... w_j.  With an empty period
// the ray is finite and has length prefix.size().
class RayWord {
 public:
  RayWord(GroupPtr model, Word prefix, Word period);

  const GroupPtr& model() const { return model_; }
  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }
  bool infinite() const { return !period_.empty(); }
  std::optional<std::size_t> length() const;

  // w_{j+1} (zero-based letter j).  Throws PreconditionError past the end.
  Letter letter(std::size_t j) const;
  // p_j = w_1 ... w_j; extends and re-verifies the cache as needed.
  const GroupElement& point(std::size_t j) const;

  // Checks p_i^-1 p_j is not in <a> for all 0 <= i < j <= n.  Returns the
  // first offending pair, if any.
  std::optional<std::pair<std::size_t, std::size_t>> violation(std::size_t n) const;

  // Extends the working length to n, throwing PreconditionError if the
  // subword condition fails on the extension.
  void verify(std::size_t n) const;
  std::size_t working_length() const { return verified_; }

 private:
  GroupPtr model_;
  Word prefix_;
  Word period_;
  mutable std::vector<GroupElement> points_;
  mutable std::size_t verified_ = 0;
};

struct RaySearchResult {
  std::optional<RayWord> ray;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

// Pure powers of non-central generators first, then depth-first search over
// positive words of the requested length.
RaySearchResult find_ray(const GroupPtr& model, std::size_t length,
                         std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Z^2 -> G compiler

enum class Rule { I, II, III };
std::string to_string(Rule r);

struct ReducedSft {
  SftDefinition base;    // one-step SFT over z2 with alphabet A
  GroupPtr target;       // generators g_1..g_n, g_1 central
  SftDefinition sft;     // alphabet A x {2..n}
  std::vector<Rule> rules;  // provenance tag per forbidden pattern
  std::optional<RayWord> ray;

  std::size_t base_symbols() const { return base.alphabet().size(); }
  // Number of second-component values, n - 1.
  int directions() const { return target->rank() - 1; }
  // Symbol (a, i) for base symbol a and generator index i in 2..n
  // (one-based, as in g_i).
  Symbol encode(Symbol a, int i) const;
  std::pair<Symbol, int> decode(Symbol s) const;
};

// Rules:
//   (I)   forbid {1 -> (a,i), g_1 -> (b,j)} for all a, b and i != j;
//   (II)  forbid {1 -> (a,i), g_1 -> (b,i)} when a is not allowed left of b;
//   (III) forbid {1 -> (a,i), g_i -> (b,j)} for all j when a is not allowed
//         below b.
ReducedSft reduce_z2_to_g(const SftDefinition& base, GroupPtr target,
                          std::optional<RayWord> ray = std::nullopt);

// ---------------------------------------------------------------------------
// Z^2 configurations and patches

// A total Z^2 configuration given by a periodic tile: value(col, row) =
// tile[row mod h][col mod w].
class Z2Configuration {
 public:
  Z2Configuration(Alphabet alphabet, std::vector<std::vector<Symbol>> tile);

  static Z2Configuration constant(Alphabet alphabet, Symbol a);
  static Z2Configuration checkerboard(Alphabet alphabet, Symbol a, Symbol b);
  // Rows alternate a, b (constant along each horizontal line).
  static Z2Configuration stripes(Alphabet alphabet, Symbol a, Symbol b);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::vector<Symbol>>& tile() const { return tile_; }
  Symbol at(Coord col, Coord row) const;

  // Periodic admissibility: checks every position of one period with
  // wrap-around against a one-step z2 SFT.
  bool admissible(const SftDefinition& base) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Symbol>> tile_;
};

// Finite patch cells(row, col), rows 0..height, columns 0..width-1;
// undefined cells are empty optionals.
struct Z2Patch {
  Alphabet alphabet;
  std::vector<std::vector<std::optional<Symbol>>> rows;

  std::size_t height() const { return rows.size(); }
  std::size_t width() const { return rows.empty() ? 0 : rows.front().size(); }
  // Every pair of defined horizontally/vertically adjacent cells is allowed.
  bool admissible(const SftDefinition& base) const;
};

struct EncodeResult {
  PartialConfiguration config;
  bool stalled = false;
  // Ball elements left unassigned when the extension stalled.
  std::vector<GroupElement> frontier;
  std::size_t lines = 0;
};

// Ray lines first: c'(p_j g_1^l) = (c(l, j), i(j)) with g_{i(j)} = w_{j+1};
// then repeatedly the first x (canonical order) outside the assigned lines
// with x g_m on an assigned line receives its whole <g_1>-line, shifted one
// row down.  Restricted to ball(radius).
EncodeResult encode_z2_config(const Z2Configuration& c, const ReducedSft& s_g,
                              int radius, std::size_t max_vertices = kDefaultBallCap);

// Reads rows 0..height along the chain P_0 = 1, P_{j+1} = P_j g_{y_j} where
// y_j is the second component at P_j; cell (row j, col i) is the first
// component of c(P_j g_1^i).
Z2Patch decode_g_config(const PartialConfiguration& c, const ReducedSft& s_g,
                        int height, int width);

}  // namespace sft
