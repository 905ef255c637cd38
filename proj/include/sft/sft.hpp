#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sft/group.hpp"

namespace sft {

using Symbol = int;

// Ordered finite symbol list; the order is used for tie-breaking.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& operator[](Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Symbol> find(std::string_view name) const;
  Symbol at(std::string_view name) const;  // throws FormatError

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

// A finite assignment of symbols to pairwise distinct group elements.
class Pattern {
 public:
  using Cell = std::pair<GroupElement, Symbol>;

  Pattern() = default;
  explicit Pattern(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::vector<GroupElement> domain() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Cell> cells_;
};

// Symbol assignment on a finite set of elements.
class PartialConfiguration {
 public:
  PartialConfiguration() = default;
  explicit PartialConfiguration(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(const GroupElement& g) const { return values_.count(g) != 0; }
  std::optional<Symbol> get(const GroupElement& g) const;
  void set(const GroupElement& g, Symbol s);
  const std::map<GroupElement, Symbol>& values() const { return values_; }
  std::vector<GroupElement> support() const;

  friend bool operator==(const PartialConfiguration&,
                         const PartialConfiguration&) = default;

 private:
  Alphabet alphabet_;
  std::map<GroupElement, Symbol> values_;
};

// Alphabet plus finite forbidden-pattern list over a group model.
class SftDefinition {
 public:
  SftDefinition(GroupPtr model, Alphabet alphabet, std::vector<Pattern> forbidden);

  const GroupPtr& model() const { return model_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }

  // Every forbidden domain is {1, g_i} for a (positive) generator g_i.
  bool is_one_step() const;

 private:
  GroupPtr model_;
  Alphabet alphabet_;
  std::vector<Pattern> forbidden_;
};

// Allowed-pair relations of a one-step SFT: allowed[i][a][b] is true iff
// {1 -> a, g_i -> b} is not forbidden.
struct OneStepRelations {
  std::size_t symbols = 0;
  std::vector<std::vector<std::vector<bool>>> allowed;

  bool ok(int generator, Symbol a, Symbol b) const {
    return allowed[generator][a][b];
  }
};

OneStepRelations one_step_relations(const SftDefinition& s);

// Builds a one-step SFT from allowed-pair relations; forbidden patterns are
// emitted generator by generator, in (a, b) order.
SftDefinition sft_from_relations(GroupPtr model, Alphabet alphabet,
                                 const OneStepRelations& relations);

bool pattern_appears(const GroupModel& model, const PartialConfiguration& x,
                     const Pattern& p, const GroupElement& at);

bool locally_admissible(const PartialConfiguration& x, const SftDefinition& s);

// Higher-block recoding to a one-step SFT over ball-shaped blocks.
SftDefinition to_one_step(const SftDefinition& s);

PartialConfiguration restrict(const PartialConfiguration& x,
                              const std::vector<GroupElement>& dom);

// Left translate by g^-1: the result maps g^-1 * y to x(y).
PartialConfiguration translate(const GroupModel& model,
                               const PartialConfiguration& x,
                               const GroupElement& g);

}  // namespace sft
