#include "sft/sft.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sft {

// ---------------------------------------------------------------------------
// Alphabet, Pattern, PartialConfiguration

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw FormatError("empty symbol name");
    if (!seen.insert(s).second) throw FormatError("duplicate symbol '" + s + "'");
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Symbol Alphabet::at(std::string_view name) const {
  auto s = find(name);
  if (!s) throw FormatError("symbol '" + std::string(name) + "' not in alphabet");
  return *s;
}

Pattern::Pattern(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw FormatError("pattern with empty domain");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      if (cells_[i].first == cells_[j].first) {
        throw FormatError("pattern domain elements must be pairwise distinct");
      }
    }
  }
}

std::vector<GroupElement> Pattern::domain() const {
  std::vector<GroupElement> d;
  d.reserve(cells_.size());
  for (const auto& c : cells_) d.push_back(c.first);
  return d;
}

std::optional<Symbol> PartialConfiguration::get(const GroupElement& g) const {
  auto it = values_.find(g);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void PartialConfiguration::set(const GroupElement& g, Symbol s) {
  if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size()) {
    throw FormatError("symbol index out of alphabet range");
  }
  values_[g] = s;
}

std::vector<GroupElement> PartialConfiguration::support() const {
  std::vector<GroupElement> out;
  out.reserve(values_.size());
  for (const auto& [g, s] : values_) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// SftDefinition

SftDefinition::SftDefinition(GroupPtr model, Alphabet alphabet,
                             std::vector<Pattern> forbidden)
    : model_(std::move(model)),
      alphabet_(std::move(alphabet)),
      forbidden_(std::move(forbidden)) {
  for (const Pattern& p : forbidden_) {
    for (const auto& [g, s] : p.cells()) {
      model_->check(g);
      if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size()) {
        throw FormatError("forbidden pattern uses a symbol outside the alphabet");
      }
    }
  }
}

namespace {

// Generator index i when p has domain {1, g_i} listed identity-first.
std::optional<int> one_step_generator(const GroupModel& model, const Pattern& p) {
  if (p.size() != 2) return std::nullopt;
  if (!model.is_identity(p.cells()[0].first)) return std::nullopt;
  for (int i = 0; i < model.rank(); ++i) {
    if (p.cells()[1].first == model.generator(i)) return i;
  }
  return std::nullopt;
}

}  // namespace

bool SftDefinition::is_one_step() const {
  return std::all_of(forbidden_.begin(), forbidden_.end(), [&](const Pattern& p) {
    return one_step_generator(*model_, p).has_value();
  });
}

OneStepRelations one_step_relations(const SftDefinition& s) {
  const auto& model = *s.model();
  OneStepRelations rel;
  rel.symbols = s.alphabet().size();
  rel.allowed.assign(model.rank(),
                     std::vector<std::vector<bool>>(
                         rel.symbols, std::vector<bool>(rel.symbols, true)));
  for (const Pattern& p : s.forbidden()) {
    auto i = one_step_generator(model, p);
    if (!i) throw PreconditionError("SFT is not one-step");
    rel.allowed[*i][p.cells()[0].second][p.cells()[1].second] = false;
  }
  return rel;
}

SftDefinition sft_from_relations(GroupPtr model, Alphabet alphabet,
                                 const OneStepRelations& relations) {
  std::vector<Pattern> forbidden;
  const GroupElement one = model->identity();
  for (int i = 0; i < model->rank(); ++i) {
    const GroupElement gi = model->generator(i);
    for (std::size_t a = 0; a < relations.symbols; ++a) {
      for (std::size_t b = 0; b < relations.symbols; ++b) {
        if (!relations.allowed[i][a][b]) {
          forbidden.emplace_back(std::vector<Pattern::Cell>{
              {one, static_cast<Symbol>(a)}, {gi, static_cast<Symbol>(b)}});
        }
      }
    }
  }
  return SftDefinition(std::move(model), std::move(alphabet), std::move(forbidden));
}

// ---------------------------------------------------------------------------
// Appearance and admissibility

bool pattern_appears(const GroupModel& model, const PartialConfiguration& x,
                     const Pattern& p, const GroupElement& at) {
  for (const auto& [d, s] : p.cells()) {
    auto v = x.get(model.multiply(at, d));
    if (!v || *v != s) return false;
  }
  return true;
}

bool locally_admissible(const PartialConfiguration& x, const SftDefinition& s) {
  if (!(x.alphabet() == s.alphabet())) {
    throw PreconditionError("configuration alphabet differs from the SFT alphabet");
  }
  const GroupModel& model = *s.model();
  for (const Pattern& p : s.forbidden()) {
    const auto& [d0, s0] = p.cells().front();
    const GroupElement d0_inv = model.inverse(d0);
    for (const auto& [y, sym] : x.values()) {
      if (sym != s0) continue;
      if (pattern_appears(model, x, p, model.multiply(y, d0_inv))) return false;
    }
  }
  return true;
}

PartialConfiguration restrict(const PartialConfiguration& x,
                              const std::vector<GroupElement>& dom) {
  PartialConfiguration out(x.alphabet());
  for (const GroupElement& g : dom) {
    if (auto v = x.get(g)) out.set(g, *v);
  }
  return out;
}

PartialConfiguration translate(const GroupModel& model,
                               const PartialConfiguration& x,
                               const GroupElement& g) {
  const GroupElement g_inv = model.inverse(g);
  PartialConfiguration out(x.alphabet());
  for (const auto& [y, s] : x.values()) out.set(model.multiply(g_inv, y), s);
  return out;
}

// ---------------------------------------------------------------------------
// Higher-block recoding

namespace {

Pattern translate_pattern(const GroupModel& model, const Pattern& p,
                          const GroupElement& t) {
  std::vector<Pattern::Cell> cells;
  for (const auto& [d, s] : p.cells()) cells.emplace_back(model.multiply(t, d), s);
  return Pattern(std::move(cells));
}

// Tries to rewrite a two-cell pattern as {1 -> a, g_i -> b}.
std::optional<Pattern> as_one_step(const GroupModel& model, const Pattern& p) {
  if (p.size() != 2) return std::nullopt;
  for (int first : {0, 1}) {
    const auto& c0 = p.cells()[first];
    const auto& c1 = p.cells()[1 - first];
    Pattern q = translate_pattern(
        model, Pattern({c0, c1}), model.inverse(c0.first));
    if (one_step_generator(model, q)) return q;
  }
  return std::nullopt;
}

constexpr std::size_t kMaxBlocks = 200'000;

}  // namespace

SftDefinition to_one_step(const SftDefinition& s) {
  if (s.is_one_step()) return s;
  const GroupModel& model = *s.model();

  {
    std::vector<Pattern> normalized;
    for (const Pattern& p : s.forbidden()) {
      auto q = as_one_step(model, p);
      if (!q) break;
      normalized.push_back(std::move(*q));
    }
    if (normalized.size() == s.forbidden().size()) {
      return SftDefinition(s.model(), s.alphabet(), std::move(normalized));
    }
  }

  // Enclosing radius: each pattern is translated so that its domain fits in
  // the smallest ball around 1, trying t in {1} u {d^-1}.
  std::size_t word_bound = 0;
  for (const Pattern& p : s.forbidden()) {
    for (const auto& [d, sym] : p.cells()) {
      word_bound = std::max(word_bound, model.to_word(d).size());
    }
  }
  const BallGraph probe = ball(model, static_cast<int>(2 * word_bound));
  auto enclosing = [&](const Pattern& p) -> std::optional<int> {
    int r = 0;
    for (const auto& [d, sym] : p.cells()) {
      auto v = probe.find(d);
      if (!v) return std::nullopt;
      r = std::max(r, probe.distance[*v]);
    }
    return r;
  };

  std::vector<Pattern> centered;
  int m = 0;
  for (const Pattern& p : s.forbidden()) {
    std::optional<Pattern> best;
    std::optional<int> best_r;
    std::vector<GroupElement> shifts{model.identity()};
    for (const auto& [d, sym] : p.cells()) shifts.push_back(model.inverse(d));
    for (const GroupElement& t : shifts) {
      Pattern q = translate_pattern(model, p, t);
      auto r = enclosing(q);
      if (r && (!best_r || *r < *best_r)) {
        best_r = r;
        best = std::move(q);
      }
    }
    if (!best) throw FormatError("forbidden domain is not enclosable in a ball");
    m = std::max(m, *best_r);
    centered.push_back(std::move(*best));
  }

  const BallGraph block = ball(model, m);
  const std::size_t n = block.size();
  const std::size_t k = s.alphabet().size();

  // Occurrences of centered patterns fully inside the block, bucketed by
  // their last vertex in BFS order.
  struct Occurrence {
    std::vector<std::pair<int, Symbol>> cells;
  };
  std::vector<std::vector<Occurrence>> ending(n);
  for (const Pattern& p : centered) {
    const GroupElement d0_inv = model.inverse(p.cells().front().first);
    std::set<GroupElement> positions;
    for (const GroupElement& v : block.vertices) {
      positions.insert(model.multiply(v, d0_inv));
    }
    for (const GroupElement& i : positions) {
      Occurrence occ;
      int last = -1;
      bool inside = true;
      for (const auto& [d, sym] : p.cells()) {
        auto v = block.find(model.multiply(i, d));
        if (!v) {
          inside = false;
          break;
        }
        occ.cells.emplace_back(*v, sym);
        last = std::max(last, *v);
      }
      if (inside) ending[last].push_back(std::move(occ));
    }
  }

  std::vector<std::vector<Symbol>> blocks;
  std::vector<Symbol> cur(n, 0);
  auto violates = [&](std::size_t v) {
    for (const Occurrence& o : ending[v]) {
      bool all = true;
      for (const auto& [u, sym] : o.cells) {
        if (cur[u] != sym) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  };
  // Iterative lexicographic enumeration of admissible blocks.
  if (k > 0) {
    std::size_t depth = 0;
    std::vector<Symbol> next(n, 0);
    while (true) {
      if (depth == n) {
        blocks.push_back(cur);
        if (blocks.size() > kMaxBlocks) {
          throw BudgetExceeded("higher-block recoding exceeds block budget");
        }
        if (n == 0) break;
        --depth;
        continue;
      }
      if (static_cast<std::size_t>(next[depth]) >= k) {
        next[depth] = 0;
        if (depth == 0) break;
        --depth;
        continue;
      }
      cur[depth] = next[depth]++;
      if (!violates(depth)) ++depth;
    }
  }

  std::vector<std::string> names;
  for (const auto& b : blocks) {
    std::string name;
    for (std::size_t v = 0; v < n; ++v) {
      if (v) name += '|';
      name += s.alphabet()[b[v]];
    }
    names.push_back(std::move(name));
  }

  // Overlap consistency: block P at 1 and Q at g_i agree on B_m cap g_i B_m,
  // i.e. P(u) == Q(g_i^-1 u).
  OneStepRelations rel;
  rel.symbols = blocks.size();
  rel.allowed.assign(model.rank(), std::vector<std::vector<bool>>(
                                       rel.symbols, std::vector<bool>(rel.symbols, true)));
  for (int i = 0; i < model.rank(); ++i) {
    const GroupElement gi_inv = model.inverse(model.generator(i));
    std::vector<std::pair<int, int>> overlap;
    for (std::size_t u = 0; u < n; ++u) {
      if (auto w = block.find(model.multiply(gi_inv, block.vertices[u]))) {
        overlap.emplace_back(static_cast<int>(u), *w);
      }
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& [u, w] : overlap) {
          if (blocks[a][u] != blocks[b][w]) {
            rel.allowed[i][a][b] = false;
            break;
          }
        }
      }
    }
  }
  Alphabet out_alphabet;
  if (!names.empty()) out_alphabet = Alphabet(std::move(names));
  return sft_from_relations(s.model(), std::move(out_alphabet), rel);
}

}  // namespace sft
