#include "sft/reduction.hpp"

#include <algorithm>

namespace sft {

// ---------------------------------------------------------------------------
// Lifting along a subgroup

SftDefinition lift_subgroup_sft(const SftDefinition& s_h, const CosetEmbedding& e) {
  if (s_h.model()->name() != e.subgroup()->name()) {
    throw ModelMismatch("SFT over " + s_h.model()->name() +
                        " cannot be lifted along " + e.name());
  }
  std::vector<Pattern> forbidden;
  forbidden.reserve(s_h.forbidden().size());
  for (const Pattern& p : s_h.forbidden()) {
    std::vector<Pattern::Cell> cells;
    for (const auto& [h, sym] : p.cells()) cells.emplace_back(e.embed(h), sym);
    forbidden.emplace_back(std::move(cells));
  }
  return SftDefinition(e.ambient(), s_h.alphabet(), std::move(forbidden));
}

PartialConfiguration lift_configuration(const PartialConfiguration& c,
                                        const CosetEmbedding& e,
                                        const std::vector<GroupElement>& window) {
  PartialConfiguration out(c.alphabet());
  for (const GroupElement& g : window) {
    const auto [rep, h] = e.decompose(g);
    auto v = c.get(h);
    if (!v) {
      throw InsufficientSupport("lift needs h(g) = " + e.subgroup()->format(h) +
                                " for g = " + e.ambient()->format(g) +
                                ", which the configuration does not cover");
    }
    out.set(g, *v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RayWord

RayWord::RayWord(GroupPtr model, Word prefix, Word period)
    : model_(std::move(model)), prefix_(std::move(prefix)), period_(std::move(period)) {
  if (!model_->has_cyclic_oracle()) {
    throw PreconditionError("rays need a designated central element; " +
                            model_->name() + " has none");
  }
  for (const Word* w : {&prefix_, &period_}) {
    for (const Letter& l : *w) {
      if (l.inverse || l.generator < 0 || l.generator >= model_->rank()) {
        throw FormatError("ray letters must be positive generators of " +
                          model_->name());
      }
    }
  }
  points_.push_back(model_->identity());
}

std::optional<std::size_t> RayWord::length() const {
  if (infinite()) return std::nullopt;
  return prefix_.size();
}

Letter RayWord::letter(std::size_t j) const {
  if (j < prefix_.size()) return prefix_[j];
  if (period_.empty()) {
    throw PreconditionError("ray too short: letter " + std::to_string(j + 1) +
                            " requested from a ray of length " +
                            std::to_string(prefix_.size()));
  }
  return period_[(j - prefix_.size()) % period_.size()];
}

const GroupElement& RayWord::point(std::size_t j) const {
  while (points_.size() <= j) {
    const std::size_t n = points_.size() - 1;
    points_.push_back(model_->multiply(points_.back(), model_->letter(letter(n))));
  }
  return points_[j];
}

std::optional<std::pair<std::size_t, std::size_t>> RayWord::violation(
    std::size_t n) const {
  for (std::size_t j = 1; j <= n; ++j) {
    const GroupElement& pj = point(j);
    for (std::size_t i = 0; i < j; ++i) {
      if (model_->cyclic_power(model_->multiply(model_->inverse(point(i)), pj))) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

void RayWord::verify(std::size_t n) const {
  for (std::size_t j = verified_ + 1; j <= n; ++j) {
    const GroupElement& pj = point(j);
    for (std::size_t i = 0; i < j; ++i) {
      if (model_->cyclic_power(model_->multiply(model_->inverse(point(i)), pj))) {
        throw PreconditionError("ray subword w_" + std::to_string(i + 1) + "..w_" +
                                std::to_string(j) + " lies in the central subgroup");
      }
    }
    verified_ = j;
  }
}

RaySearchResult find_ray(const GroupPtr& model, std::size_t length,
                         std::uint64_t budget) {
  if (!model->has_cyclic_oracle()) {
    throw PreconditionError("find_ray needs a designated central element; " +
                            model->name() + " has none");
  }
  RaySearchResult result;
  for (int g = 1; g < model->rank(); ++g) {
    RayWord candidate(model, {}, {Letter{g, false}});
    if (!candidate.violation(length)) {
      candidate.verify(length);
      result.ray = std::move(candidate);
      return result;
    }
  }

  // Depth-first search; points[j] = p_j.
  std::vector<GroupElement> points{model->identity()};
  Word word;
  std::vector<int> next{0};
  while (!next.empty()) {
    if (word.size() == length) {
      RayWord ray(model, word, {});
      ray.verify(length);
      result.ray = std::move(ray);
      return result;
    }
    int& g = next.back();
    if (g >= model->rank()) {
      next.pop_back();
      if (!word.empty()) {
        word.pop_back();
        points.pop_back();
      }
      continue;
    }
    const Letter l{g++, false};
    if (++result.nodes > budget) {
      result.budget_exhausted = true;
      return result;
    }
    GroupElement p = model->multiply(points.back(), model->letter(l));
    bool ok = true;
    for (const GroupElement& q : points) {
      if (model->cyclic_power(model->multiply(model->inverse(q), p))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    word.push_back(l);
    points.push_back(std::move(p));
    next.push_back(0);
  }
  return result;
}

// ---------------------------------------------------------------------------
// The compiler

std::string to_string(Rule r) {
  switch (r) {
    case Rule::I: return "I";
    case Rule::II: return "II";
    case Rule::III: return "III";
  }
  return "?";
}

Symbol ReducedSft::encode(Symbol a, int i) const {
  return static_cast<Symbol>(a * directions() + (i - 2));
}

std::pair<Symbol, int> ReducedSft::decode(Symbol s) const {
  return {s / directions(), 2 + s % directions()};
}

namespace {

void require_z2_one_step(const SftDefinition& base) {
  if (base.model()->name() != "z2") {
    throw PreconditionError("base SFT must be over z2, got " + base.model()->name());
  }
  if (!base.is_one_step()) throw PreconditionError("base SFT is not one-step");
}

std::size_t ray_check_length(const RayWord& ray) {
  return ray.length().value_or(64);
}

}  // namespace

ReducedSft reduce_z2_to_g(const SftDefinition& base, GroupPtr target,
                          std::optional<RayWord> ray) {
  require_z2_one_step(base);
  if (!target->has_cyclic_oracle() || target->rank() < 2) {
    throw PreconditionError("target " + target->name() +
                            " lacks a designated central generator g_1");
  }
  const GroupElement g1 = target->generator(0);
  if (!target->is_central(g1) || target->cyclic_power(g1) != Coord{1}) {
    throw PreconditionError("generator g_1 of " + target->name() + " is not central");
  }
  if (ray) {
    if (ray->model()->name() != target->name()) {
      throw ModelMismatch("ray is over " + ray->model()->name() + ", target is " +
                          target->name());
    }
    ray->verify(ray_check_length(*ray));
  }

  const int n = target->rank();
  const std::size_t k = base.alphabet().size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) {
    for (int i = 2; i <= n; ++i) {
      names.push_back(base.alphabet()[static_cast<Symbol>(a)] + ":" + std::to_string(i));
    }
  }

  // Placeholder sft until the alphabet is known; encode() only needs target.
  ReducedSft out{base, target, SftDefinition(target, Alphabet{}, {}), {}, ray};
  const OneStepRelations rel = one_step_relations(base);
  const GroupElement one = target->identity();
  std::vector<Pattern> forbidden;
  auto emit = [&](Rule r, Symbol first, const GroupElement& at, Symbol second) {
    forbidden.emplace_back(std::vector<Pattern::Cell>{{one, first}, {at, second}});
    out.rules.push_back(r);
  };

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (int i = 2; i <= n; ++i) {
        for (int j = 2; j <= n; ++j) {
          if (i != j) emit(Rule::I, out.encode(a, i), g1, out.encode(b, j));
        }
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (rel.ok(0, a, b)) continue;
      for (int i = 2; i <= n; ++i) emit(Rule::II, out.encode(a, i), g1, out.encode(b, i));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (rel.ok(1, a, b)) continue;
      for (int i = 2; i <= n; ++i) {
        const GroupElement gi = target->generator(i - 1);
        for (int j = 2; j <= n; ++j) emit(Rule::III, out.encode(a, i), gi, out.encode(b, j));
      }
    }
  }
  out.sft = SftDefinition(target, Alphabet(std::move(names)), std::move(forbidden));
  return out;
}

// ---------------------------------------------------------------------------
// Z^2 configurations

Z2Configuration::Z2Configuration(Alphabet alphabet, std::vector<std::vector<Symbol>> tile)
    : alphabet_(std::move(alphabet)), tile_(std::move(tile)) {
  if (tile_.empty() || tile_.front().empty()) {
    throw FormatError("periodic tile must be non-empty");
  }
  for (const auto& row : tile_) {
    if (row.size() != tile_.front().size()) throw FormatError("periodic tile must be rectangular");
    for (Symbol s : row) {
      if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size()) {
        throw FormatError("periodic tile uses a symbol outside the alphabet");
      }
    }
  }
}

Z2Configuration Z2Configuration::constant(Alphabet alphabet, Symbol a) {
  return Z2Configuration(std::move(alphabet), {{a}});
}

Z2Configuration Z2Configuration::checkerboard(Alphabet alphabet, Symbol a, Symbol b) {
  return Z2Configuration(std::move(alphabet), {{a, b}, {b, a}});
}

Z2Configuration Z2Configuration::stripes(Alphabet alphabet, Symbol a, Symbol b) {
  return Z2Configuration(std::move(alphabet), {{a}, {b}});
}

Symbol Z2Configuration::at(Coord col, Coord row) const {
  const auto h = static_cast<Coord>(tile_.size());
  const auto w = static_cast<Coord>(tile_.front().size());
  return tile_[((row % h) + h) % h][((col % w) + w) % w];
}

bool Z2Configuration::admissible(const SftDefinition& base) const {
  require_z2_one_step(base);
  if (!(alphabet_ == base.alphabet())) return false;
  const OneStepRelations rel = one_step_relations(base);
  for (Coord r = 0; r < static_cast<Coord>(tile_.size()); ++r) {
    for (Coord q = 0; q < static_cast<Coord>(tile_.front().size()); ++q) {
      if (!rel.ok(0, at(q, r), at(q + 1, r))) return false;
      if (!rel.ok(1, at(q, r), at(q, r + 1))) return false;
    }
  }
  return true;
}

bool Z2Patch::admissible(const SftDefinition& base) const {
  require_z2_one_step(base);
  const OneStepRelations rel = one_step_relations(base);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const auto& c = rows[j][i];
      if (!c) continue;
      if (i + 1 < rows[j].size() && rows[j][i + 1] && !rel.ok(0, *c, *rows[j][i + 1])) {
        return false;
      }
      if (j + 1 < rows.size() && rows[j + 1][i] && !rel.ok(1, *c, *rows[j + 1][i])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Encoding a Z^2 configuration into G

namespace {

// One <g_1>-coset with c'(rep g_1^l) = (c(col0 + l, row), comp).
struct Line {
  GroupElement rep;
  Coord col0 = 0;
  Coord row = 0;
  int comp = 0;  // zero-based generator index, >= 1
};

}  // namespace

EncodeResult encode_z2_config(const Z2Configuration& c, const ReducedSft& s_g,
                              int radius, std::size_t max_vertices) {
  if (!s_g.ray) throw PreconditionError("encoding needs the reduction's ray");
  if (!(c.alphabet() == s_g.base.alphabet())) {
    throw PreconditionError("configuration alphabet differs from the base SFT alphabet");
  }
  if (!c.admissible(s_g.base)) {
    throw PreconditionError("configuration is not admissible for the base SFT");
  }
  const GroupModel& g = *s_g.target;
  const RayWord& ray = *s_g.ray;
  const BallGraph b = ball(g, radius, max_vertices);
  const std::size_t n = b.size();

  std::vector<Line> lines;
  std::vector<int> line_of(n, -1);
  std::vector<Coord> col_of(n, 0);

  auto line_offset = [&](const Line& line, const GroupElement& y) {
    return g.cyclic_power(g.multiply(g.inverse(line.rep), y));
  };
  auto claim = [&](const Line& line) {
    const int id = static_cast<int>(lines.size());
    lines.push_back(line);
    for (std::size_t v = 0; v < n; ++v) {
      if (line_of[v] >= 0) continue;
      if (auto l = line_offset(line, b.vertices[v])) {
        line_of[v] = id;
        col_of[v] = checked_add(line.col0, *l);
      }
    }
  };

  // Distinct ray lines are distinct cosets, so at most n of them meet the
  // ball; the first n are laid down.
  const std::size_t horizon = n;
  if (ray.length() && *ray.length() < horizon) {
    throw PreconditionError("ray too short: encoding ball(" + std::to_string(radius) +
                            ") needs " + std::to_string(horizon) + " ray letters, ray has " +
                            std::to_string(*ray.length()));
  }
  ray.verify(horizon);
  for (std::size_t j = 0; j < horizon; ++j) {
    const Letter next = ray.letter(j);
    claim({ray.point(j), 0, static_cast<Coord>(j), next.generator});
  }

  while (true) {
    bool extended = false;
    for (std::size_t v = 0; v < n && !extended; ++v) {
      if (line_of[v] >= 0) continue;
      for (int m = 1; m < g.rank() && !extended; ++m) {
        const GroupElement y = g.multiply(b.vertices[v], g.generator(m));
        for (const Line& line : lines) {
          if (auto l = line_offset(line, y)) {
            claim({b.vertices[v], checked_add(line.col0, *l), line.row - 1, m});
            extended = true;
            break;
          }
        }
      }
    }
    if (!extended) break;
  }

  EncodeResult out;
  out.config = PartialConfiguration(s_g.sft.alphabet());
  for (std::size_t v = 0; v < n; ++v) {
    if (line_of[v] < 0) {
      out.frontier.push_back(b.vertices[v]);
      continue;
    }
    const Line& line = lines[line_of[v]];
    out.config.set(b.vertices[v], s_g.encode(c.at(col_of[v], line.row), line.comp + 1));
  }
  out.stalled = !out.frontier.empty();
  out.lines = lines.size();
  return out;
}

// ---------------------------------------------------------------------------
// Decoding a G configuration into a Z^2 patch

Z2Patch decode_g_config(const PartialConfiguration& c, const ReducedSft& s_g,
                        int height, int width) {
  if (height < 0 || width < 0) throw PreconditionError("negative patch dimensions");
  if (!(c.alphabet() == s_g.sft.alphabet())) {
    throw PreconditionError("configuration alphabet differs from the reduced SFT alphabet");
  }
  const GroupModel& g = *s_g.target;
  const GroupElement g1 = g.generator(0);

  Z2Patch patch;
  patch.alphabet = s_g.base.alphabet();
  GroupElement spine = g.identity();
  for (int j = 0; j <= height; ++j) {
    auto here = c.get(spine);
    if (!here) {
      throw InsufficientSupport("decoding row " + std::to_string(j) + " needs element " +
                                g.format(spine));
    }
    const int comp = s_g.decode(*here).second;
    std::vector<std::optional<Symbol>> row(static_cast<std::size_t>(width));
    GroupElement cell = spine;
    for (int i = 0; i < width; ++i) {
      if (auto v = c.get(cell)) {
        auto [a, ci] = s_g.decode(*v);
        if (ci != comp) {
          throw Error("second component changes along the <g_1>-line at " + g.format(cell) +
                      "; the configuration cannot be admissible (checker bug)");
        }
        row[static_cast<std::size_t>(i)] = a;
      }
      cell = g.multiply(cell, g1);
    }
    patch.rows.push_back(std::move(row));
    spine = g.multiply(spine, g.generator(comp - 1));
  }
  return patch;
}

}  // namespace sft
