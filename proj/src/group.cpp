#include "sft/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace sft {

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = g.tag;
  for (Coord c : g.nf) {
    h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("normal-form coordinate overflow in addition");
  }
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("normal-form coordinate overflow in product");
  }
  return r;
}

namespace {

Coord checked_neg(Coord a) { return checked_mul(a, -1); }

void append_power(Word& w, int generator, Coord power) {
  const bool inv = power < 0;
  for (Coord i = 0; i < (inv ? -power : power); ++i) {
    w.push_back({generator, inv});
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupModel

GroupModel::GroupModel(std::string name, std::vector<std::string> generators)
    : name_(std::move(name)),
      tag_(std::hash<std::string>{}(name_)),
      generators_(std::move(generators)) {}

GroupElement GroupModel::identity() const { return wrap(identity_nf()); }

GroupElement GroupModel::generator(int index) const {
  if (index < 0 || index >= rank()) {
    throw UnknownGenerator("generator index " + std::to_string(index) +
                           " out of range for " + name_);
  }
  return wrap(generator_nf(index));
}

GroupElement GroupModel::letter(Letter l) const {
  GroupElement g = generator(l.generator);
  return l.inverse ? wrap(inverse_nf(g.nf)) : g;
}

void GroupModel::check(const GroupElement& g) const {
  if (g.tag != tag_ || !valid_nf(g.nf)) {
    throw ModelMismatch("element does not belong to model " + name_);
  }
}

GroupElement GroupModel::multiply(const GroupElement& g,
                                  const GroupElement& h) const {
  check(g);
  check(h);
  return wrap(multiply_nf(g.nf, h.nf));
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  check(g);
  return wrap(inverse_nf(g.nf));
}

GroupElement GroupModel::evaluate(const Word& word) const {
  std::vector<Coord> acc = identity_nf();
  for (const Letter& l : word) {
    acc = multiply_nf(acc, letter(l).nf);
  }
  return wrap(std::move(acc));
}

bool GroupModel::is_identity(const GroupElement& g) const {
  check(g);
  return g.nf == identity_nf();
}

std::optional<Coord> GroupModel::cyclic_power(const GroupElement& g) const {
  if (!has_cyclic_oracle()) {
    throw PreconditionError("model " + name_ +
                            " has no designated central element oracle");
  }
  check(g);
  return cyclic_power_nf(g.nf);
}

std::optional<Coord> GroupModel::cyclic_power_nf(const std::vector<Coord>&) const {
  return std::nullopt;
}

std::optional<int> GroupModel::generator_index(std::string_view name) const {
  for (int i = 0; i < rank(); ++i) {
    if (generators_[i] == name) return i;
  }
  return std::nullopt;
}

Letter GroupModel::parse_letter(std::string_view token) const {
  const bool inv = !token.empty() && token.front() == '-';
  std::string_view base = inv ? token.substr(1) : token;
  auto idx = generator_index(base);
  if (!idx) {
    throw UnknownGenerator("unknown generator '" + std::string(token) +
                           "' for group " + name_);
  }
  return {*idx, inv};
}

Word GroupModel::parse_word(const std::vector<std::string>& tokens) const {
  Word w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(parse_letter(t));
  return w;
}

std::string GroupModel::letter_name(Letter l) const {
  return (l.inverse ? "-" : "") + generators_.at(l.generator);
}

std::vector<std::string> GroupModel::format_word(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(letter_name(l));
  return out;
}

std::string GroupModel::format(const GroupElement& g) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.nf.size(); ++i) {
    if (i) os << ',';
    os << g.nf[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Z^n

namespace {
const std::vector<std::string> kLetterNames = {"x", "y", "z", "w"};

std::vector<std::string> first_letters(int n) {
  return {kLetterNames.begin(), kLetterNames.begin() + n};
}
}  // namespace

FreeAbelianGroup::FreeAbelianGroup(int n)
    : GroupModel(n == 1 ? "z" : "z" + std::to_string(n), first_letters(n)),
      n_(n) {
  if (n < 1 || n > 4) throw PreconditionError("FreeAbelian(n) requires 1 <= n <= 4");
}

std::vector<Coord> FreeAbelianGroup::identity_nf() const {
  return std::vector<Coord>(n_, 0);
}

std::vector<Coord> FreeAbelianGroup::generator_nf(int index) const {
  std::vector<Coord> v(n_, 0);
  v[index] = 1;
  return v;
}

std::vector<Coord> FreeAbelianGroup::multiply_nf(const std::vector<Coord>& g,
                                                 const std::vector<Coord>& h) const {
  std::vector<Coord> r(n_);
  for (int i = 0; i < n_; ++i) r[i] = checked_add(g[i], h[i]);
  return r;
}

std::vector<Coord> FreeAbelianGroup::inverse_nf(const std::vector<Coord>& g) const {
  std::vector<Coord> r(n_);
  for (int i = 0; i < n_; ++i) r[i] = checked_neg(g[i]);
  return r;
}

bool FreeAbelianGroup::valid_nf(const std::vector<Coord>& g) const {
  return static_cast<int>(g.size()) == n_;
}

std::optional<Coord> FreeAbelianGroup::cyclic_power_nf(
    const std::vector<Coord>& g) const {
  for (int i = 1; i < n_; ++i) {
    if (g[i] != 0) return std::nullopt;
  }
  return g[0];
}

bool FreeAbelianGroup::is_central(const GroupElement& g) const {
  check(g);
  return true;
}

Word FreeAbelianGroup::to_word(const GroupElement& g) const {
  check(g);
  Word w;
  for (int i = 0; i < n_; ++i) append_power(w, i, g.nf[i]);
  return w;
}

// ---------------------------------------------------------------------------
// F_k

FreeGroup::FreeGroup(int k)
    : GroupModel("free" + std::to_string(k), first_letters(k)), k_(k) {
  if (k < 1 || k > 3) throw PreconditionError("FreeGroup(k) requires 1 <= k <= 3");
}

std::vector<Coord> FreeGroup::identity_nf() const { return {}; }

std::vector<Coord> FreeGroup::generator_nf(int index) const { return {index + 1}; }

std::vector<Coord> FreeGroup::multiply_nf(const std::vector<Coord>& g,
                                          const std::vector<Coord>& h) const {
  std::vector<Coord> r = g;
  for (Coord c : h) {
    if (!r.empty() && r.back() == -c) {
      r.pop_back();
    } else {
      r.push_back(c);
    }
  }
  return r;
}

std::vector<Coord> FreeGroup::inverse_nf(const std::vector<Coord>& g) const {
  std::vector<Coord> r(g.rbegin(), g.rend());
  for (Coord& c : r) c = -c;
  return r;
}

bool FreeGroup::valid_nf(const std::vector<Coord>& g) const {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0 || g[i] > k_ || g[i] < -k_) return false;
    if (i > 0 && g[i] == -g[i - 1]) return false;
  }
  return true;
}

std::optional<Coord> FreeGroup::cyclic_power_nf(const std::vector<Coord>& g) const {
  if (k_ != 1) return std::nullopt;
  Coord k = 0;
  for (Coord c : g) k += c > 0 ? 1 : -1;
  return k;
}

bool FreeGroup::is_central(const GroupElement& g) const {
  check(g);
  return k_ == 1 || g.nf.empty();
}

Word FreeGroup::to_word(const GroupElement& g) const {
  check(g);
  Word w;
  for (Coord c : g.nf) {
    w.push_back({static_cast<int>((c > 0 ? c : -c) - 1), c < 0});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Heisenberg

HeisenbergGroup::HeisenbergGroup() : GroupModel("heisenberg", {"z", "x", "y"}) {}

std::vector<Coord> HeisenbergGroup::identity_nf() const { return {0, 0, 0}; }

std::vector<Coord> HeisenbergGroup::generator_nf(int index) const {
  switch (index) {
    case 0: return {0, 0, 1};
    case 1: return {1, 0, 0};
    default: return {0, 1, 0};
  }
}

std::vector<Coord> HeisenbergGroup::multiply_nf(const std::vector<Coord>& g,
                                                const std::vector<Coord>& h) const {
  return {checked_add(g[0], h[0]), checked_add(g[1], h[1]),
          checked_add(checked_add(g[2], h[2]), checked_mul(g[0], h[1]))};
}

std::vector<Coord> HeisenbergGroup::inverse_nf(const std::vector<Coord>& g) const {
  return {checked_neg(g[0]), checked_neg(g[1]),
          checked_add(checked_mul(g[0], g[1]), checked_neg(g[2]))};
}

bool HeisenbergGroup::valid_nf(const std::vector<Coord>& g) const {
  return g.size() == 3;
}

std::optional<Coord> HeisenbergGroup::cyclic_power_nf(
    const std::vector<Coord>& g) const {
  if (g[0] != 0 || g[1] != 0) return std::nullopt;
  return g[2];
}

bool HeisenbergGroup::is_central(const GroupElement& g) const {
  check(g);
  return g.nf[0] == 0 && g.nf[1] == 0;
}

Word HeisenbergGroup::to_word(const GroupElement& g) const {
  check(g);
  // x^a y^b = (a, b, ab), so (a,b,c) = x^a y^b z^(c - ab).
  Word w;
  append_power(w, 1, g.nf[0]);
  append_power(w, 2, g.nf[1]);
  append_power(w, 0, checked_add(g.nf[2], checked_neg(checked_mul(g.nf[0], g.nf[1]))));
  return w;
}

// ---------------------------------------------------------------------------
// Direct product

namespace {
std::vector<std::string> product_generators(const GroupModel& l,
                                            const GroupModel& r) {
  std::vector<std::string> out;
  for (const auto& g : l.generators()) out.push_back(g + "1");
  for (const auto& g : r.generators()) out.push_back(g + "2");
  return out;
}
}  // namespace

DirectProductGroup::DirectProductGroup(GroupPtr left, GroupPtr right)
    : GroupModel("product:" + left->name() + ":" + right->name(),
                 product_generators(*left, *right)),
      left_(std::move(left)),
      right_(std::move(right)) {}

std::pair<std::vector<Coord>, std::vector<Coord>> DirectProductGroup::split(
    const std::vector<Coord>& nf) const {
  const auto n = static_cast<std::size_t>(nf.at(0));
  return {std::vector<Coord>(nf.begin() + 1, nf.begin() + 1 + n),
          std::vector<Coord>(nf.begin() + 1 + n, nf.end())};
}

std::vector<Coord> DirectProductGroup::join(const std::vector<Coord>& l,
                                            const std::vector<Coord>& r) const {
  std::vector<Coord> out;
  out.reserve(1 + l.size() + r.size());
  out.push_back(static_cast<Coord>(l.size()));
  out.insert(out.end(), l.begin(), l.end());
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Coord> DirectProductGroup::identity_nf() const {
  return join(left_->identity_nf(), right_->identity_nf());
}

std::vector<Coord> DirectProductGroup::generator_nf(int index) const {
  if (index < left_->rank()) {
    return join(left_->generator_nf(index), right_->identity_nf());
  }
  return join(left_->identity_nf(), right_->generator_nf(index - left_->rank()));
}

std::vector<Coord> DirectProductGroup::multiply_nf(const std::vector<Coord>& g,
                                                   const std::vector<Coord>& h) const {
  auto [gl, gr] = split(g);
  auto [hl, hr] = split(h);
  return join(left_->multiply_nf(gl, hl), right_->multiply_nf(gr, hr));
}

std::vector<Coord> DirectProductGroup::inverse_nf(const std::vector<Coord>& g) const {
  auto [l, r] = split(g);
  return join(left_->inverse_nf(l), right_->inverse_nf(r));
}

bool DirectProductGroup::valid_nf(const std::vector<Coord>& g) const {
  if (g.empty() || g[0] < 0 || static_cast<std::size_t>(g[0]) + 1 > g.size()) {
    return false;
  }
  auto [l, r] = split(g);
  return left_->valid_nf(l) && right_->valid_nf(r);
}

std::optional<Coord> DirectProductGroup::cyclic_power_nf(
    const std::vector<Coord>& g) const {
  auto [l, r] = split(g);
  if (r != right_->identity_nf()) return std::nullopt;
  return left_->cyclic_power_nf(l);
}

GroupElement DirectProductGroup::pair(const GroupElement& l,
                                      const GroupElement& r) const {
  left_->check(l);
  right_->check(r);
  return wrap(join(l.nf, r.nf));
}

GroupElement DirectProductGroup::left_part(const GroupElement& g) const {
  check(g);
  return left_->wrap(split(g.nf).first);
}

GroupElement DirectProductGroup::right_part(const GroupElement& g) const {
  check(g);
  return right_->wrap(split(g.nf).second);
}

bool DirectProductGroup::is_central(const GroupElement& g) const {
  return left_->is_central(left_part(g)) && right_->is_central(right_part(g));
}

Word DirectProductGroup::to_word(const GroupElement& g) const {
  Word w = left_->to_word(left_part(g));
  for (Letter l : right_->to_word(right_part(g))) {
    w.push_back({l.generator + left_->rank(), l.inverse});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Factory and free functions

namespace {

GroupPtr parse_group(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw FormatError("truncated group name");
  const std::string& t = tokens[pos++];
  if (t == "product") {
    GroupPtr l = parse_group(tokens, pos);
    GroupPtr r = parse_group(tokens, pos);
    return std::make_shared<DirectProductGroup>(std::move(l), std::move(r));
  }
  if (t == "z") return std::make_shared<FreeAbelianGroup>(1);
  if (t == "z2" || t == "z3" || t == "z4") {
    return std::make_shared<FreeAbelianGroup>(t[1] - '0');
  }
  if (t == "free1" || t == "free2" || t == "free3") {
    return std::make_shared<FreeGroup>(t[4] - '0');
  }
  if (t == "heisenberg") return std::make_shared<HeisenbergGroup>();
  throw FormatError("unknown group name '" + t + "'");
}

}  // namespace

GroupPtr make_group(std::string_view name) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : name) {
    if (c == ':') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);
  std::size_t pos = 0;
  GroupPtr g = parse_group(tokens, pos);
  if (pos != tokens.size()) {
    throw FormatError("trailing tokens in group name '" + std::string(name) + "'");
  }
  return g;
}

GroupElement multiply(const GroupModel& model, const GroupElement& g,
                      const GroupElement& h) {
  return model.multiply(g, h);
}

GroupElement inverse(const GroupModel& model, const GroupElement& g) {
  return model.inverse(g);
}

GroupElement evaluate_word(const GroupModel& model,
                           const std::vector<std::string>& word) {
  return model.evaluate(model.parse_word(word));
}

std::optional<Coord> in_cyclic_subgroup(const GroupModel& model,
                                        const GroupElement& g) {
  return model.cyclic_power(g);
}

// ---------------------------------------------------------------------------
// Balls

std::optional<int> BallGraph::find(const GroupElement& g) const {
  auto it = index.find(g);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> BallGraph::sphere() const { return sphere(radius); }

std::vector<int> BallGraph::sphere(int r) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (distance[v] == r) out.push_back(static_cast<int>(v));
  }
  return out;
}

BallGraph ball(const GroupModel& model, int radius, std::size_t max_vertices) {
  if (radius < 0) throw PreconditionError("ball radius must be non-negative");
  const int dirs = 2 * model.rank();
  std::vector<GroupElement> steps;
  for (int i = 0; i < model.rank(); ++i) {
    steps.push_back(model.letter({i, false}));
    steps.push_back(model.letter({i, true}));
  }

  BallGraph b;
  b.center = model.identity();
  b.radius = radius;
  b.vertices.push_back(b.center);
  b.distance.push_back(0);
  b.index.emplace(b.center, 0);

  std::size_t head = 0;
  while (head < b.vertices.size()) {
    const int d = b.distance[head];
    if (d == radius) break;  // BFS order: everything after is on the sphere
    for (int s = 0; s < dirs; ++s) {
      GroupElement n = model.multiply(b.vertices[head], steps[s]);
      if (b.index.count(n)) continue;
      if (b.vertices.size() >= max_vertices) {
        throw BudgetExceeded("ball of radius " + std::to_string(radius) +
                             " in " + model.name() + " exceeds " +
                             std::to_string(max_vertices) + " vertices");
      }
      b.index.emplace(n, static_cast<int>(b.vertices.size()));
      b.vertices.push_back(std::move(n));
      b.distance.push_back(d + 1);
    }
    ++head;
  }

  b.neighbors.assign(b.vertices.size(), std::vector<int>(dirs, -1));
  for (std::size_t v = 0; v < b.vertices.size(); ++v) {
    for (int s = 0; s < dirs; ++s) {
      auto it = b.index.find(model.multiply(b.vertices[v], steps[s]));
      if (it != b.index.end()) b.neighbors[v][s] = it->second;
    }
  }
  return b;
}

}  // namespace sft
