#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sft/error.hpp"

namespace sft {

using Coord = std::int64_t;

// A group element in the canonical normal form of its model.  Two elements
// of the same model are equal iff their normal forms are identical.  The tag
// identifies the model so that mixing models is detected.
struct GroupElement {
  std::size_t tag = 0;
  std::vector<Coord> nf;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

// A generator or its inverse, by position in the model's generator list.
struct Letter {
  int generator = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// A finitely generated group with computable normal forms.
//
// Generator position 0 is, by convention, the designated central generator
// whenever the model exposes a cyclic membership oracle.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  const std::string& name() const { return name_; }
  std::size_t tag() const { return tag_; }
  const std::vector<std::string>& generators() const { return generators_; }
  int rank() const { return static_cast<int>(generators_.size()); }

  GroupElement identity() const;
  GroupElement generator(int index) const;
  GroupElement letter(Letter l) const;

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement evaluate(const Word& word) const;

  // A word evaluating to g; deterministic per model.
  virtual Word to_word(const GroupElement& g) const = 0;

  bool is_identity(const GroupElement& g) const;

  // Center and <a> membership for the designated central generator a.
  virtual bool has_cyclic_oracle() const { return false; }
  std::optional<Coord> cyclic_power(const GroupElement& g) const;
  virtual bool is_central(const GroupElement& g) const = 0;

  // Throws ModelMismatch when g was not produced by this model or is not a
  // valid normal form.
  void check(const GroupElement& g) const;

  std::optional<int> generator_index(std::string_view name) const;
  Letter parse_letter(std::string_view token) const;
  Word parse_word(const std::vector<std::string>& tokens) const;
  std::string letter_name(Letter l) const;
  std::vector<std::string> format_word(const Word& w) const;
  std::string format(const GroupElement& g) const;

 protected:
  GroupModel(std::string name, std::vector<std::string> generators);

  virtual std::vector<Coord> identity_nf() const = 0;
  virtual std::vector<Coord> generator_nf(int index) const = 0;
  virtual std::vector<Coord> multiply_nf(const std::vector<Coord>& g,
                                         const std::vector<Coord>& h) const = 0;
  virtual std::vector<Coord> inverse_nf(const std::vector<Coord>& g) const = 0;
  virtual bool valid_nf(const std::vector<Coord>& g) const = 0;
  virtual std::optional<Coord> cyclic_power_nf(
      const std::vector<Coord>& g) const;

  GroupElement wrap(std::vector<Coord> nf) const { return {tag_, std::move(nf)}; }

 private:
  friend class DirectProductGroup;
  std::string name_;
  std::size_t tag_;
  std::vector<std::string> generators_;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

// Z^n with generators x, y, z, w; designated central generator x.
class FreeAbelianGroup final : public GroupModel {
 public:
  explicit FreeAbelianGroup(int n);
  Word to_word(const GroupElement& g) const override;
  bool has_cyclic_oracle() const override { return true; }
  bool is_central(const GroupElement& g) const override;

 protected:
  std::vector<Coord> identity_nf() const override;
  std::vector<Coord> generator_nf(int index) const override;
  std::vector<Coord> multiply_nf(const std::vector<Coord>& g,
                                 const std::vector<Coord>& h) const override;
  std::vector<Coord> inverse_nf(const std::vector<Coord>& g) const override;
  bool valid_nf(const std::vector<Coord>& g) const override;
  std::optional<Coord> cyclic_power_nf(const std::vector<Coord>& g) const override;

 private:
  int n_;
};

// Free group on k letters x, y, z.  Normal form: freely reduced word with
// letter i encoded as i+1 and its inverse as -(i+1).  Only F_1 has a
// central generator.
class FreeGroup final : public GroupModel {
 public:
  explicit FreeGroup(int k);
  Word to_word(const GroupElement& g) const override;
  bool has_cyclic_oracle() const override { return k_ == 1; }
  bool is_central(const GroupElement& g) const override;

 protected:
  std::vector<Coord> identity_nf() const override;
  std::vector<Coord> generator_nf(int index) const override;
  std::vector<Coord> multiply_nf(const std::vector<Coord>& g,
                                 const std::vector<Coord>& h) const override;
  std::vector<Coord> inverse_nf(const std::vector<Coord>& g) const override;
  bool valid_nf(const std::vector<Coord>& g) const override;
  std::optional<Coord> cyclic_power_nf(const std::vector<Coord>& g) const override;

 private:
  int k_;
};

// Discrete Heisenberg group, triples (a,b,c) with
//   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
// Generators in order z=(0,0,1), x=(1,0,0), y=(0,1,0); z is central.
class HeisenbergGroup final : public GroupModel {
 public:
  HeisenbergGroup();
  Word to_word(const GroupElement& g) const override;
  bool has_cyclic_oracle() const override { return true; }
  bool is_central(const GroupElement& g) const override;

  GroupElement make(Coord a, Coord b, Coord c) const { return wrap({a, b, c}); }

 protected:
  std::vector<Coord> identity_nf() const override;
  std::vector<Coord> generator_nf(int index) const override;
  std::vector<Coord> multiply_nf(const std::vector<Coord>& g,
                                 const std::vector<Coord>& h) const override;
  std::vector<Coord> inverse_nf(const std::vector<Coord>& g) const override;
  bool valid_nf(const std::vector<Coord>& g) const override;
  std::optional<Coord> cyclic_power_nf(const std::vector<Coord>& g) const override;
};

// G x H.  Generators are those of G suffixed with 1 followed by those of H
// suffixed with 2.  Normal form: [len(nf_G), nf_G..., nf_H...].  The
// designated central element is (a_G, 1) when G has one.
class DirectProductGroup final : public GroupModel {
 public:
  DirectProductGroup(GroupPtr left, GroupPtr right);
  Word to_word(const GroupElement& g) const override;
  bool has_cyclic_oracle() const override { return left_->has_cyclic_oracle(); }
  bool is_central(const GroupElement& g) const override;

  GroupElement pair(const GroupElement& l, const GroupElement& r) const;
  GroupElement left_part(const GroupElement& g) const;
  GroupElement right_part(const GroupElement& g) const;

 protected:
  std::vector<Coord> identity_nf() const override;
  std::vector<Coord> generator_nf(int index) const override;
  std::vector<Coord> multiply_nf(const std::vector<Coord>& g,
                                 const std::vector<Coord>& h) const override;
  std::vector<Coord> inverse_nf(const std::vector<Coord>& g) const override;
  bool valid_nf(const std::vector<Coord>& g) const override;
  std::optional<Coord> cyclic_power_nf(const std::vector<Coord>& g) const override;

 private:
  std::pair<std::vector<Coord>, std::vector<Coord>> split(
      const std::vector<Coord>& nf) const;
  std::vector<Coord> join(const std::vector<Coord>& l,
                          const std::vector<Coord>& r) const;

  GroupPtr left_;
  GroupPtr right_;
};

// Builds a model from its name: z, z2, z3, z4, free1, free2, free3,
// heisenberg, product:<a>:<b> (prefix notation, nests).
GroupPtr make_group(std::string_view name);

// Free function forms.
GroupElement multiply(const GroupModel& model, const GroupElement& g,
                      const GroupElement& h);
GroupElement inverse(const GroupModel& model, const GroupElement& g);
GroupElement evaluate_word(const GroupModel& model,
                           const std::vector<std::string>& word);
std::optional<Coord> in_cyclic_subgroup(const GroupModel& model,
                                        const GroupElement& g);

// Overflow-checked arithmetic on normal-form coordinates.
Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

// Induced Cayley-graph ball around the identity.  Vertices are in BFS
// discovery order, expanding generators in order g_1, g_1^-1, g_2, ...;
// this is the canonical element order used throughout.
struct BallGraph {
  GroupElement center;
  int radius = 0;
  std::vector<GroupElement> vertices;
  std::vector<int> distance;
  // neighbors[v][d]: direction d = 2*i is g_i, d = 2*i+1 is g_i^-1;
  // -1 when the neighbor lies outside the ball.
  std::vector<std::vector<int>> neighbors;
  std::unordered_map<GroupElement, int, GroupElementHash> index;

  std::size_t size() const { return vertices.size(); }
  std::optional<int> find(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index.count(g) != 0; }
  std::vector<int> sphere() const;
  std::vector<int> sphere(int r) const;
};

BallGraph ball(const GroupModel& model, int radius,
               std::size_t max_vertices = kDefaultBallCap);

}  // namespace sft
