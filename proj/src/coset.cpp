#include "sft/coset.hpp"

namespace sft {

namespace {

class ZInZ2 final : public CosetEmbedding {
 public:
  ZInZ2() : CosetEmbedding("z-in-z2", make_group("z2"), make_group("z"), false) {}

  GroupElement embed(const GroupElement& h) const override {
    subgroup()->check(h);
    return {ambient()->tag(), {h.nf[0], 0}};
  }

  std::pair<GroupElement, GroupElement> decompose(
      const GroupElement& g) const override {
    ambient()->check(g);
    return {{ambient()->tag(), {0, g.nf[1]}}, {subgroup()->tag(), {g.nf[0]}}};
  }

  bool is_representative(const GroupElement& g) const override {
    ambient()->check(g);
    return g.nf[0] == 0;
  }
};

class EvenInZ final : public CosetEmbedding {
 public:
  EvenInZ() : CosetEmbedding("2z-in-z", make_group("z"), make_group("z"), true) {}

  GroupElement embed(const GroupElement& h) const override {
    subgroup()->check(h);
    return {ambient()->tag(), {checked_mul(h.nf[0], 2)}};
  }

  std::pair<GroupElement, GroupElement> decompose(
      const GroupElement& g) const override {
    ambient()->check(g);
    const Coord v = g.nf[0];
    const Coord rep = ((v % 2) + 2) % 2;
    return {{ambient()->tag(), {rep}}, {subgroup()->tag(), {(v - rep) / 2}}};
  }

  bool is_representative(const GroupElement& g) const override {
    ambient()->check(g);
    return g.nf[0] == 0 || g.nf[0] == 1;
  }
};

class CenterInHeisenberg final : public CosetEmbedding {
 public:
  CenterInHeisenberg()
      : CosetEmbedding("z-in-heisenberg", make_group("heisenberg"),
                       make_group("z"), false) {}

  GroupElement embed(const GroupElement& h) const override {
    subgroup()->check(h);
    return {ambient()->tag(), {0, 0, h.nf[0]}};
  }

  // (a,b,c) = (a,b,0) * (0,0,c) since the cross term a*0 vanishes.
  std::pair<GroupElement, GroupElement> decompose(
      const GroupElement& g) const override {
    ambient()->check(g);
    return {{ambient()->tag(), {g.nf[0], g.nf[1], 0}},
            {subgroup()->tag(), {g.nf[2]}}};
  }

  bool is_representative(const GroupElement& g) const override {
    ambient()->check(g);
    return g.nf[2] == 0;
  }
};

}  // namespace

EmbeddingPtr make_embedding(std::string_view name) {
  if (name == "z-in-z2") return std::make_shared<ZInZ2>();
  if (name == "2z-in-z") return std::make_shared<EvenInZ>();
  if (name == "z-in-heisenberg") return std::make_shared<CenterInHeisenberg>();
  throw FormatError("unknown embedding '" + std::string(name) + "'");
}

std::pair<GroupElement, GroupElement> coset_decompose(const CosetEmbedding& e,
                                                      const GroupElement& g) {
  return e.decompose(g);
}

}  // namespace sft
