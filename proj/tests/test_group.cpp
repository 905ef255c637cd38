#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sft/coset.hpp"
#include "sft/group.hpp"

using namespace sft;

namespace {

const HeisenbergGroup& heis() {
  static const auto g = std::static_pointer_cast<const HeisenbergGroup>(make_group("heisenberg"));
  return *g;
}

GroupElement z2(Coord a, Coord b) {
  static const GroupPtr m = make_group("z2");
  return m->multiply(m->evaluate(Word(std::abs(a), Letter{0, a < 0})),
                     m->evaluate(Word(std::abs(b), Letter{1, b < 0})));
}

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), sign(0, 1);
  Word w(len(rng));
  for (auto& l : w) l = Letter{gen(rng), sign(rng) == 1};
  return w;
}

}  // namespace

TEST(Heisenberg, ProductOfGenerators) {
  EXPECT_EQ(heis().multiply(heis().make(1, 0, 0), heis().make(0, 1, 0)), heis().make(1, 1, 1));
}

TEST(Heisenberg, CommutatorMatchesOracle) {
  using oracle::heis_inv;
  using oracle::heis_mul;
  const oracle::Triple X{1, 0, 0}, Y{0, 1, 0};
  const auto expected = heis_mul(heis_mul(heis_mul(X, Y), heis_inv(X)), heis_inv(Y));
  const auto X_ = heis().make(1, 0, 0), Y_ = heis().make(0, 1, 0);
  const auto got = heis().multiply(heis().multiply(heis().multiply(X_, Y_), heis().inverse(X_)),
                                   heis().inverse(Y_));
  EXPECT_EQ(got, heis().make(expected[0], expected[1], expected[2]));
  EXPECT_EQ(got, heis().make(0, 0, 1));
}

TEST(Heisenberg, InverseFormula) {
  for (Coord a = -3; a <= 3; ++a) {
    for (Coord b = -3; b <= 3; ++b) {
      for (Coord c = -3; c <= 3; ++c) {
        const auto o = oracle::heis_inv({a, b, c});
        EXPECT_EQ(heis().inverse(heis().make(a, b, c)), heis().make(o[0], o[1], o[2]));
        EXPECT_EQ(heis().inverse(heis().make(a, b, c)), heis().make(-a, -b, a * b - c));
      }
    }
  }
}

TEST(Heisenberg, EvaluateWords) {
  EXPECT_EQ(evaluate_word(heis(), {"x", "x", "x"}), heis().make(3, 0, 0));
  EXPECT_EQ(evaluate_word(heis(), {}), heis().identity());
  EXPECT_EQ(evaluate_word(heis(), {"x", "y", "-x", "-y"}), heis().make(0, 0, 1));
  EXPECT_THROW(evaluate_word(heis(), {"q"}), UnknownGenerator);
}

TEST(Heisenberg, RandomWordsAgreeWithOracle) {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 3, 12);
    oracle::Triple o{0, 0, 0};
    for (const Letter& l : w) o = oracle::heis_mul(o, oracle::heis_letter(l.inverse ? -l.generator - 1 : l.generator));
    EXPECT_EQ(heis().evaluate(w), heis().make(o[0], o[1], o[2]));
  }
}

TEST(Heisenberg, CyclicMembership) {
  EXPECT_EQ(in_cyclic_subgroup(heis(), heis().make(0, 0, 5)), 5);
  EXPECT_EQ(in_cyclic_subgroup(heis(), heis().make(1, 0, 3)), std::nullopt);
  EXPECT_EQ(in_cyclic_subgroup(heis(), heis().identity()), 0);
  EXPECT_TRUE(heis().is_central(heis().make(0, 0, -4)));
  EXPECT_FALSE(heis().is_central(heis().make(0, 1, 0)));
}

TEST(Heisenberg, ToWordRoundTrips) {
  for (Coord a = -2; a <= 2; ++a)
    for (Coord b = -2; b <= 2; ++b)
      for (Coord c = -2; c <= 2; ++c) {
        const auto g = heis().make(a, b, c);
        EXPECT_EQ(heis().evaluate(heis().to_word(g)), g);
      }
}

TEST(FreeAbelian, InverseAndIdentity) {
  auto m = make_group("z2");
  EXPECT_EQ(m->inverse(z2(3, -1)), z2(-3, 1));
  EXPECT_EQ(m->multiply(z2(2, 5), m->identity()), z2(2, 5));
}

TEST(FreeGroup, InverseReversesWord) {
  auto f = make_group("free2");
  const auto xy = evaluate_word(*f, {"x", "y"});
  EXPECT_EQ(f->inverse(xy), evaluate_word(*f, {"-y", "-x"}));
  EXPECT_EQ(f->format_word(f->to_word(f->inverse(xy))), (std::vector<std::string>{"-y", "-x"}));
}

TEST(FreeGroup, WordsAreFreelyReduced) {
  auto f = make_group("free3");
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Word w = f->to_word(f->evaluate(random_word(rng, 3, 10)));
    for (std::size_t i = 1; i < w.size(); ++i) {
      EXPECT_FALSE(w[i].generator == w[i - 1].generator && w[i].inverse != w[i - 1].inverse);
    }
  }
  EXPECT_EQ(evaluate_word(*f, {"x", "-x", "y", "-y"}), f->identity());
}

TEST(Groups, ModelMismatchIsDetected) {
  auto z = make_group("z2");
  EXPECT_THROW(multiply(*z, heis().identity(), z->identity()), ModelMismatch);
  EXPECT_THROW(make_group("z9"), Error);
  EXPECT_THROW(make_group("nonsense"), Error);
}

TEST(Groups, CheckedArithmetic) {
  EXPECT_THROW(checked_add(INT64_MAX, 1), std::overflow_error);
  EXPECT_THROW(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
  EXPECT_EQ(checked_mul(-4, 5), -20);
}

TEST(Groups, GroupLawsOnSampledTriples) {
  std::mt19937 rng(2024);
  for (const char* name : {"z", "z2", "z3", "z4", "free1", "free2", "free3", "heisenberg",
                           "product:heisenberg:z", "product:free2:z2"}) {
    auto m = make_group(name);
    for (int t = 0; t < 1000; ++t) {
      const auto g = m->evaluate(random_word(rng, m->rank(), 8));
      const auto h = m->evaluate(random_word(rng, m->rank(), 8));
      const auto k = m->evaluate(random_word(rng, m->rank(), 8));
      ASSERT_EQ(m->multiply(m->multiply(g, h), k), m->multiply(g, m->multiply(h, k))) << name;
      ASSERT_EQ(m->multiply(g, m->identity()), g) << name;
      ASSERT_EQ(m->multiply(m->identity(), g), g) << name;
      ASSERT_TRUE(m->is_identity(m->multiply(g, m->inverse(g)))) << name;
      ASSERT_TRUE(m->is_identity(m->multiply(m->inverse(g), g))) << name;
    }
  }
}

TEST(Groups, CentralGeneratorCommutesWithAll) {
  for (const char* name : {"z2", "z3", "heisenberg", "product:heisenberg:free2"}) {
    auto m = make_group(name);
    ASSERT_TRUE(m->has_cyclic_oracle());
    for (int i = 0; i < m->rank(); ++i) {
      const Word commutator{{0, false}, {i, false}, {0, true}, {i, true}};
      EXPECT_EQ(m->evaluate(commutator), m->identity()) << name << " " << i;
    }
  }
}

TEST(Groups, ProductNamingAndParts) {
  auto p = std::static_pointer_cast<const DirectProductGroup>(make_group("product:heisenberg:z"));
  EXPECT_EQ(p->generators(), (std::vector<std::string>{"z1", "x1", "y1", "x2"}));
  const auto g = evaluate_word(*p, {"x1", "x2", "y1"});
  EXPECT_EQ(p->left_part(g), heis().make(1, 1, 1));
  EXPECT_EQ(p->cyclic_power(evaluate_word(*p, {"z1", "z1"})), 2);
  EXPECT_EQ(p->cyclic_power(evaluate_word(*p, {"z1", "x2"})), std::nullopt);
}

TEST(Ball, SmallSizes) {
  EXPECT_EQ(ball(*make_group("z2"), 1).size(), 5u);
  EXPECT_EQ(ball(*make_group("z2"), 2).size(), 13u);
  EXPECT_EQ(ball(heis(), 1).size(), 7u);
  EXPECT_EQ(ball(*make_group("z"), 0).size(), 1u);
}

TEST(Ball, Z2SizesMatchFormulaAndEnumeration) {
  auto m = make_group("z2");
  for (int r = 0; r <= 10; ++r) {
    const auto b = ball(*m, r);
    EXPECT_EQ(b.size(), static_cast<std::size_t>(2 * r * r + 2 * r + 1));
    EXPECT_EQ(b.size(), oracle::z2_diamond(r).size());
    for (auto [x, y] : oracle::z2_diamond(r)) EXPECT_TRUE(b.contains(z2(x, y)));
  }
}

TEST(Ball, HeisenbergMatchesOracleBfs) {
  std::map<oracle::Triple, int> dist{{{0, 0, 0}, 0}};
  std::vector<oracle::Triple> frontier{{0, 0, 0}};
  for (int r = 1; r <= 4; ++r) {
    std::vector<oracle::Triple> next;
    for (const auto& g : frontier) {
      for (int code : {0, -1, 1, -2, 2, -3}) {
        const auto h = oracle::heis_mul(g, oracle::heis_letter(code));
        if (dist.emplace(h, r).second) next.push_back(h);
      }
    }
    frontier = next;
    const auto b = ball(heis(), r);
    ASSERT_EQ(b.size(), dist.size());
    for (const auto& [t, d] : dist) {
      const auto idx = b.find(heis().make(t[0], t[1], t[2]));
      ASSERT_TRUE(idx.has_value());
      EXPECT_EQ(b.distance[*idx], d);
    }
  }
}

TEST(Ball, NestingIsStrict) {
  for (const char* name : {"z", "z2", "z3", "free2", "heisenberg", "product:z:free2"}) {
    auto m = make_group(name);
    auto prev = ball(*m, 0);
    for (int r = 1; r <= 6; ++r) {
      auto cur = ball(*m, r);
      EXPECT_GT(cur.size(), prev.size()) << name;
      for (std::size_t v = 0; v < prev.size(); ++v) {
        EXPECT_EQ(cur.vertices[v], prev.vertices[v]) << name;
      }
      prev = std::move(cur);
    }
  }
}

TEST(Ball, InteriorVerticesHaveAllNeighbors) {
  const auto b = ball(heis(), 3);
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (std::size_t d = 0; d < b.neighbors[v].size(); ++d) {
      const int w = b.neighbors[v][d];
      if (b.distance[v] < 3) ASSERT_GE(w, 0);
      if (w >= 0) {
        const Letter l{static_cast<int>(d / 2), d % 2 == 1};
        EXPECT_EQ(b.vertices[w], heis().multiply(b.vertices[v], heis().letter(l)));
      }
    }
  }
  EXPECT_EQ(b.sphere().size(), b.sphere(3).size());
}

TEST(Ball, VertexCapRaisesBudget) {
  EXPECT_THROW(ball(heis(), 6, 50), BudgetExceeded);
}

TEST(Coset, Examples) {
  auto e = make_embedding("z-in-z2");
  auto [rep, h] = coset_decompose(*e, z2(3, 2));
  EXPECT_EQ(rep, z2(0, 2));
  EXPECT_EQ(h, e->subgroup()->evaluate(Word(3, Letter{0, false})));

  auto two = make_embedding("2z-in-z");
  auto z = two->ambient();
  const auto seven = z->evaluate(Word(7, Letter{0, false}));
  auto [rep2, h2] = coset_decompose(*two, seven);
  EXPECT_EQ(rep2, z->evaluate(Word(1, Letter{0, false})));
  EXPECT_EQ(two->embed(h2), z->evaluate(Word(6, Letter{0, false})));
  EXPECT_TRUE(two->finite_index());
  EXPECT_FALSE(make_embedding("z-in-heisenberg")->finite_index());
}

TEST(Coset, EmbeddedElementsDecomposeTrivially) {
  for (const char* name : {"z-in-z2", "2z-in-z", "z-in-heisenberg"}) {
    auto e = make_embedding(name);
    for (const auto& h : ball(*e->subgroup(), 5).vertices) {
      auto [rep, hh] = e->decompose(e->embed(h));
      EXPECT_TRUE(e->ambient()->is_identity(rep)) << name;
      EXPECT_EQ(hh, h) << name;
    }
  }
}

TEST(Coset, RecompositionOnBalls) {
  for (const char* name : {"z-in-z2", "2z-in-z", "z-in-heisenberg"}) {
    auto e = make_embedding(name);
    const auto& G = *e->ambient();
    std::set<GroupElement> reps;
    for (const auto& g : ball(G, 5).vertices) {
      auto [rep, h] = e->decompose(g);
      EXPECT_EQ(G.multiply(rep, e->embed(h)), g) << name;
      EXPECT_TRUE(e->is_representative(rep)) << name;
      reps.insert(rep);
    }
    // Distinct representatives lie in distinct cosets.
    for (const auto& a : reps) {
      for (const auto& b : reps) {
        if (a == b) continue;
        auto [r, h] = e->decompose(G.multiply(G.inverse(a), b));
        EXPECT_FALSE(G.is_identity(r)) << name;
      }
    }
  }
}
