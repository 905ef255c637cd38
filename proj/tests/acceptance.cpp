// Runs the nine acceptance checks and prints one PASS/FAIL line per check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "sft/deciders.hpp"
#include "sft/ends.hpp"
#include "sft/reduction.hpp"

using namespace sft;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

SftDefinition one_step(const std::string& group, std::vector<std::vector<std::vector<bool>>> rel) {
  OneStepRelations r;
  r.symbols = rel.front().size();
  r.allowed = std::move(rel);
  return sft_from_relations(make_group(group), testing_helpers::letters(static_cast<int>(r.symbols)), r);
}

std::vector<std::vector<bool>> random_relation(std::mt19937& rng, int k, int one_in) {
  std::vector<std::vector<bool>> allowed(k, std::vector<bool>(k));
  for (auto& row : allowed)
    for (auto&& cell : row) cell = rng() % one_in == 0;
  return allowed;
}

const char* kCheckerboard = R"({"group":"z2","alphabet":["a","b"],
    "horizontal_allowed":[["a","b"],["b","a"]],"vertical_allowed":[["a","b"],["b","a"]]})";
const char* kAllAllowed = R"({"group":"z2","alphabet":["a"],
    "horizontal_allowed":[["a","a"]],"vertical_allowed":[["a","a"]]})";
const char* kNoVertical = R"({"group":"z2","alphabet":["a"],
    "horizontal_allowed":[["a","a"]],"vertical_allowed":[]})";
const char* kStripes = R"({"group":"z2","alphabet":["a","b"],
    "horizontal_allowed":[["a","a"],["b","b"]],"vertical_allowed":[["a","b"],["b","a"]]})";

RayWord x_ray(const GroupPtr& h) { return RayWord(h, {}, h->parse_word({"x"})); }

void z_decider(Check& c) {
  int cases = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto allowed = testing_helpers::relation_from_mask(mask);
    const bool expected = oracle::has_periodic_point(oracle::from_allowed(allowed), 2);
    c.expect((decide_z(one_step("z", {allowed})).kind == VerdictKind::Nonempty) == expected,
             "mismatch on 2-symbol mask " + std::to_string(mask));
    ++cases;
  }
  std::mt19937 rng(1);
  for (int t = 0; t < 500; ++t) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto allowed = random_relation(rng, k, 3);
    const bool expected = oracle::has_periodic_point(oracle::from_allowed(allowed), k);
    c.expect((decide_z(one_step("z", {allowed})).kind == VerdictKind::Nonempty) == expected,
             "mismatch on random instance " + std::to_string(t));
    ++cases;
  }
  c.notes << cases << " instances";
}

void tree_decider(Check& c) {
  std::mt19937 rng(2);
  int empty = 0, nonempty = 0;
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto s = one_step("free2", {random_relation(rng, k, 2), random_relation(rng, k, 2)});
    const auto v = decide_tree(s);
    if (v.kind == VerdictKind::Empty) {
      ++empty;
      bool refuted = false;
      for (int r = 0; r <= k && !refuted; ++r) {
        refuted = ball_admissibility_search(s, r).outcome == SearchOutcome::Inadmissible;
      }
      c.expect(refuted, "Empty without an inadmissible ball, instance " + std::to_string(t));
    } else {
      ++nonempty;
      for (int r = 0; r <= 4; ++r) {
        c.expect(ball_admissibility_search(s, r).outcome == SearchOutcome::Admissible,
                 "Nonempty with an inadmissible ball, instance " + std::to_string(t));
      }
    }
  }
  c.notes << empty << " empty, " << nonempty << " nonempty";
}

void rule_counts(Check& c) {
  const auto base = testing_helpers::parse_sft(kCheckerboard);
  const auto r = reduce_z2_to_g(base, make_group("heisenberg"), x_ray(make_group("heisenberg")));
  std::size_t counts[3] = {0, 0, 0};
  for (Rule rule : r.rules) ++counts[static_cast<int>(rule)];
  // Schema identity |A|^2 * 2 + d_h * 2 + d_v * 4 from the base relations.
  const auto rel = one_step_relations(base);
  std::size_t dh = 0, dv = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      dh += !rel.allowed[0][a][b];
      dv += !rel.allowed[1][a][b];
    }
  c.expect(counts[0] == 4 * 2 && counts[1] == dh * 2 && counts[2] == dv * 4, "rule counts differ");
  c.expect(counts[0] == 8 && counts[1] == 4 && counts[2] == 8, "expected 8 + 4 + 8");
  c.expect(r.sft.forbidden().size() == 20, "expected 20 patterns");
  c.notes << counts[0] << " + " << counts[1] << " + " << counts[2];
}

void round_trip(Check& c) {
  auto h = make_group("heisenberg");
  const Alphabet ab({"a", "b"});
  const std::vector<std::pair<const char*, Z2Configuration>> cases{
      {kAllAllowed, Z2Configuration::constant(Alphabet({"a"}), 0)},
      {kCheckerboard, Z2Configuration::checkerboard(ab, 0, 1)},
      {kStripes, Z2Configuration::stripes(ab, 0, 1)}};
  int compared = 0;
  for (const auto& [text, config] : cases) {
    const auto r = reduce_z2_to_g(testing_helpers::parse_sft(text), h, x_ray(h));
    const auto enc = encode_z2_config(config, r, 2);
    c.expect(locally_admissible(enc.config, r.sft), "encoded window not admissible");
    const auto patch = decode_g_config(enc.config, r, 2, 2);
    for (std::size_t row = 0; row < patch.height(); ++row)
      for (std::size_t col = 0; col < patch.width(); ++col)
        if (patch.rows[row][col]) {
          ++compared;
          c.expect(*patch.rows[row][col] == config.at(col, row), "round trip differs");
        }
  }
  c.notes << compared << " cells compared";
}

void emptiness_transfer(Check& c) {
  auto h = make_group("heisenberg");
  const auto empty = reduce_z2_to_g(testing_helpers::parse_sft(kNoVertical), h, x_ray(h));
  const auto v = emptiness_semidecide(empty.sft, 2);
  c.expect(v.kind == VerdictKind::Empty && v.radius && *v.radius <= 2, "vertical-forbidden not Empty");
  const auto full = reduce_z2_to_g(testing_helpers::parse_sft(kAllAllowed), h, x_ray(h));
  for (int r = 0; r <= 2; ++r) {
    c.expect(ball_admissibility_search(full.sft, r).outcome == SearchOutcome::Admissible,
             "all-allowed not Admissible at r=" + std::to_string(r));
  }
  if (v.radius) c.notes << "empty at r=" << *v.radius;
}

void lift_transfer(Check& c) {
  const auto e = make_embedding("z-in-z2");
  const auto z = e->subgroup();
  const auto window = ball(*e->ambient(), 3).vertices;
  int empties = 0, witnesses = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto s = one_step("z", {testing_helpers::relation_from_mask(mask)});
    const auto lifted = lift_subgroup_sft(s, *e);
    const auto v = decide_z(s);
    if (v.kind == VerdictKind::Empty) {
      c.expect(v.obstruction_length && *v.obstruction_length <= 3,
               "obstruction longer than 3 for mask " + std::to_string(mask));
      const auto sv = emptiness_semidecide(lifted, 3);
      c.expect(sv.kind == VerdictKind::Empty, "lifted SFT not refuted, mask " + std::to_string(mask));
      ++empties;
    } else {
      PartialConfiguration periodic(s.alphabet());
      const int p = static_cast<int>(v.cycle.size());
      for (int k = -3; k <= 3; ++k) {
        periodic.set(z->evaluate(Word(std::abs(k), Letter{0, k < 0})), v.cycle[((k % p) + p) % p]);
      }
      const auto lifted_config = lift_configuration(periodic, *e, window);
      c.expect(lifted_config.size() == window.size() && locally_admissible(lifted_config, lifted),
               "lifted witness rejected, mask " + std::to_string(mask));
      ++witnesses;
    }
  }
  c.notes << empties << " refuted, " << witnesses << " witnessed";
}

void ray(Check& c) {
  auto h = make_group("heisenberg");
  const auto found = find_ray(h, 100);
  c.expect(found.ray.has_value(), "no Heisenberg ray");
  if (found.ray) {
    std::vector<oracle::Triple> points{{0, 0, 0}};
    for (std::size_t j = 0; j < 100; ++j) {
      const Letter l = found.ray->letter(j);
      points.push_back(oracle::heis_mul(points.back(), oracle::heis_letter(l.inverse ? -l.generator - 1 : l.generator)));
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i <= 100; ++i)
      for (std::size_t j = i + 1; j <= 100; ++j) {
        const auto d = oracle::heis_mul(oracle::heis_inv(points[i]), points[j]);
        c.expect(d[0] != 0 || d[1] != 0, "subword in the centre");
        ++pairs;
      }
    c.notes << pairs << " subwords checked";
  }
  const auto none = find_ray(make_group("z"), 100);
  c.expect(!none.ray && !none.budget_exhausted, "Z returned a ray");
}

void ends(Check& c) {
  const auto zp = thickness_profile(*make_group("z"), {1, 2, 3, 4, 5});
  for (const auto& row : zp.rows) c.expect(row.width == 2, "Z width not 2");
  c.expect(menger_width(*make_group("z2"), 1, 3) == 4, "Z2 width (1,3) not 4");
  const auto z2p = thickness_profile(*make_group("z2"), {1, 2, 3, 4});
  for (std::size_t i = 1; i < z2p.rows.size(); ++i) {
    c.expect(z2p.rows[i].width > z2p.rows[i - 1].width, "Z2 widths not increasing");
  }
  auto f2 = make_group("free2");
  std::size_t expected = 4;
  for (int r = 1; r <= 3; ++r, expected *= 3) {
    c.expect(outer_components(*f2, r, r + 3).size() == expected,
             "F2 component count at r=" + std::to_string(r));
  }
  c.notes << "Z2 widths";
  for (const auto& row : z2p.rows) c.notes << " " << row.width;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "sftool-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string tool = SFTOOL_PATH;
  const std::string d = std::string(SFT_DATA_DIR) + "/";
  const std::string red = (dir / "red.json").string(), enc = (dir / "enc.json").string();
  // Inputs for the encode/decode/render commands.
  const int reduced = std::system((tool + " reduce --sft " + d + "z2_checkerboard.json --group heisenberg --ray x -o " + red).c_str());
  const int encoded = std::system((tool + " encode --config " + d + "z2_checkerboard_config.json --sft-reduced " + red +
               " --radius 2 -o " + enc + " 2>/dev/null").c_str());
  c.expect(reduced == 0 && encoded == 0, "could not prepare inputs");

  const std::vector<std::string> commands{
      "decide --sft " + d + "z_all_allowed.json",
      "decide --sft " + d + "free2_example.json",
      "search --sft " + d + "z2_checkerboard.json --radius 3",
      "search --sft " + d + "z2_no_vertical.json --radius 2",
      "reduce --sft " + d + "z2_checkerboard.json --group heisenberg --ray x",
      "lift --sft " + d + "z_no_aa.json --embedding z-in-z2",
      "encode --config " + d + "z2_checkerboard_config.json --sft-reduced " + red + " --radius 2",
      "decode --window " + enc + " --sft-reduced " + red + " --height 2 --width 2",
      "find-ray --group heisenberg --length 100",
      "ends-probe --group z2 --radii 1,2,3,4",
      "render --patch " + d + "checkerboard_patch.json",
      "render --patch " + enc,
  };
  int n = 0;
  for (const auto& cmd : commands) {
    std::string reference;
    int reference_code = -1;
    for (const char* threads : {"1", "1", "4"}) {
      const fs::path out = dir / ("out" + std::to_string(n++));
      const std::string line = tool + " " + cmd + " --threads " + threads + " -o " + out.string() +
                               " > " + out.string() + ".stdout 2>/dev/null";
      const int code = std::system(line.c_str());
      const std::string bytes = slurp(out) + "\n--\n" + slurp(out.string() + ".stdout");
      if (reference_code == -1) {
        reference = bytes;
        reference_code = code;
        c.expect(bytes.size() > 5, "no output from: " + cmd);
      } else {
        c.expect(code == reference_code && bytes == reference, "output differs for: " + cmd);
      }
    }
  }
  fs::remove_all(dir);
  c.notes << commands.size() << " commands x 3 runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> checks{
      {"Z decider matches periodic-point oracle", z_decider},
      {"tree decider consistent with ball search", tree_decider},
      {"checkerboard reduction rule counts", rule_counts},
      {"encode/decode round trip on Heisenberg", round_trip},
      {"emptiness transfer through the reduction", emptiness_transfer},
      {"lift transfer along Z in Z2", lift_transfer},
      {"ray verification", ray},
      {"ends probe profiles", ends},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, fn] : checks) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.2fs; %s)\n", c.ok ? "PASS" : "FAIL", index++, name.c_str(), secs,
                c.notes.str().c_str());
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
