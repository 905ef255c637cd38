#include "sft/io.hpp"

#include <fstream>
#include <sstream>

namespace sft::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

Alphabet alphabet_from_json(const Json& doc) {
  const auto names = doc.at("alphabet").get<std::vector<std::string>>();
  if (names.empty()) throw FormatError("alphabet must be non-empty");
  return Alphabet(names);
}

Json alphabet_to_json(const Alphabet& a) { return Json(a.symbols()); }

Json symbols_to_json(const Alphabet& a, const std::vector<Symbol>& syms) {
  Json out = Json::array();
  for (Symbol s : syms) out.push_back(a[s]);
  return out;
}

Json word_tokens(const GroupModel& model, const Word& w) {
  return Json(model.format_word(w));
}

Word word_from_json(const GroupModel& model, const Json& doc) {
  return model.parse_word(doc.get<std::vector<std::string>>());
}

Json pattern_to_json(const GroupModel& model, const Alphabet& a, const Pattern& p) {
  Json domain = Json::array();
  Json symbols = Json::array();
  for (const auto& [g, s] : p.cells()) {
    domain.push_back(word_to_json(model, g));
    symbols.push_back(a[s]);
  }
  Json out;
  out["domain"] = std::move(domain);
  out["symbols"] = std::move(symbols);
  return out;
}

void add_allowed(const GroupModel& model, const Alphabet& a, const Json& pairs,
                 int generator, const char* key, std::vector<Pattern>& forbidden) {
  if (generator >= model.rank()) {
    throw FormatError(std::string(key) + " needs a group with at least " +
                      std::to_string(generator + 1) + " generators");
  }
  std::vector<std::vector<bool>> ok(a.size(), std::vector<bool>(a.size(), false));
  for (const auto& pair : pairs) {
    const auto syms = pair.get<std::vector<std::string>>();
    if (syms.size() != 2) throw FormatError(std::string(key) + " entries must be pairs");
    ok[a.at(syms[0])][a.at(syms[1])] = true;
  }
  const GroupElement one = model.identity();
  const GroupElement g = model.generator(generator);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (!ok[x][y]) {
        forbidden.emplace_back(std::vector<Pattern::Cell>{{one, static_cast<Symbol>(x)},
                                                          {g, static_cast<Symbol>(y)}});
      }
    }
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json word_to_json(const GroupModel& model, const GroupElement& g) {
  return word_tokens(model, model.to_word(g));
}

GroupElement element_from_json(const GroupModel& model, const Json& word) {
  return model.evaluate(word_from_json(model, word));
}

// ---------------------------------------------------------------------------
// Tilesets

SftDefinition sft_from_json(const Json& doc) {
  return guarded("tileset", [&] {
    GroupPtr model = make_group(doc.at("group").get<std::string>());
    Alphabet a = alphabet_from_json(doc);
    std::vector<Pattern> forbidden;
    if (doc.contains("forbidden")) {
      for (const auto& entry : doc.at("forbidden")) {
        const auto& domain = entry.at("domain");
        const auto symbols = entry.at("symbols").get<std::vector<std::string>>();
        if (domain.size() != symbols.size()) {
          throw FormatError("forbidden pattern domain and symbols differ in length");
        }
        std::vector<Pattern::Cell> cells;
        for (std::size_t i = 0; i < symbols.size(); ++i) {
          cells.emplace_back(element_from_json(*model, domain[i]), a.at(symbols[i]));
        }
        forbidden.emplace_back(std::move(cells));
      }
    }
    if ((doc.contains("horizontal_allowed") || doc.contains("vertical_allowed")) &&
        model->name() != "z2") {
      throw FormatError("horizontal_allowed/vertical_allowed are only accepted for z2");
    }
    if (doc.contains("horizontal_allowed")) {
      add_allowed(*model, a, doc.at("horizontal_allowed"), 0, "horizontal_allowed", forbidden);
    }
    if (doc.contains("vertical_allowed")) {
      add_allowed(*model, a, doc.at("vertical_allowed"), 1, "vertical_allowed", forbidden);
    }
    return SftDefinition(std::move(model), std::move(a), std::move(forbidden));
  });
}

SftDefinition load_sft(const std::string& path) { return sft_from_json(read_json_file(path)); }

Json sft_to_json(const SftDefinition& s) {
  Json out;
  out["group"] = s.model()->name();
  out["alphabet"] = alphabet_to_json(s.alphabet());
  Json forbidden = Json::array();
  for (const Pattern& p : s.forbidden()) {
    forbidden.push_back(pattern_to_json(*s.model(), s.alphabet(), p));
  }
  out["forbidden"] = std::move(forbidden);
  return out;
}

// ---------------------------------------------------------------------------
// Rays and reduced tilesets

Json ray_to_json(const RayWord& ray) {
  Json out;
  out["prefix"] = word_tokens(*ray.model(), ray.prefix());
  out["period"] = word_tokens(*ray.model(), ray.period());
  return out;
}

RayWord ray_from_json(const GroupPtr& model, const Json& doc) {
  return guarded("ray", [&] {
    Word prefix = doc.contains("prefix") ? word_from_json(*model, doc.at("prefix")) : Word{};
    Word period = doc.contains("period") ? word_from_json(*model, doc.at("period")) : Word{};
    return RayWord(model, std::move(prefix), std::move(period));
  });
}

Json reduced_to_json(const ReducedSft& r) {
  Json out = sft_to_json(r.sft);
  auto& forbidden = out["forbidden"];
  for (std::size_t i = 0; i < r.rules.size(); ++i) {
    forbidden[i]["provenance"] = to_string(r.rules[i]);
  }
  out["base"] = sft_to_json(r.base);
  if (r.ray) out["ray"] = ray_to_json(*r.ray);
  return out;
}

ReducedSft reduced_from_json(const Json& doc) {
  return guarded("reduced tileset", [&] {
    const SftDefinition base = sft_from_json(doc.at("base"));
    GroupPtr target = make_group(doc.at("group").get<std::string>());
    std::optional<RayWord> ray;
    if (doc.contains("ray")) ray = ray_from_json(target, doc.at("ray"));
    ReducedSft r = reduce_z2_to_g(base, target, std::move(ray));
    // The stored patterns must be exactly what the compiler emits.
    Json expected = reduced_to_json(r);
    if (expected.at("alphabet") != doc.at("alphabet") ||
        expected.at("forbidden") != doc.at("forbidden")) {
      throw FormatError("reduced tileset does not match its base under the compiler");
    }
    return r;
  });
}

// ---------------------------------------------------------------------------
// Configurations and patches

Json configuration_to_json(const GroupModel& model, const PartialConfiguration& c) {
  Json out;
  out["group"] = model.name();
  out["alphabet"] = alphabet_to_json(c.alphabet());
  Json cells = Json::array();
  for (const auto& [g, s] : c.values()) {
    Json cell;
    cell["at"] = word_to_json(model, g);
    cell["symbol"] = c.alphabet()[s];
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  return out;
}

LoadedConfiguration configuration_from_json(const Json& doc) {
  return guarded("configuration", [&] {
    LoadedConfiguration out;
    out.model = make_group(doc.at("group").get<std::string>());
    out.config = PartialConfiguration(alphabet_from_json(doc));
    for (const auto& cell : doc.at("cells")) {
      const GroupElement g = element_from_json(*out.model, cell.at("at"));
      if (out.config.contains(g)) throw FormatError("configuration assigns an element twice");
      out.config.set(g, out.config.alphabet().at(cell.at("symbol").get<std::string>()));
    }
    return out;
  });
}

Json patch_to_json(const Z2Patch& p) {
  Json out;
  out["alphabet"] = alphabet_to_json(p.alphabet);
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json r = Json::array();
    for (const auto& c : row) {
      if (c) {
        r.push_back(p.alphabet[*c]);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return out;
}

Z2Patch patch_from_json(const Json& doc) {
  return guarded("patch", [&] {
    Z2Patch p;
    p.alphabet = alphabet_from_json(doc);
    for (const auto& row : doc.at("rows")) {
      std::vector<std::optional<Symbol>> r;
      for (const auto& c : row) {
        if (c.is_null()) {
          r.emplace_back();
        } else {
          r.emplace_back(p.alphabet.at(c.get<std::string>()));
        }
      }
      if (!p.rows.empty() && r.size() != p.rows.front().size()) {
        throw FormatError("patch rows must have equal length");
      }
      p.rows.push_back(std::move(r));
    }
    if (p.rows.empty() || p.rows.front().empty()) throw FormatError("patch must be non-empty");
    return p;
  });
}

Z2Configuration z2_configuration_from_json(const Json& doc, const Alphabet& alphabet) {
  return guarded("Z2 configuration", [&] {
    if (doc.contains("builtin")) {
      const auto kind = doc.at("builtin").get<std::string>();
      const auto syms = doc.at("symbols").get<std::vector<std::string>>();
      auto sym = [&](std::size_t i) {
        if (i >= syms.size()) throw FormatError("builtin '" + kind + "' needs more symbols");
        return alphabet.at(syms[i]);
      };
      if (kind == "constant") return Z2Configuration::constant(alphabet, sym(0));
      if (kind == "checkerboard") return Z2Configuration::checkerboard(alphabet, sym(0), sym(1));
      if (kind == "stripes") return Z2Configuration::stripes(alphabet, sym(0), sym(1));
      throw FormatError("unknown builtin configuration '" + kind + "'");
    }
    std::vector<std::vector<Symbol>> tile;
    for (const auto& row : doc.at("tile")) {
      std::vector<Symbol> r;
      for (const auto& s : row) r.push_back(alphabet.at(s.get<std::string>()));
      tile.push_back(std::move(r));
    }
    return Z2Configuration(alphabet, std::move(tile));
  });
}

// ---------------------------------------------------------------------------
// Verdicts and reports

Json verdict_to_json(const EmptinessVerdict& v, const SftDefinition& s) {
  Json out;
  out["verdict"] = to_string(v.kind);
  if (v.radius) out["radius"] = *v.radius;
  out["method"] = v.method;
  if (v.obstruction_length) out["obstruction_length"] = *v.obstruction_length;
  if (v.rounds) out["rounds"] = *v.rounds;
  if (v.method != "ball-search") out["surviving"] = symbols_to_json(s.alphabet(), v.surviving);
  if (!v.cycle.empty()) out["cycle"] = symbols_to_json(s.alphabet(), v.cycle);
  if (v.witness) out["witness"] = configuration_to_json(*s.model(), *v.witness);
  return out;
}

Json probe_to_json(const ProbeReport& r) {
  Json out;
  out["group"] = r.model;
  out["growing"] = r.growing;
  Json rows = Json::array();
  for (const ProbeRow& row : r.rows) {
    Json j;
    j["radius"] = row.radius;
    j["outer_radius"] = row.outer_radius;
    j["boundary"] = row.boundary_size;
    j["components"] = row.components;
    j["width"] = row.width;
    j["component_width"] = row.component_width;
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string probe_table(const ProbeReport& r) {
  std::ostringstream os;
  os << "radius\touter_radius\tboundary\tcomponents\twidth\tcomponent_width\n";
  for (const ProbeRow& row : r.rows) {
    os << row.radius << '\t' << row.outer_radius << '\t' << row.boundary_size << '\t'
       << row.components << '\t' << row.width << '\t' << row.component_width << '\n';
  }
  return os.str();
}

}  // namespace sft::io
