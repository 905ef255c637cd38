#include "sft/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "sft/io.hpp"
#include "sft/svg.hpp"

namespace sft::cli {

namespace {

using io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SFT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SFT_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

struct Options {
  std::string sft_path;
  std::string reduced_path;
  std::string config_path;
  std::string window_path;
  std::string patch_path;
  std::string output;
  std::string table;
  std::string group;
  std::string ray;
  std::string embedding = "z-in-z2";
  std::string radii = "1,2,3,4";
  int radius = 2;
  int height = 2;
  int width = 2;
  std::size_t length = 100;
  std::uint64_t budget = 0;
  unsigned threads = 1;
};

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}
  void operator()(const std::string& text) const {
    if (o_.output.empty()) {
      out_ << text;
    } else {
      io::write_text_file(o_.output, text);
    }
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Nonempty: return kNonempty;
    case VerdictKind::Empty: return kEmpty;
    case VerdictKind::Unknown: return kUnknown;
  }
  return kUnknown;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.budget = o.budget;
  s.threads = std::max(1u, o.threads);
  return s;
}

// Inline rays: "[prefix/]period" with comma-separated letters, e.g. "x",
// "x,y", "y/x".  Anything naming an existing file is read as JSON.
RayWord parse_ray(const GroupPtr& model, const std::string& spec) {
  if (std::filesystem::exists(spec)) return io::ray_from_json(model, io::read_json_file(spec));
  auto letters = [&](const std::string& s) {
    std::vector<std::string> tokens;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ',')) {
      if (!t.empty()) tokens.push_back(t);
    }
    return model->parse_word(tokens);
  };
  const auto slash = spec.find('/');
  if (slash == std::string::npos) return RayWord(model, {}, letters(spec));
  return RayWord(model, letters(spec.substr(0, slash)), letters(spec.substr(slash + 1)));
}

std::vector<int> parse_radii(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) {
    try {
      out.push_back(std::stoi(t));
    } catch (const std::exception&) {
      throw UsageError("bad radius list '" + s + "'");
    }
  }
  return out;
}

int cmd_decide(const Options& o, const Emitter& emit) {
  const SftDefinition s = io::load_sft(o.sft_path);
  const std::string& g = s.model()->name();
  EmptinessVerdict v;
  if (g == "z" || g == "free1") {
    v = decide_z(s);
  } else if (g.rfind("free", 0) == 0) {
    v = decide_tree(s);
  } else {
    throw UsageError("no decider for group " + g + "; use the search subcommand");
  }
  emit(io::dump(io::verdict_to_json(v, s)));
  return exit_for(v.kind);
}

int cmd_search(const Options& o, const Emitter& emit) {
  const SftDefinition s = io::load_sft(o.sft_path);
  const EmptinessVerdict v = emptiness_semidecide(s, o.radius, search_options(o));
  emit(io::dump(io::verdict_to_json(v, s)));
  return exit_for(v.kind);
}

int cmd_reduce(const Options& o, const Emitter& emit) {
  const SftDefinition base = io::load_sft(o.sft_path);
  GroupPtr target = make_group(o.group);
  std::optional<RayWord> ray;
  if (!o.ray.empty()) {
    ray = parse_ray(target, o.ray);
  } else {
    RaySearchResult found = find_ray(target, o.length, o.budget);
    if (!found.ray) throw PreconditionError("no ray found for " + target->name());
    ray = std::move(found.ray);
  }
  const ReducedSft r = reduce_z2_to_g(base, std::move(target), std::move(ray));
  emit(io::dump(io::reduced_to_json(r)));
  return 0;
}

int cmd_lift(const Options& o, const Emitter& emit) {
  const SftDefinition s = io::load_sft(o.sft_path);
  const EmbeddingPtr e = make_embedding(o.embedding);
  emit(io::dump(io::sft_to_json(lift_subgroup_sft(s, *e))));
  return 0;
}

int cmd_encode(const Options& o, const Emitter& emit, std::ostream& err) {
  const ReducedSft r = io::reduced_from_json(io::read_json_file(o.reduced_path));
  const Z2Configuration c =
      io::z2_configuration_from_json(io::read_json_file(o.config_path), r.base.alphabet());
  const EncodeResult enc = encode_z2_config(c, r, o.radius);
  Json doc = io::configuration_to_json(*r.target, enc.config);
  doc["stalled"] = enc.stalled;
  Json frontier = Json::array();
  for (const GroupElement& g : enc.frontier) frontier.push_back(io::word_to_json(*r.target, g));
  doc["frontier"] = std::move(frontier);
  if (enc.stalled) {
    err << "encode: extension stalled with " << enc.frontier.size()
        << " ball elements unassigned\n";
  }
  emit(io::dump(doc));
  return 0;
}

int cmd_decode(const Options& o, const Emitter& emit) {
  const ReducedSft r = io::reduced_from_json(io::read_json_file(o.reduced_path));
  const io::LoadedConfiguration w = io::configuration_from_json(io::read_json_file(o.window_path));
  if (w.model->name() != r.target->name()) {
    throw ModelMismatch("window is over " + w.model->name() + ", reduced SFT over " +
                        r.target->name());
  }
  emit(io::dump(io::patch_to_json(decode_g_config(w.config, r, o.height, o.width))));
  return 0;
}

int cmd_find_ray(const Options& o, const Emitter& emit) {
  GroupPtr model = make_group(o.group);
  const RaySearchResult res = find_ray(model, o.length, o.budget);
  if (res.budget_exhausted) {
    throw BudgetExceeded("ray search budget of " + std::to_string(o.budget) + " nodes exhausted");
  }
  Json doc;
  doc["group"] = model->name();
  doc["length"] = o.length;
  if (res.ray) {
    doc["status"] = "found";
    doc["ray"] = io::ray_to_json(*res.ray);
  } else {
    doc["status"] = "not_found";
    doc["ray"] = nullptr;
  }
  emit(io::dump(doc));
  return res.ray ? 0 : 1;
}

int cmd_ends_probe(const Options& o, const Emitter& emit) {
  GroupPtr model = make_group(o.group);
  const ProbeReport report = thickness_profile(*model, parse_radii(o.radii), o.threads);
  if (!o.table.empty()) io::write_text_file(o.table, io::probe_table(report));
  emit(io::dump(io::probe_to_json(report)));
  return 0;
}

int cmd_render(const Options& o, const Emitter& emit) {
  const Json doc = io::read_json_file(o.patch_path);
  if (doc.contains("rows")) {
    emit(render_patch_svg(io::patch_from_json(doc)));
  } else {
    const io::LoadedConfiguration c = io::configuration_from_json(doc);
    emit(render_configuration_svg(*c.model, c.config));
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subshifts of finite type on finitely generated groups", "sftool"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the result here instead of stdout");
    sub->add_option("--threads", o.threads, "Worker threads (output is identical)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Search node budget (default $SFT_BUDGET or 1e7)");
  };

  auto* decide = app.add_subcommand("decide", "Exact emptiness for z and free-group SFTs");
  decide->add_option("--sft", o.sft_path, "Tileset file")->required();
  common(decide);

  auto* search = app.add_subcommand("search", "Ball-admissibility semi-decider");
  search->add_option("--sft", o.sft_path, "Tileset file")->required();
  search->add_option("--radius", o.radius, "Largest radius to search")
      ->check(CLI::NonNegativeNumber);
  common(search);

  auto* reduce = app.add_subcommand("reduce", "Compile a one-step z2 SFT to a group SFT");
  reduce->add_option("--sft", o.sft_path, "Base z2 tileset")->required();
  reduce->add_option("--group", o.group, "Target group")->required();
  reduce->add_option("--ray", o.ray, "Ray file or inline [prefix/]period, e.g. x");
  reduce->add_option("--length", o.length, "Ray length when searching for one");
  common(reduce);

  auto* lift = app.add_subcommand("lift", "Lift an SFT along a subgroup embedding");
  lift->add_option("--sft", o.sft_path, "Subgroup tileset")->required();
  lift->add_option("--embedding", o.embedding, "z-in-z2, 2z-in-z or z-in-heisenberg");
  common(lift);

  auto* encode = app.add_subcommand("encode", "Encode a z2 configuration into the target group");
  encode->add_option("--config", o.config_path, "z2 configuration file")->required();
  encode->add_option("--sft-reduced", o.reduced_path, "Reduced tileset")->required();
  encode->add_option("--radius", o.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  common(encode);

  auto* decode = app.add_subcommand("decode", "Decode a group configuration into a z2 patch");
  decode->add_option("--window", o.window_path, "Configuration file")->required();
  decode->add_option("--sft-reduced", o.reduced_path, "Reduced tileset")->required();
  decode->add_option("--height", o.height, "Highest row index")->check(CLI::NonNegativeNumber);
  decode->add_option("--width", o.width, "Number of columns")->check(CLI::NonNegativeNumber);
  common(decode);

  auto* ray = app.add_subcommand("find-ray", "Search a ray avoiding the central subgroup");
  ray->add_option("--group", o.group, "Group")->required();
  ray->add_option("--length", o.length, "Ray length");
  common(ray);

  auto* probe = app.add_subcommand("ends-probe", "Finite-radius thickness profile");
  probe->add_option("--group", o.group, "Group")->required();
  probe->add_option("--radii", o.radii, "Comma-separated increasing radii");
  probe->add_option("--table", o.table, "Also write a TSV table here");
  common(probe);

  auto* render = app.add_subcommand("render", "Render a patch or ball assignment as SVG");
  render->add_option("--patch", o.patch_path, "Patch or configuration file")->required();
  common(render);

  try {
    o.budget = default_budget();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Emitter emit(o, out);
  try {
    if (*decide) return cmd_decide(o, emit);
    if (*search) return cmd_search(o, emit);
    if (*reduce) return cmd_reduce(o, emit);
    if (*lift) return cmd_lift(o, emit);
    if (*encode) return cmd_encode(o, emit, err);
    if (*decode) return cmd_decode(o, emit);
    if (*ray) return cmd_find_ray(o, emit);
    if (*probe) return cmd_ends_probe(o, emit);
    if (*render) return cmd_render(o, emit);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kFormat;
  } catch (const UnknownGenerator& e) {
    err << "input error: " << e.what() << "\n";
    return kFormat;
  } catch (const ModelMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kFormat;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kFormat;
  } catch (const InsufficientSupport& e) {
    err << "input error: " << e.what() << "\n";
    return kFormat;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kBudget;
  }
  return kUsage;
}

}  // namespace sft::cli
