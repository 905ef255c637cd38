#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sft/deciders.hpp"
#include "sft/ends.hpp"
#include "sft/reduction.hpp"
#include "sft/sft.hpp"

namespace sft::io {

// Insertion-ordered documents so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// Two-space indented, newline-terminated.
std::string dump(const Json& doc);

// Tileset documents:
//   {"group": "z2", "alphabet": ["a","b"],
//    "forbidden": [{"domain": [[], ["x"]], "symbols": ["a","b"]}],
//    "horizontal_allowed": [["a","b"]], "vertical_allowed": [...]}
// Domain entries are signed-generator words.  The *_allowed keys compile to
// the complementary one-step forbidden patterns along x and y.
SftDefinition sft_from_json(const Json& doc);
SftDefinition load_sft(const std::string& path);
Json sft_to_json(const SftDefinition& s);

Json word_to_json(const GroupModel& model, const GroupElement& g);
GroupElement element_from_json(const GroupModel& model, const Json& word);

// Reduced tilesets: a tileset document for the target with a "provenance"
// tag per forbidden pattern, plus the "base" tileset and the "ray".
Json reduced_to_json(const ReducedSft& r);
ReducedSft reduced_from_json(const Json& doc);

Json ray_to_json(const RayWord& ray);
RayWord ray_from_json(const GroupPtr& model, const Json& doc);

// {"group": ..., "alphabet": [...], "cells": [{"at": word, "symbol": s}]}
Json configuration_to_json(const GroupModel& model, const PartialConfiguration& c);
struct LoadedConfiguration {
  GroupPtr model;
  PartialConfiguration config;
};
LoadedConfiguration configuration_from_json(const Json& doc);

// {"alphabet": [...], "rows": [[s or null, ...], ...]}, row 0 first.
Json patch_to_json(const Z2Patch& p);
Z2Patch patch_from_json(const Json& doc);

// {"builtin": "constant"|"checkerboard"|"stripes", "symbols": [...]} or
// {"tile": [[...], ...]} (tile[row][col], repeated periodically).
Z2Configuration z2_configuration_from_json(const Json& doc, const Alphabet& alphabet);

Json verdict_to_json(const EmptinessVerdict& v, const SftDefinition& s);
Json probe_to_json(const ProbeReport& r);
std::string probe_table(const ProbeReport& r);

}  // namespace sft::io
