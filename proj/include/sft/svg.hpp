#pragma once

#include <string>

#include "sft/reduction.hpp"
#include "sft/sft.hpp"

namespace sft {

// Unit squares colored by symbol (fixed palette in alphabet order); row 0
// at the bottom.  Undefined cells are left blank.
std::string render_patch_svg(const Z2Patch& patch);

// One row per <g_1>-line segment of the assignment, cells placed by their
// g_1 offset.  For symbols of the form "a:i" the fill encodes a and the
// border encodes i.
std::string render_configuration_svg(const GroupModel& model,
                                     const PartialConfiguration& c);

}  // namespace sft
