#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sft/group.hpp"

namespace sft {

// Vertices of b adjacent to `inner` and not in it (vertex indices, sorted).
std::vector<int> boundary(const BallGraph& b, const std::vector<int>& inner);

// Maximum number of vertex-disjoint paths from `sources` to `sinks` using
// only vertices with allowed[v] set.  Unit vertex capacities via vertex
// splitting; equals the minimum vertex separator.
int max_vertex_disjoint_paths(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<int>& sources,
                              const std::vector<int>& sinks,
                              const std::vector<bool>& allowed);

// A connected component of the annulus r <= |g| <= R (B_R minus the open
// ball of radius r) that reaches the R-sphere.
struct ComponentSummary {
  std::size_t size = 0;
  std::size_t sphere_vertices = 0;
  GroupElement representative;  // first vertex in canonical order
  // Vertex-disjoint paths inside the component from its r-sphere part to
  // its R-sphere part.
  int width = 0;
};

std::vector<ComponentSummary> outer_components(const GroupModel& model, int r, int R);

// Vertex-disjoint paths between the r-sphere and the R-sphere inside B_R.
int menger_width(const GroupModel& model, int r, int R);

struct ProbeRow {
  int radius = 0;
  int outer_radius = 0;  // R = 2r
  std::size_t boundary_size = 0;
  std::size_t components = 0;
  int width = 0;
  int component_width = 0;  // maximum over outer components
};

struct ProbeReport {
  std::string model;
  std::vector<ProbeRow> rows;
  // Component widths strictly increase over the probed radii.
  bool growing = false;
};

ProbeReport thickness_profile(const GroupModel& model, const std::vector<int>& radii,
                              unsigned threads = 1);

}  // namespace sft
