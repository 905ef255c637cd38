#include "sft/ends.hpp"

#include <algorithm>
#include <future>
#include <queue>

namespace sft {

std::vector<int> boundary(const BallGraph& b, const std::vector<int>& inner) {
  std::vector<bool> in(b.size(), false);
  for (int v : inner) in.at(v) = true;
  std::vector<bool> out(b.size(), false);
  for (int v : inner) {
    for (int w : b.neighbors[v]) {
      if (w >= 0 && !in[w]) out[w] = true;
    }
  }
  std::vector<int> result;
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (out[v]) result.push_back(static_cast<int>(v));
  }
  return result;
}

namespace {

struct FlowNetwork {
  struct Edge {
    int to;
    int cap;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;

  explicit FlowNetwork(std::size_t n) : out(n) {}

  void add(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap});
    out[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0});
  }

  // Edmonds-Karp; unit capacities keep this small.
  int max_flow(int s, int t) {
    int flow = 0;
    while (true) {
      std::vector<int> via(out.size(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        const int u = q.front();
        q.pop();
        for (int e : out[u]) {
          if (edges[e].cap > 0 && via[edges[e].to] == -1) {
            via[edges[e].to] = e;
            q.push(edges[e].to);
          }
        }
      }
      if (via[t] == -1) return flow;
      for (int v = t; v != s;) {
        const int e = via[v];
        edges[e].cap -= 1;
        edges[e ^ 1].cap += 1;
        v = edges[e ^ 1].to;
      }
      ++flow;
    }
  }
};

std::vector<std::vector<int>> adjacency_of(const BallGraph& b) {
  std::vector<std::vector<int>> adj(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (int w : b.neighbors[v]) {
      if (w >= 0) adj[v].push_back(w);
    }
  }
  return adj;
}

void require_radii(int r, int R) {
  if (r < 0 || r >= R) throw PreconditionError("probe radii need 0 <= r < R");
}

}  // namespace

int max_vertex_disjoint_paths(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<int>& sources,
                              const std::vector<int>& sinks,
                              const std::vector<bool>& allowed) {
  const int n = static_cast<int>(adjacency.size());
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    if (!allowed[v]) continue;
    net.add(2 * v, 2 * v + 1, 1);
    for (int w : adjacency[v]) {
      if (allowed[w]) net.add(2 * v + 1, 2 * w, 1);
    }
  }
  for (int v : sources) {
    if (allowed[v]) net.add(source, 2 * v, 1);
  }
  for (int v : sinks) {
    if (allowed[v]) net.add(2 * v + 1, sink, 1);
  }
  return net.max_flow(source, sink);
}

namespace {

std::vector<std::vector<int>> components_of(const BallGraph& b, int r, int R) {
  std::vector<int> comp(b.size(), -1);
  std::vector<std::vector<int>> comps;
  for (std::size_t s = 0; s < b.size(); ++s) {
    if (b.distance[s] < r || comp[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::queue<int> q;
    q.push(static_cast<int>(s));
    comp[s] = id;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      comps[id].push_back(u);
      for (int w : b.neighbors[u]) {
        if (w >= 0 && b.distance[w] >= r && comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
  }
  std::vector<std::vector<int>> touching;
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    const bool reaches = std::any_of(c.begin(), c.end(), [&](int v) {
      return b.distance[v] == R;
    });
    if (reaches) touching.push_back(std::move(c));
  }
  // Components were discovered in canonical order of their first vertex.
  return touching;
}

std::vector<ComponentSummary> summarize(const BallGraph& b, int r, int R) {
  const auto adj = adjacency_of(b);
  std::vector<ComponentSummary> out;
  for (const auto& c : components_of(b, r, R)) {
    ComponentSummary s;
    s.size = c.size();
    s.representative = b.vertices[c.front()];
    std::vector<bool> allowed(b.size(), false);
    std::vector<int> sources, sinks;
    for (int v : c) {
      allowed[v] = true;
      if (b.distance[v] == r) sources.push_back(v);
      if (b.distance[v] == R) sinks.push_back(v);
    }
    s.sphere_vertices = sinks.size();
    s.width = max_vertex_disjoint_paths(adj, sources, sinks, allowed);
    out.push_back(std::move(s));
  }
  return out;
}

int width_in(const BallGraph& b, int r, int R) {
  return max_vertex_disjoint_paths(adjacency_of(b), b.sphere(r), b.sphere(R),
                                   std::vector<bool>(b.size(), true));
}

ProbeRow probe_row(const GroupModel& model, int r) {
  const int R = 2 * r;
  require_radii(r, R);
  const BallGraph b = ball(model, R);
  std::vector<int> inner;
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.distance[v] <= r) inner.push_back(static_cast<int>(v));
  }
  ProbeRow row;
  row.radius = r;
  row.outer_radius = R;
  row.boundary_size = boundary(b, inner).size();
  const auto comps = summarize(b, r, R);
  row.components = comps.size();
  row.width = width_in(b, r, R);
  for (const auto& c : comps) row.component_width = std::max(row.component_width, c.width);
  return row;
}

}  // namespace

std::vector<ComponentSummary> outer_components(const GroupModel& model, int r, int R) {
  require_radii(r, R);
  return summarize(ball(model, R), r, R);
}

int menger_width(const GroupModel& model, int r, int R) {
  require_radii(r, R);
  return width_in(ball(model, R), r, R);
}

ProbeReport thickness_profile(const GroupModel& model, const std::vector<int>& radii,
                              unsigned threads) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 1) throw PreconditionError("probe radii must be positive");
    if (i && radii[i] <= radii[i - 1]) throw PreconditionError("probe radii must increase");
  }
  ProbeReport report;
  report.model = model.name();
  if (threads > 1) {
    std::vector<std::future<ProbeRow>> jobs;
    for (int r : radii) {
      jobs.push_back(std::async(std::launch::async, [&model, r] { return probe_row(model, r); }));
    }
    for (auto& j : jobs) report.rows.push_back(j.get());
  } else {
    for (int r : radii) report.rows.push_back(probe_row(model, r));
  }
  report.growing = report.rows.size() >= 2;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].component_width <= report.rows[i - 1].component_width) {
      report.growing = false;
    }
  }
  return report;
}

}  // namespace sft
