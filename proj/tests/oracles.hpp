#pragma once

// Brute-force reference implementations used only by the tests.  Nothing
// here calls into the library's algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Heisenberg triples with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
using Triple = std::array<long long, 3>;

inline Triple heis_mul(const Triple& g, const Triple& h) {
  return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
}

// Solves g * x = 1 coordinate by coordinate.
inline Triple heis_inv(const Triple& g) {
  const long long a = -g[0], b = -g[1];
  return {a, b, -(g[2] + g[0] * b)};
}

// Letters: 0 = z, 1 = x, 2 = y; negative codes -1..-3 are inverses.
inline Triple heis_letter(int code) {
  static const Triple gens[3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  return code >= 0 ? gens[code] : heis_inv(gens[-code - 1]);
}

// A Z-SFT given by forbidden contiguous blocks w_0..w_{L-1} at positions
// 0..L-1.
struct ZShift {
  int symbols = 0;
  std::vector<std::vector<int>> blocks;
};

inline bool periodic_word_ok(const ZShift& s, const std::vector<int>& w) {
  const std::size_t p = w.size();
  for (const auto& b : s.blocks) {
    for (std::size_t i = 0; i < p; ++i) {
      bool match = true;
      for (std::size_t t = 0; t < b.size() && match; ++t) {
        match = w[(i + t) % p] == b[t];
      }
      if (match) return false;
    }
  }
  return true;
}

// Searches all periodic configurations of period 1..max_period.
inline bool has_periodic_point(const ZShift& s, int max_period) {
  for (int p = 1; p <= max_period; ++p) {
    std::vector<int> w(p, 0);
    while (true) {
      if (periodic_word_ok(s, w)) return true;
      int i = 0;
      while (i < p && ++w[i] == s.symbols) w[i++] = 0;
      if (i == p) break;
    }
  }
  return false;
}

// A nonempty Z-SFT with blocks of length <= L has a point of period at most
// |S|^(L-1) (a simple cycle in the de Bruijn graph).
inline bool z_nonempty(const ZShift& s) {
  if (s.symbols == 0) return false;
  std::size_t longest = 1;
  for (const auto& b : s.blocks) longest = std::max(longest, b.size());
  int bound = 1;
  for (std::size_t i = 1; i < longest; ++i) bound *= s.symbols;
  return has_periodic_point(s, std::max(bound, s.symbols));
}

// One-step Z-SFT from an allowed-pair matrix.
inline ZShift from_allowed(const std::vector<std::vector<bool>>& allowed) {
  ZShift s;
  s.symbols = static_cast<int>(allowed.size());
  for (int a = 0; a < s.symbols; ++a) {
    for (int b = 0; b < s.symbols; ++b) {
      if (!allowed[a][b]) s.blocks.push_back({a, b});
    }
  }
  return s;
}

// Generic graph given by adjacency lists; counts solutions of a constraint
// problem by naive backtracking.
struct Csp {
  int vars = 0;
  int domain = 0;
  // Each constraint is a set of variables plus a tuple that is forbidden.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> forbidden;
};

inline std::uint64_t count_solutions(const Csp& csp, std::uint64_t stop_after = UINT64_MAX,
                                     std::vector<std::vector<int>>* first = nullptr) {
  std::vector<int> value(csp.vars, -1);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int v) {
    if (count >= stop_after) return;
    if (v == csp.vars) {
      if (first && first->empty()) first->push_back(value);
      ++count;
      return;
    }
    for (int s = 0; s < csp.domain; ++s) {
      value[v] = s;
      bool bad = false;
      for (const auto& [scope, tuple] : csp.forbidden) {
        if (std::find(scope.begin(), scope.end(), v) == scope.end()) continue;
        bool complete = true, match = true;
        for (std::size_t t = 0; t < scope.size(); ++t) {
          if (value[scope[t]] < 0) {
            complete = false;
            break;
          }
          if (value[scope[t]] != tuple[t]) match = false;
        }
        if (complete && match) {
          bad = true;
          break;
        }
      }
      if (!bad) go(v + 1);
      value[v] = -1;
    }
  };
  go(0);
  return count;
}

// Smallest vertex set whose removal disconnects every source from every
// sink (sources and sinks may themselves be removed), by enumerating sets
// in increasing size.  Exponential; for tiny graphs only.
inline int min_vertex_cut(const std::vector<std::vector<int>>& adj,
                          const std::vector<int>& sources,
                          const std::vector<int>& sinks) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> is_sink(n, false);
  for (int t : sinks) is_sink[t] = true;
  auto separated = [&](const std::vector<bool>& removed) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    for (int s : sources) {
      if (!removed[s] && !seen[s]) {
        seen[s] = true;
        q.push(s);
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (is_sink[u]) return false;
      for (int w : adj[u]) {
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    return true;
  };
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<bool> removed(n, false);
      for (int v : pick) removed[v] = true;
      if (separated(removed)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n;
}

// Z^2 lattice points with |x| + |y| <= r.
inline std::vector<std::pair<int, int>> z2_diamond(int r) {
  std::vector<std::pair<int, int>> out;
  for (int x = -r; x <= r; ++x) {
    for (int y = -r; y <= r; ++y) {
      if (std::abs(x) + std::abs(y) <= r) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace oracle
