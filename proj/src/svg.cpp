#include "sft/svg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace sft {

namespace {

constexpr int kCell = 20;

constexpr std::array<const char*, 12> kFill = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1b9e77", "#d95f02"};

constexpr std::array<const char*, 6> kBorder = {"#000000", "#d62728", "#2ca02c",
                                                "#1f77b4", "#9467bd", "#8c564b"};

void open_svg(std::ostringstream& os, long width, long height) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
}

}  // namespace

std::string render_patch_svg(const Z2Patch& patch) {
  if (patch.height() == 0 || patch.width() == 0) throw PreconditionError("empty patch");
  const long w = static_cast<long>(patch.width());
  const long h = static_cast<long>(patch.height());
  std::ostringstream os;
  open_svg(os, w * kCell, h * kCell);
  for (long j = 0; j < h; ++j) {
    for (long i = 0; i < w; ++i) {
      const auto& c = patch.rows[j][i];
      if (!c) continue;
      os << "  <rect x=\"" << i * kCell << "\" y=\"" << (h - 1 - j) * kCell
         << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
         << kFill[*c % kFill.size()] << "\"><title>" << patch.alphabet[*c]
         << "</title></rect>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_configuration_svg(const GroupModel& model,
                                     const PartialConfiguration& c) {
  if (c.empty()) throw PreconditionError("empty configuration");

  // Split "a:i" symbols into a fill class and a border class.
  std::vector<std::string> firsts, seconds;
  std::vector<std::pair<int, int>> classes;
  for (const auto& name : c.alphabet().symbols()) {
    const auto colon = name.rfind(':');
    const std::string a = colon == std::string::npos ? name : name.substr(0, colon);
    const std::string i = colon == std::string::npos ? "" : name.substr(colon + 1);
    auto index_of = [](std::vector<std::string>& v, const std::string& s) {
      auto it = std::find(v.begin(), v.end(), s);
      if (it == v.end()) {
        v.push_back(s);
        return static_cast<int>(v.size() - 1);
      }
      return static_cast<int>(it - v.begin());
    };
    classes.emplace_back(index_of(firsts, a), index_of(seconds, i));
  }

  struct Row {
    GroupElement rep;
    std::vector<std::pair<Coord, Symbol>> cells;
  };
  std::vector<Row> rows;
  const bool lines = model.has_cyclic_oracle();
  for (const auto& [g, s] : c.values()) {
    bool placed = false;
    if (lines) {
      for (Row& row : rows) {
        if (auto l = model.cyclic_power(model.multiply(model.inverse(row.rep), g))) {
          row.cells.emplace_back(*l, s);
          placed = true;
          break;
        }
      }
    }
    if (!placed) rows.push_back({g, {{0, s}}});
  }

  Coord lo = 0, hi = 0;
  for (const Row& row : rows) {
    for (const auto& [l, s] : row.cells) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  }
  std::ostringstream os;
  open_svg(os, static_cast<long>(hi - lo + 1) * kCell, static_cast<long>(rows.size()) * kCell);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto cells = rows[r].cells;
    std::sort(cells.begin(), cells.end());
    for (const auto& [l, s] : cells) {
      const auto [fill, border] = classes[s];
      os << "  <rect x=\"" << (l - lo) * kCell + 1 << "\" y=\"" << r * kCell + 1
         << "\" width=\"" << kCell - 2 << "\" height=\"" << kCell - 2 << "\" fill=\""
         << kFill[fill % kFill.size()] << "\" stroke=\"" << kBorder[border % kBorder.size()]
         << "\" stroke-width=\"2\"><title>" << c.alphabet()[s] << "</title></rect>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sft
