#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sft/io.hpp"
#include "sft/sft.hpp"

namespace testing_helpers {

inline sft::SftDefinition parse_sft(const std::string& text) {
  return sft::io::sft_from_json(sft::io::Json::parse(text));
}

inline sft::Alphabet letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return sft::Alphabet(names);
}

// Z-SFT over `group` (z or free1) with the oracle's contiguous blocks along
// the first generator.
inline sft::SftDefinition z_sft(const oracle::ZShift& z, const std::string& group = "z") {
  auto model = sft::make_group(group);
  std::vector<sft::Pattern> forbidden;
  for (const auto& block : z.blocks) {
    std::vector<sft::Pattern::Cell> cells;
    for (std::size_t i = 0; i < block.size(); ++i) {
      cells.emplace_back(model->evaluate(sft::Word(i, sft::Letter{0, false})), block[i]);
    }
    forbidden.emplace_back(cells);
  }
  return sft::SftDefinition(model, letters(z.symbols), forbidden);
}

// The 16 one-step {a,b} relations, indexed by a 4-bit mask over (a,b) pairs
// in order aa, ab, ba, bb.
inline std::vector<std::vector<bool>> relation_from_mask(unsigned mask, int k = 2) {
  std::vector<std::vector<bool>> allowed(k, std::vector<bool>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) allowed[a][b] = (mask >> (a * k + b)) & 1u;
  }
  return allowed;
}

}  // namespace testing_helpers
