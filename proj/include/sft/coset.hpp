#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "sft/group.hpp"

namespace sft {

// A subgroup H <= G with a computable left-coset decomposition
// g = rep(g) * embed(h(g)).
class CosetEmbedding {
 public:
  virtual ~CosetEmbedding() = default;

  const std::string& name() const { return name_; }
  const GroupPtr& ambient() const { return ambient_; }
  const GroupPtr& subgroup() const { return subgroup_; }
  // Infinite-index embeddings are only meaningful for lifting forbidden
  // patterns; configurations still lift but there is no finite rep set.
  bool finite_index() const { return finite_index_; }

  virtual GroupElement embed(const GroupElement& h) const = 0;
  // Returns (rep, h) with g = rep * embed(h).
  virtual std::pair<GroupElement, GroupElement> decompose(
      const GroupElement& g) const = 0;
  virtual bool is_representative(const GroupElement& g) const = 0;

 protected:
  CosetEmbedding(std::string name, GroupPtr ambient, GroupPtr subgroup,
                 bool finite_index)
      : name_(std::move(name)),
        ambient_(std::move(ambient)),
        subgroup_(std::move(subgroup)),
        finite_index_(finite_index) {}

 private:
  std::string name_;
  GroupPtr ambient_;
  GroupPtr subgroup_;
  bool finite_index_;
};

using EmbeddingPtr = std::shared_ptr<const CosetEmbedding>;

// z-in-z2: Z = {(k,0)} <= Z^2, representatives {(0,m)}.
// 2z-in-z: 2Z <= Z (subgroup modeled as Z, embed k -> 2k), reps {0,1}.
// z-in-heisenberg: <z> <= Heisenberg, reps {(a,b,0)}; infinite index.
EmbeddingPtr make_embedding(std::string_view name);

std::pair<GroupElement, GroupElement> coset_decompose(const CosetEmbedding& e,
                                                      const GroupElement& g);

}  // namespace sft
