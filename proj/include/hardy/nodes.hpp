#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

#include "hardy/disk.hpp"

namespace hardy {

// Finite list of pairwise distinct points of the open disk.
class NodeSequence {
 public:
  NodeSequence() = default;
  explicit NodeSequence(std::vector<cplx> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      InteriorPoint{nodes_[i]};
      for (std::size_t j = 0; j < i; ++j)
        if (nodes_[i] == nodes_[j]) {
          std::ostringstream msg;
          msg << "nodes " << j << " and " << i << " coincide";
          throw DomainError(msg.str());
        }
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  cplx operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const cplx> values() const noexcept { return nodes_; }

 private:
  std::vector<cplx> nodes_;
};

}  // namespace hardy
