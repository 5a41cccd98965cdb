#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svdt/common.hpp"

namespace svdt {

// A strict partition: positive parts, strictly decreasing.  The empty
// partition is allowed and indexes the empty shape.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0 || (k + 1 < parts_.size() && parts_[k] <= parts_[k + 1]))
        throw contract_error("StrictPartition: parts must be positive and strictly decreasing");
    }
  }

  // Parses "3,2,1" (also accepts "" and "0" for the empty partition).
  static std::optional<StrictPartition> parse(const std::string& text);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }  // 1-based
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  std::string to_string() const;  // "3,2,1"; "0" for the empty partition

  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

// A box of a shifted diagram, French convention: row 1 is the bottom row,
// rows grow upward, columns left to right.  Row i occupies columns
// i .. i + lambda_i - 1.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// All boxes of SD_lambda in row-major order (row ascending, column ascending).
std::vector<Box> shifted_diagram(const StrictPartition& lambda);

}  // namespace svdt
