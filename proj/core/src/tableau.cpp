#include "svdt/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace svdt {

std::optional<StrictPartition> StrictPartition::parse(const std::string& text) {
  if (text.empty() || text == "0") return StrictPartition{};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) return std::nullopt;
      parts.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  try {
    return StrictPartition(std::move(parts));
  } catch (const contract_error&) {
    return std::nullopt;
  }
}

std::string StrictPartition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s;
}

std::vector<Box> shifted_diagram(const StrictPartition& lambda) {
  std::vector<Box> boxes;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) boxes.push_back({i, i + j - 1});
  return boxes;
}

SetShiftedTableau::SetShiftedTableau(StrictPartition shape,
                                     std::vector<std::vector<Cell>> rows,
                                     bool allow_multiset)
    : shape_(std::move(shape)), rows_(std::move(rows)), multiset_(false) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw contract_error("tableau: row count does not match shape");
  for (int i = 1; i <= shape_.length(); ++i) {
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != shape_.part(i))
      throw contract_error("tableau: row " + std::to_string(i) + " has wrong length");
    for (const Cell& c : row) {
      if (c.empty()) throw contract_error("tableau: empty cell");
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] <= 0) throw contract_error("tableau: entry codes must be positive");
        if (k + 1 < c.size()) {
          if (c[k] > c[k + 1]) throw contract_error("tableau: cell entries must be sorted");
          if (c[k] == c[k + 1]) {
            if (!allow_multiset || c[k] != entry::unprimed(1))
              throw contract_error("tableau: repeated cell entry (only 1 may repeat, in multiset mode)");
            multiset_ = true;
          }
        }
      }
    }
  }
}

const Cell& SetShiftedTableau::cell(Box b) const {
  if (b.row < 1 || b.row > shape_.length()) throw contract_error("cell: row out of range");
  int j = b.col - b.row;  // 0-based offset within the row
  if (j < 0 || j >= shape_.part(b.row)) throw contract_error("cell: column out of range");
  return rows_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(j)];
}

SetShiftedTableau SetShiftedTableau::with_cell(Box b, Cell c) const {
  cell(b);  // bounds check
  auto rows = rows_;
  std::sort(c.begin(), c.end());
  rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - b.row)] = std::move(c);
  return SetShiftedTableau(shape_, std::move(rows), true);
}

int SetShiftedTableau::degree() const {
  int d = 0;
  for (const auto& row : rows_)
    for (const Cell& c : row) d += static_cast<int>(c.size());
  return d;
}

bool SetShiftedTableau::all_singletons() const {
  for (const auto& row : rows_)
    for (const Cell& c : row)
      if (c.size() != 1) return false;
  return true;
}

bool SetShiftedTableau::unprimed() const {
  for (const auto& row : rows_)
    for (const Cell& c : row)
      for (int code : c)
        if (entry::is_primed(code)) return false;
  return true;
}

int SetShiftedTableau::max_value() const {
  int m = 0;
  for (const auto& row : rows_)
    for (const Cell& c : row)
      if (!c.empty()) m = std::max(m, entry::value(c.back()));
  return m;
}

std::vector<Box> SetShiftedTableau::boxes_revrow() const {
  std::vector<Box> order;
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = shape_.part(i); j >= 1; --j) order.push_back({i, i + j - 1});
  return order;
}

int SetShiftedTableau::count_in_cell(Box b, int code) const {
  const Cell& c = cell(b);
  return static_cast<int>(std::count(c.begin(), c.end(), code));
}

std::vector<int> SetShiftedTableau::weight(int n) const {
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (const auto& row : rows_)
    for (const Cell& c : row)
      for (int code : c) {
        int v = entry::value(code);
        if (v < 1 || v > n) throw contract_error("weight: entry value exceeds n");
        ++wt[static_cast<std::size_t>(v - 1)];
      }
  return wt;
}

std::vector<SetShiftedTableau> SetShiftedTableau::distributions() const {
  // Support values per cell, in row-major cell order.
  std::vector<Cell> support;
  for (const auto& row : rows_)
    for (const Cell& c : row) {
      Cell s = c;
      s.erase(std::unique(s.begin(), s.end()), s.end());
      support.push_back(std::move(s));
    }
  std::vector<SetShiftedTableau> out;
  std::vector<std::size_t> pick(support.size(), 0);
  for (;;) {
    std::vector<std::vector<Cell>> rows;
    std::size_t idx = 0;
    for (const auto& row : rows_) {
      rows.emplace_back();
      for (std::size_t j = 0; j < row.size(); ++j)
        rows.back().push_back({support[idx][pick[idx]]}), ++idx;
    }
    out.emplace_back(shape_, std::move(rows), false);
    // Odometer: last cell varies fastest.
    std::size_t k = support.size();
    while (k > 0) {
      --k;
      if (++pick[k] < support[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
    if (support.empty()) return out;  // empty shape: single empty distribution
  }
}

namespace {

nlohmann::ordered_json cell_to_json(const Cell& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int code : c) {
    if (entry::is_primed(code))
      arr.push_back(std::to_string(entry::value(code)) + "'");
    else
      arr.push_back(entry::value(code));
  }
  return arr;
}

int cell_entry_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    int k = v.get<int>();
    if (k <= 0) throw std::invalid_argument("tableau parse: entries must be positive");
    return entry::unprimed(k);
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.size() < 2 || s.back() != '\'')
      throw std::invalid_argument("tableau parse: bad entry token '" + s + "'");
    int k = std::stoi(s.substr(0, s.size() - 1));
    if (k <= 0) throw std::invalid_argument("tableau parse: entries must be positive");
    return entry::primed(k);
  }
  throw std::invalid_argument("tableau parse: entry must be an integer or \"k'\" string");
}

}  // namespace

std::string SetShiftedTableau::serialize() const {
  nlohmann::ordered_json j;
  j["shape"] = shape_.parts();
  j["multiset"] = multiset_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cell& c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

SetShiftedTableau SetShiftedTableau::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);  // error messages carry the byte position
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tableau parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
    throw std::invalid_argument("tableau parse: expected object with \"shape\" and \"rows\"");
  std::vector<int> parts;
  for (const auto& p : j.at("shape")) parts.push_back(p.get<int>());
  StrictPartition shape;
  try {
    shape = StrictPartition(parts);
  } catch (const contract_error& e) {
    throw std::invalid_argument(std::string("tableau parse: ") + e.what());
  }
  bool multiset = j.value("multiset", false);
  std::vector<std::vector<Cell>> rows;
  for (const auto& r : j.at("rows")) {
    rows.emplace_back();
    for (const auto& c : r) {
      Cell cell;
      for (const auto& v : c) cell.push_back(cell_entry_from_json(v));
      std::sort(cell.begin(), cell.end());
      rows.back().push_back(std::move(cell));
    }
  }
  try {
    return SetShiftedTableau(std::move(shape), std::move(rows), multiset);
  } catch (const contract_error& e) {
    throw std::invalid_argument(std::string("tableau parse: ") + e.what());
  }
}

std::string SetShiftedTableau::display() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += " / ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ' ';
      for (int code : rows_[i][j]) s += entry::to_string(code);
    }
  }
  return s.empty() ? "(empty)" : s;
}

}  // namespace svdt
