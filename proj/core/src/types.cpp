#include "scitrade/types.hpp"

#include <algorithm>
#include <numeric>

namespace scitrade {

std::size_t CategoryMap::add_category(std::string_view id, std::string_view display_name) {
  auto it = category_lookup_.find(std::string(id));
  if (it != category_lookup_.end()) {
    if (!display_name.empty()) display_names_[it->second] = std::string(display_name);
    return it->second;
  }
  std::size_t index = categories_.size();
  categories_.emplace_back(id);
  display_names_.emplace_back(display_name.empty() ? std::string(id) : std::string(display_name));
  category_lookup_.emplace(categories_.back(), index);
  return index;
}

void CategoryMap::assign(std::string_view journal, std::string_view category) {
  std::size_t index = add_category(category);
  auto [it, inserted] = assignments_.try_emplace(std::string(journal));
  if (inserted) journal_order_.emplace_back(journal);
  auto& set = it->second;
  auto pos = std::lower_bound(set.begin(), set.end(), index);
  if (pos == set.end() || *pos != index) set.insert(pos, index);
}

std::optional<std::size_t> CategoryMap::category_index(std::string_view id) const {
  auto it = category_lookup_.find(std::string(id));
  if (it == category_lookup_.end()) return std::nullopt;
  return it->second;
}

const std::string& CategoryMap::display_name(std::size_t index) const {
  return display_names_.at(index);
}

const std::vector<std::size_t>* CategoryMap::assignments(std::string_view journal) const {
  auto it = assignments_.find(std::string(journal));
  if (it == assignments_.end()) return nullptr;
  return &it->second;
}

void PublicationCounts::set(std::string_view category, int year, Count publications) {
  counts_[{std::string(category), year}] = publications;
}

std::optional<Count> PublicationCounts::get(std::string_view category, int year) const {
  auto it = counts_.find({std::string(category), year});
  if (it == counts_.end()) return std::nullopt;
  return it->second;
}

FieldFlowMatrix::FieldFlowMatrix(int year, std::vector<std::string> fields)
    : year_(year), fields_(std::move(fields)), cells_(fields_.size() * fields_.size(), 0) {
  index_.reserve(fields_.size());
  for (std::size_t i = 0; i < fields_.size(); ++i) index_.emplace(fields_[i], i);
}

std::optional<std::size_t> FieldFlowMatrix::index_of(std::string_view field) const {
  auto it = index_.find(std::string(field));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FieldFlowMatrix::require_index(std::string_view field) const {
  auto index = index_of(field);
  if (!index) throw LookupError("unknown field: " + std::string(field));
  return *index;
}

Count FieldFlowMatrix::row_sum(std::size_t i) const {
  const std::size_t n = fields_.size();
  return std::accumulate(cells_.begin() + i * n, cells_.begin() + (i + 1) * n, Count{0});
}

Count FieldFlowMatrix::col_sum(std::size_t j) const {
  const std::size_t n = fields_.size();
  Count total = 0;
  for (std::size_t i = 0; i < n; ++i) total += cells_[i * n + j];
  return total;
}

Count FieldFlowMatrix::cell_sum() const {
  return std::accumulate(cells_.begin(), cells_.end(), Count{0});
}

}  // namespace scitrade
