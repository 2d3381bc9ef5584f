#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scitrade/error.hpp"

namespace scitrade {

using Count = std::int64_t;

/// One journal-to-journal citation count for a year. Self-loops are
/// legitimate data (journal self-citations).
struct CitationEdge {
  std::string citing_journal;
  std::string cited_journal;
  int year = 0;
  Count count = 0;

  friend bool operator==(const CitationEdge&, const CitationEdge&) = default;
};

/// Journal -> subject-category assignments plus the ordered category
/// universe. A journal may belong to several categories; the universe may
/// contain declared-but-unused categories so that matrices built for
/// different years share dimensions.
class CategoryMap {
 public:
  CategoryMap() = default;

  /// Appends a category to the universe if not present; returns its index.
  std::size_t add_category(std::string_view id, std::string_view display_name = {});

  /// Adds `category` to `journal`'s assignment set (deduplicated).
  /// The category is added to the universe if it is not yet declared.
  void assign(std::string_view journal, std::string_view category);

  const std::vector<std::string>& categories() const { return categories_; }
  std::size_t category_count() const { return categories_.size(); }

  std::optional<std::size_t> category_index(std::string_view id) const;
  const std::string& display_name(std::size_t index) const;

  /// Category indices assigned to `journal`, in universe order.
  /// Empty result means the journal is unmapped.
  const std::vector<std::size_t>* assignments(std::string_view journal) const;

  std::size_t journal_count() const { return assignments_.size(); }

  /// Journals in first-seen order (deterministic output order).
  const std::vector<std::string>& journals() const { return journal_order_; }

 private:
  std::vector<std::string> categories_;
  std::vector<std::string> display_names_;
  std::unordered_map<std::string, std::size_t> category_lookup_;
  std::unordered_map<std::string, std::vector<std::size_t>> assignments_;
  std::vector<std::string> journal_order_;
};

/// Publication counts keyed by (category, year).
class PublicationCounts {
 public:
  void set(std::string_view category, int year, Count publications);
  std::optional<Count> get(std::string_view category, int year) const;
  bool empty() const { return counts_.empty(); }

 private:
  std::map<std::pair<std::string, int>, Count> counts_;
};

/// Square field-to-field citation flow matrix for one year.
///
/// cells(i, j) holds citations from field i's journals (citing side) to
/// field j's journals (cited side). Knowledge moves against the citation
/// arrow: row sums are a field's imports, column sums its exports.
class FieldFlowMatrix {
 public:
  FieldFlowMatrix() = default;
  FieldFlowMatrix(int year, std::vector<std::string> fields);

  int year() const { return year_; }
  std::size_t size() const { return fields_.size(); }
  const std::vector<std::string>& fields() const { return fields_; }
  const std::string& field(std::size_t i) const { return fields_[i]; }

  Count at(std::size_t citing, std::size_t cited) const {
    return cells_[citing * fields_.size() + cited];
  }
  void add(std::size_t citing, std::size_t cited, Count amount) {
    cells_[citing * fields_.size() + cited] += amount;
  }
  void set(std::size_t citing, std::size_t cited, Count value) {
    cells_[citing * fields_.size() + cited] = value;
  }

  std::optional<std::size_t> index_of(std::string_view field) const;
  /// Like index_of but throws LookupError naming the field.
  std::size_t require_index(std::string_view field) const;

  /// Outgoing citations of field i (its imports).
  Count row_sum(std::size_t i) const;
  /// Incoming citations of field j (its exports).
  Count col_sum(std::size_t j) const;
  Count cell_sum() const;

  friend bool operator==(const FieldFlowMatrix&, const FieldFlowMatrix&) = default;

 private:
  int year_ = 0;
  std::vector<std::string> fields_;
  std::vector<Count> cells_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace scitrade
