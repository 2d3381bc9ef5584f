#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "scitrade/types.hpp"

namespace scitrade {

/// What to do with edges whose citing or cited journal has no category
/// assignment. Strict aborts the build; lenient drops the edge and records
/// it in a skipped-edge report.
enum class JournalPolicy { Strict, Lenient };

/// One dropped edge plus the reason it was dropped (lenient builds).
struct SkippedEdge {
  CitationEdge edge;
  std::string reason;
};

/// Parses the edges CSV (header citing_journal,cited_journal,year,count).
/// Duplicate (citing, cited, year) rows are summed. Result is sorted by
/// (year, citing, cited).
///
/// Throws ParseError for malformed rows and ValidationError for negative
/// counts or empty journal tokens, naming the offending line.
std::vector<CitationEdge> parse_edges(std::istream& in);

/// Parses the category-map CSV (header journal,category) and, when given,
/// the companion universe CSV (header category,display_name). The category
/// universe is the declared universe (file order) plus any categories seen
/// only in assignments (first-seen order).
CategoryMap parse_category_map(std::istream& assignments, std::istream* universe = nullptr);

/// Parses the publications CSV (header category,year,publications).
PublicationCounts parse_publications(std::istream& in);

/// Aggregates one year's edges into a field-to-field flow matrix under
/// multiple counting: an edge whose citing journal belongs to categories S
/// and cited journal to categories T adds its count to every (s, t) in
/// S x T. Edges from other years are ignored.
///
/// Strict policy: an unmapped journal raises ValidationError naming it.
/// Lenient policy: the edge is dropped and appended to `skipped` when a
/// report vector is supplied.
FieldFlowMatrix build_flow_matrix(std::span<const CitationEdge> edges, const CategoryMap& map,
                                  int year, JournalPolicy policy = JournalPolicy::Strict,
                                  std::vector<SkippedEdge>* skipped = nullptr);

/// Journal-level total citations for one year. Multiple counting is
/// deliberately not applied: each edge contributes its count once,
/// regardless of how many categories its journals belong to.
Count grand_total_citations(std::span<const CitationEdge> edges, int year);

/// Distinct years present in the edge list, ascending.
std::vector<int> edge_years(std::span<const CitationEdge> edges);

}  // namespace scitrade
