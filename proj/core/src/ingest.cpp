#include "scitrade/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <tuple>

#include "scitrade/csv.hpp"

namespace scitrade {

namespace {

long long parse_integer(const std::string& text, const char* what, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string("expected integer ") + what + ", got \"" + text + "\"", line);
  }
  return value;
}

void expect_header(const std::vector<std::string>& fields, const std::vector<std::string>& expected,
                   std::size_t line) {
  if (fields != expected) {
    throw ParseError("expected header \"" + csv::join(expected) + "\", got \"" + csv::join(fields) + "\"",
                     line);
  }
}

}  // namespace

std::vector<CitationEdge> parse_edges(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw ParseError("empty edge file: missing header");
  expect_header(fields, {"citing_journal", "cited_journal", "year", "count"}, reader.line_number());

  std::map<std::tuple<int, std::string, std::string>, Count> totals;
  while (reader.next(fields)) {
    const std::size_t line = reader.line_number();
    if (fields.size() != 4) {
      throw ParseError("expected 4 fields, got " + std::to_string(fields.size()), line);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty journal token");
    }
    int year = static_cast<int>(parse_integer(fields[2], "year", line));
    long long count = parse_integer(fields[3], "count", line);
    if (count < 0) {
      throw ValidationError("line " + std::to_string(line) + ": negative citation count " +
                            std::to_string(count));
    }
    totals[{year, fields[0], fields[1]}] += count;
  }

  std::vector<CitationEdge> edges;
  edges.reserve(totals.size());
  for (const auto& [key, count] : totals) {
    edges.push_back({std::get<1>(key), std::get<2>(key), std::get<0>(key), count});
  }
  return edges;
}

CategoryMap parse_category_map(std::istream& assignments, std::istream* universe) {
  CategoryMap map;

  if (universe) {
    csv::Reader reader(*universe);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw ParseError("empty universe file: missing header");
    expect_header(fields, {"category", "display_name"}, reader.line_number());
    while (reader.next(fields)) {
      const std::size_t line = reader.line_number();
      if (fields.size() != 2) {
        throw ParseError("expected 2 fields, got " + std::to_string(fields.size()), line);
      }
      if (fields[0].empty()) {
        throw ValidationError("line " + std::to_string(line) + ": empty category token");
      }
      map.add_category(fields[0], fields[1]);
    }
  }

  csv::Reader reader(assignments);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw ParseError("empty category map: missing header");
  expect_header(fields, {"journal", "category"}, reader.line_number());

  std::size_t rows = 0;
  while (reader.next(fields)) {
    const std::size_t line = reader.line_number();
    if (fields.size() != 2) {
      throw ParseError("expected 2 fields, got " + std::to_string(fields.size()), line);
    }
    if (fields[0].empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty journal token");
    }
    if (fields[1].empty()) {
      throw ValidationError("line " + std::to_string(line) + ": journal \"" + fields[0] +
                            "\" assigned an empty category");
    }
    map.assign(fields[0], fields[1]);
    ++rows;
  }
  if (rows == 0) throw ValidationError("category map contains no assignments");
  return map;
}

PublicationCounts parse_publications(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw ParseError("empty publications file: missing header");
  expect_header(fields, {"category", "year", "publications"}, reader.line_number());

  PublicationCounts counts;
  while (reader.next(fields)) {
    const std::size_t line = reader.line_number();
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line);
    }
    if (fields[0].empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty category token");
    }
    int year = static_cast<int>(parse_integer(fields[1], "year", line));
    long long publications = parse_integer(fields[2], "publications", line);
    if (publications < 0) {
      throw ValidationError("line " + std::to_string(line) + ": negative publication count");
    }
    counts.set(fields[0], year, publications);
  }
  return counts;
}

FieldFlowMatrix build_flow_matrix(std::span<const CitationEdge> edges, const CategoryMap& map,
                                  int year, JournalPolicy policy,
                                  std::vector<SkippedEdge>* skipped) {
  FieldFlowMatrix matrix(year, map.categories());
  for (const CitationEdge& edge : edges) {
    if (edge.year != year) continue;
    const auto* citing = map.assignments(edge.citing_journal);
    const auto* cited = map.assignments(edge.cited_journal);
    if (!citing || !cited) {
      if (policy == JournalPolicy::Strict) {
        throw ValidationError("unmapped journal: " +
                              (!citing ? edge.citing_journal : edge.cited_journal));
      }
      if (skipped) {
        std::string reason = !citing && !cited ? "unmapped citing and cited journals"
                             : !citing         ? "unmapped citing journal"
                                               : "unmapped cited journal";
        skipped->push_back({edge, std::move(reason)});
      }
      continue;
    }
    for (std::size_t s : *citing) {
      for (std::size_t t : *cited) {
        matrix.add(s, t, edge.count);
      }
    }
  }
  return matrix;
}

Count grand_total_citations(std::span<const CitationEdge> edges, int year) {
  Count total = 0;
  for (const CitationEdge& edge : edges) {
    if (edge.year == year) total += edge.count;
  }
  return total;
}

std::vector<int> edge_years(std::span<const CitationEdge> edges) {
  std::set<int> years;
  for (const CitationEdge& edge : edges) years.insert(edge.year);
  return {years.begin(), years.end()};
}

}  // namespace scitrade
