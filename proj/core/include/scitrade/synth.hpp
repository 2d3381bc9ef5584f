#pragma once

#include <cstdint>
#include <vector>

#include "scitrade/types.hpp"

namespace scitrade::synth {

enum class EdgeModel { Uniform, SkewedPreferential };

/// Recipe for a synthetic journal-level dataset with known ground truth.
/// Output is a pure function of the spec: the generator runs mt19937_64
/// with hand-rolled sampling (standard-library distributions are not
/// portable across implementations), and every year draws from a sub-seed
/// derived from (seed, year).
struct SynthSpec {
  int n_categories = 2;
  int journals_per_category = 10;
  double multi_assign_fraction = 0.0;  // journals given a second category
  EdgeModel edge_model = EdgeModel::Uniform;
  double exponent = 1.0;  // preferential-attachment strength
  std::vector<int> years = {2009};
  std::uint64_t seed = 0;
  std::int64_t total_edges = 1000;  // citation events per year

  /// Throws ConfigError for out-of-range parameters.
  void validate() const;
};

struct SynthOutput {
  std::vector<CitationEdge> edges;  // aggregated, sorted by (year, citing, cited)
  CategoryMap categories;
  PublicationCounts publications;
};

/// Generates the dataset. Deterministic: equal specs give equal outputs.
///
/// Uniform draws citing and cited journals uniformly. SkewedPreferential
/// draws the cited journal with probability proportional to
/// (citations received so far + 1)^exponent, sequentially within a year,
/// so early winners attract later citations.
SynthOutput generate(const SynthSpec& spec);

/// Parses a spec from its JSON form, e.g.
///   {"n_categories": 4, "journals_per_category": 25,
///    "multi_assign_fraction": 0.1, "edge_model": "preferential",
///    "exponent": 1.0, "years": [2007, 2009], "seed": 42,
///    "total_edges": 100000}
/// Throws ConfigError.
SynthSpec spec_from_json(const std::string& text);

/// Writes the dataset in the CSV schemas the parsers consume:
/// edges.csv, journal_categories.csv, categories.csv, publications.csv.
/// Each file starts with a comment line naming the RNG and seed.
/// Returns the file names written (relative to `directory`).
std::vector<std::string> write_dataset(const SynthOutput& data, const SynthSpec& spec,
                                       const std::string& directory);

}  // namespace scitrade::synth
