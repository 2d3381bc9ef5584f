#include "scitrade/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "scitrade/csv.hpp"
#include "scitrade/manifest.hpp"

namespace scitrade::synth {

namespace {

// 53-bit mantissa draw in [0, 1); bit-identical wherever mt19937_64 is.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased bounded draw via rejection on the top multiple of n.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

// splitmix64 finalizer; mixes the base seed with a stream tag.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string category_id(int index, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "C%0*d", width, index + 1);
  return buf;
}

std::string journal_id(int index, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "J%0*d", width, index + 1);
  return buf;
}

int digits(long long n) {
  int d = 1;
  while (n >= 10 && d < 18) {
    n /= 10;
    ++d;
  }
  return d;
}

}  // namespace

void SynthSpec::validate() const {
  if (n_categories < 2) throw ConfigError("synth spec needs at least 2 categories");
  if (journals_per_category < 1) throw ConfigError("synth spec needs at least 1 journal per category");
  if (!(multi_assign_fraction >= 0.0 && multi_assign_fraction <= 1.0)) {
    throw ConfigError("multi_assign_fraction must lie in [0, 1]");
  }
  if (edge_model == EdgeModel::SkewedPreferential && !(exponent > 0.0)) {
    throw ConfigError("preferential exponent must be positive");
  }
  if (years.empty()) throw ConfigError("synth spec needs at least one year");
  if (total_edges < 0) throw ConfigError("total_edges must be non-negative");
}

SynthOutput generate(const SynthSpec& spec) {
  spec.validate();

  SynthOutput out;
  const int n_journals = spec.n_categories * spec.journals_per_category;
  const int cat_width = digits(spec.n_categories);
  const int journal_width = digits(n_journals);

  std::vector<std::string> journals;
  journals.reserve(n_journals);
  for (int j = 0; j < n_journals; ++j) journals.push_back(journal_id(j, journal_width));

  for (int c = 0; c < spec.n_categories; ++c) {
    char name[64];
    std::snprintf(name, sizeof(name), "Category %0*d", cat_width, c + 1);
    out.categories.add_category(category_id(c, cat_width), name);
  }

  // Assignments: journal j's home category is j / journals_per_category;
  // a multi_assign_fraction slice gets one extra category.
  std::mt19937_64 assign_rng(derive_seed(spec.seed, 0xA551ULL));
  for (int j = 0; j < n_journals; ++j) {
    const int home = j / spec.journals_per_category;
    out.categories.assign(journals[j], category_id(home, cat_width));
    if (uniform_unit(assign_rng) < spec.multi_assign_fraction) {
      auto extra = static_cast<int>(uniform_below(assign_rng, spec.n_categories - 1));
      if (extra >= home) ++extra;
      out.categories.assign(journals[j], category_id(extra, cat_width));
    }
  }

  std::vector<int> years = spec.years;
  std::sort(years.begin(), years.end());
  years.erase(std::unique(years.begin(), years.end()), years.end());

  for (int year : years) {
    std::mt19937_64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(year)));

    // Publications first so their draws are independent of the edge count.
    for (int c = 0; c < spec.n_categories; ++c) {
      const Count base = 20 * spec.journals_per_category;
      const Count jitter = static_cast<Count>(uniform_below(rng, 10 * spec.journals_per_category + 1));
      out.publications.set(category_id(c, cat_width), year, base + jitter);
    }

    std::map<std::pair<int, int>, Count> counts;
    if (spec.edge_model == EdgeModel::Uniform) {
      for (std::int64_t e = 0; e < spec.total_edges; ++e) {
        const int citing = static_cast<int>(uniform_below(rng, n_journals));
        const int cited = static_cast<int>(uniform_below(rng, n_journals));
        ++counts[{citing, cited}];
      }
    } else {
      std::vector<Count> in_degree(n_journals, 0);
      std::vector<double> weight(n_journals, 1.0);  // (in_degree + 1)^exponent
      double weight_sum = static_cast<double>(n_journals);
      for (std::int64_t e = 0; e < spec.total_edges; ++e) {
        const int citing = static_cast<int>(uniform_below(rng, n_journals));
        double target = uniform_unit(rng) * weight_sum;
        int cited = n_journals - 1;
        for (int j = 0; j < n_journals; ++j) {
          target -= weight[j];
          if (target < 0.0) {
            cited = j;
            break;
          }
        }
        ++counts[{citing, cited}];
        ++in_degree[cited];
        weight_sum -= weight[cited];
        weight[cited] = std::pow(static_cast<double>(in_degree[cited]) + 1.0, spec.exponent);
        weight_sum += weight[cited];
      }
    }

    for (const auto& [pair, count] : counts) {
      out.edges.push_back({journals[pair.first], journals[pair.second], year, count});
    }
  }
  return out;
}

SynthSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed synth spec: ") + e.what());
  }

  SynthSpec spec;
  try {
    if (j.contains("n_categories")) spec.n_categories = j["n_categories"];
    if (j.contains("journals_per_category")) spec.journals_per_category = j["journals_per_category"];
    if (j.contains("multi_assign_fraction")) spec.multi_assign_fraction = j["multi_assign_fraction"];
    if (j.contains("edge_model")) {
      const std::string model = j["edge_model"];
      if (model == "uniform") {
        spec.edge_model = EdgeModel::Uniform;
      } else if (model == "preferential") {
        spec.edge_model = EdgeModel::SkewedPreferential;
      } else {
        throw ConfigError("edge_model must be \"uniform\" or \"preferential\", got \"" + model + "\"");
      }
    }
    if (j.contains("exponent")) spec.exponent = j["exponent"];
    if (j.contains("years")) spec.years = j["years"].get<std::vector<int>>();
    if (j.contains("seed")) spec.seed = j["seed"];
    if (j.contains("total_edges")) spec.total_edges = j["total_edges"];
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed synth spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::vector<std::string> write_dataset(const SynthOutput& data, const SynthSpec& spec,
                                       const std::string& directory) {
  const std::string stamp = "# rng=mt19937_64 seed=" + std::to_string(spec.seed) + "\n";

  std::string edges = stamp + "citing_journal,cited_journal,year,count\n";
  for (const CitationEdge& edge : data.edges) {
    edges += csv::join({edge.citing_journal, edge.cited_journal, std::to_string(edge.year),
                        std::to_string(edge.count)});
    edges.push_back('\n');
  }

  std::string assignments = stamp + "journal,category\n";
  for (const std::string& journal : data.categories.journals()) {
    for (std::size_t index : *data.categories.assignments(journal)) {
      assignments += csv::join({journal, data.categories.categories()[index]});
      assignments.push_back('\n');
    }
  }

  std::string universe = stamp + "category,display_name\n";
  for (std::size_t c = 0; c < data.categories.category_count(); ++c) {
    universe += csv::join({data.categories.categories()[c], data.categories.display_name(c)});
    universe.push_back('\n');
  }

  std::set<int> years(spec.years.begin(), spec.years.end());
  std::string publications = stamp + "category,year,publications\n";
  for (const std::string& category : data.categories.categories()) {
    for (int year : years) {
      if (auto count = data.publications.get(category, year)) {
        publications += csv::join({category, std::to_string(year), std::to_string(*count)});
        publications.push_back('\n');
      }
    }
  }

  const std::vector<std::pair<std::string, const std::string*>> files{
      {"edges.csv", &edges},
      {"journal_categories.csv", &assignments},
      {"categories.csv", &universe},
      {"publications.csv", &publications}};
  std::vector<std::string> names;
  for (const auto& [name, content] : files) {
    write_file(directory + "/" + name, *content);
    names.push_back(name);
  }
  return names;
}

}  // namespace scitrade::synth
