#include "scitrade/archive.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scitrade/csv.hpp"

namespace scitrade {

std::string archive_sidecar_path(const std::string& csv_path) {
  if (csv_path.size() >= 4 && csv_path.ends_with(".csv")) {
    return csv_path.substr(0, csv_path.size() - 4) + ".json";
  }
  return csv_path + ".json";
}

void write_matrix_archive(const FieldFlowMatrix& matrix, const RunManifest& manifest,
                          const std::string& csv_path) {
  std::string body = "citing_field,cited_field,count\n";
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Count count = matrix.at(i, j);
      if (count == 0) continue;
      body += csv::join({matrix.field(i), matrix.field(j), std::to_string(count)});
      body.push_back('\n');
    }
  }
  write_file(csv_path, body);

  nlohmann::json sidecar{{"format", "scitrade.matrix/1"},
                         {"year", matrix.year()},
                         {"fields", matrix.fields()},
                         {"manifest", nlohmann::json::parse(manifest_to_json(manifest))}};
  write_file(archive_sidecar_path(csv_path), sidecar.dump(2) + "\n");
}

MatrixArchive read_matrix_archive(const std::string& csv_path) {
  nlohmann::json sidecar;
  try {
    sidecar = nlohmann::json::parse(read_file(archive_sidecar_path(csv_path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed matrix sidecar " + archive_sidecar_path(csv_path) + ": " + e.what());
  }
  if (sidecar.value("format", "") != "scitrade.matrix/1") {
    throw ValidationError("not a matrix archive sidecar: " + archive_sidecar_path(csv_path));
  }

  MatrixArchive archive;
  archive.matrix = FieldFlowMatrix(sidecar.at("year").get<int>(),
                                   sidecar.at("fields").get<std::vector<std::string>>());
  if (sidecar.contains("manifest")) {
    archive.manifest = manifest_from_json(sidecar["manifest"].dump());
  }

  std::istringstream in(read_file(csv_path));
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw ParseError("empty matrix file: missing header");
  if (fields != std::vector<std::string>{"citing_field", "cited_field", "count"}) {
    throw ParseError("unexpected matrix header in " + csv_path, reader.line_number());
  }
  while (reader.next(fields)) {
    const std::size_t line = reader.line_number();
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line);
    }
    const auto citing = archive.matrix.index_of(fields[0]);
    const auto cited = archive.matrix.index_of(fields[1]);
    if (!citing || !cited) {
      throw ValidationError("line " + std::to_string(line) + ": field not in the declared universe: " +
                            (!citing ? fields[0] : fields[1]));
    }
    Count count = 0;
    auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (ec != std::errc{} || ptr != fields[2].data() + fields[2].size()) {
      throw ParseError("expected integer count, got \"" + fields[2] + "\"", line);
    }
    if (count < 0) {
      throw ValidationError("line " + std::to_string(line) + ": negative cell count");
    }
    archive.matrix.add(*citing, *cited, count);
  }
  return archive;
}

}  // namespace scitrade
