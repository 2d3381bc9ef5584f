#pragma once

#include <string>
#include <vector>

namespace scitrade {

/// Reproducibility record embedded in every JSON report: which inputs (by
/// content digest) and which settings produced an output. Carries no
/// timestamps, so reruns with equal inputs serialize identically.
struct RunManifest {
  struct Input {
    std::string role;  // "edges", "category_map", ...
    std::string path;
    std::string sha256;
  };

  std::string tool = "scitrade";
  std::string version;
  std::vector<Input> inputs;
  std::vector<int> years;
  std::string counting_mode = "multiple";  // journals credit all their categories
  std::string journal_policy;              // "strict" | "lenient" | ""
  std::string config_json;                 // verbatim config body, when one was given
};

/// Hex SHA-256 of a buffer.
std::string sha256_hex(std::string_view data);

/// Hex SHA-256 of a file's bytes. Throws ValidationError when unreadable.
std::string sha256_file(const std::string& path);

/// Reads a whole file. Throws ValidationError naming the path when missing.
std::string read_file(const std::string& path);

/// Writes a whole file, replacing any previous content.
void write_file(const std::string& path, std::string_view content);

std::string manifest_to_json(const RunManifest& manifest, int indent = 2);
RunManifest manifest_from_json(const std::string& json_text);

}  // namespace scitrade
