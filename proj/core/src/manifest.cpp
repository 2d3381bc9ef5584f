#include "scitrade/manifest.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scitrade/error.hpp"

namespace scitrade {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ValidationError("short write: " + path);
}

std::string manifest_to_json(const RunManifest& manifest, int indent) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& input : manifest.inputs) {
    inputs.push_back({{"role", input.role}, {"path", input.path}, {"sha256", input.sha256}});
  }
  nlohmann::json j{{"tool", manifest.tool},
                   {"version", manifest.version},
                   {"inputs", inputs},
                   {"years", manifest.years},
                   {"counting_mode", manifest.counting_mode}};
  if (!manifest.journal_policy.empty()) j["journal_policy"] = manifest.journal_policy;
  if (!manifest.config_json.empty()) j["config"] = nlohmann::json::parse(manifest.config_json);
  return j.dump(indent);
}

RunManifest manifest_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  RunManifest manifest;
  manifest.tool = j.value("tool", "scitrade");
  manifest.version = j.value("version", "");
  manifest.counting_mode = j.value("counting_mode", "multiple");
  manifest.journal_policy = j.value("journal_policy", "");
  if (j.contains("config")) manifest.config_json = j["config"].dump();
  if (j.contains("years")) manifest.years = j["years"].get<std::vector<int>>();
  if (j.contains("inputs")) {
    for (const auto& input : j["inputs"]) {
      manifest.inputs.push_back({input.value("role", ""), input.value("path", ""),
                                 input.value("sha256", "")});
    }
  }
  return manifest;
}

}  // namespace scitrade
