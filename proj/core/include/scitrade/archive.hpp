#pragma once

#include <string>

#include "scitrade/manifest.hpp"
#include "scitrade/types.hpp"

namespace scitrade {

/// A flow matrix on disk: a sparse CSV of nonzero cells
/// (citing_field,cited_field,count) plus a JSON sidecar holding the year,
/// the ordered field universe and the run manifest. The pair is diff-able
/// and loss-free for integer counts; zero cells are implied by the
/// universe.
struct MatrixArchive {
  FieldFlowMatrix matrix;
  RunManifest manifest;
};

/// Sidecar path for a matrix CSV path (.csv -> .json).
std::string archive_sidecar_path(const std::string& csv_path);

/// Writes `<csv_path>` and its sidecar.
void write_matrix_archive(const FieldFlowMatrix& matrix, const RunManifest& manifest,
                          const std::string& csv_path);

/// Loads a matrix archive given the CSV path. Throws ParseError /
/// ValidationError on malformed content, naming the offending line.
MatrixArchive read_matrix_archive(const std::string& csv_path);

}  // namespace scitrade
