#pragma once

// Batch evaluation of weight-system lists (Kreuzer-Skarke style data).
//
// Input is whitespace-separated integers, one record per line: the degree
// followed by four or five weights. Lines starting with '#' are comments and
// anything after the last leading integer is ignored, so lines such as
//
//   1734 91 96 102 578
//   120 3 7 20 40 50  ; trailing notes
//
// are both accepted. Four-weight records get the extra weight d/2.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cytk/hypersurface.hpp"

namespace cytk {

struct RawRecord {
  Integer degree = 0;
  std::vector<Integer> weights;
  std::size_t source_line = 0;
};

struct LineFailure {
  std::size_t line = 0;
  std::string reason;

  friend bool operator==(const LineFailure&, const LineFailure&) = default;
};

struct ParseResult {
  std::vector<RawRecord> records;
  std::vector<LineFailure> failures;
};

ParseResult parse_database(std::istream& in);
ParseResult parse_database(const std::string& text);

enum class Origin { N3, N4 };

std::string to_string(Origin origin);

struct NormalizedRecord {
  WeightSystem ws;
  Origin origin;
  std::size_t source_line = 0;
};

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NormalizationError for odd degree with four weights, a weight equal
/// to d/2 among four weights, a degree different from the weight sum, or an
/// invalid weight system.
NormalizedRecord normalize(const RawRecord& record);

/// Inverse of normalize: drops the appended d/2 for N3-origin records.
RawRecord denormalize(const NormalizedRecord& record);

struct RecordVerdict {
  std::size_t source_line = 0;
  WeightSystem ws;
  Origin origin = Origin::N4;
  bool wellformed = false;
  bool quasismooth = false;
  bool calabi_yau_degree = false;
  // Set only for quasismooth records.
  std::optional<bool> smooth_in_codim2;
  std::optional<bool> no_edge;
  std::vector<SingularCurve> curves;
  // Set only when the degree equals the weight sum.
  std::optional<C2BoundReport> c2_bound;
};

RecordVerdict evaluate_record(const NormalizedRecord& record);

struct CensusSummary {
  std::size_t total = 0;
  std::size_t not_smooth_codim2 = 0;
  std::size_t not_smooth_codim2_and_no_edge = 0;
  std::vector<LineFailure> failures;
};

struct CensusResult {
  CensusSummary summary;
  std::vector<RecordVerdict> verdicts;  // input order
};

enum class RowFilter { All, NotSmoothCodim2, NotSmoothNoEdge };

struct CensusOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 1;
  /// Restricts the verdict table, never the summary counts.
  RowFilter rows = RowFilter::All;
};

CensusResult run_census(const std::vector<NormalizedRecord>& records,
                        const CensusOptions& options = {});

/// Parse, normalize and evaluate; parse and normalization failures are
/// merged into summary.failures in line order.
CensusResult run_census(std::istream& in, const CensusOptions& options = {});

/// Header plus one row per verdict:
/// line,d,w0..w4,wellformed,quasismooth,cy_degree,smooth_codim2,no_edge,curves
std::string verdicts_csv(const CensusResult& result);

}  // namespace cytk
