#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus/analysis.hpp"
#include "genus/embedding.hpp"
#include "genus/roots.hpp"

namespace genus {

enum class ReportFormat { kCsv, kJsonLines };

// One catalog graph, fully analyzed.
struct SurveyRecord {
  std::string graph6;
  int order = 0;
  GenusDistribution distribution;
  bool log_concave = false;
  bool real_rooted = false;
  bool cone_violation = false;
  bool non_lc_quadratic = false;
  std::int64_t compute_millis = 0;
};

struct OrderCounts {
  std::int64_t total = 0;
  // At least one root strictly off the real axis (exact, Sturm-decided).
  std::int64_t non_real_rooted = 0;
  // Genus polynomial is not square-free (has a repeated root).
  std::int64_t repeated_root = 0;
  // Census column: polynomials that are not simple-real-rooted, i.e. have a
  // non-real root or a repeated one. A double real root sits on the boundary
  // of real-rootedness (a one-ulp coefficient perturbation splits it into a
  // conjugate pair ~sqrt(eps) off the axis), so a census of "roots leaving
  // the real axis" robustly includes these; is_real_rooted itself stays
  // exact and counts them as real-rooted.
  std::int64_t census = 0;
  std::int64_t cone_violation = 0;
  std::int64_t non_log_concave = 0;
};

struct SurveySummary {
  std::map<int, OrderCounts> per_order;
  std::int64_t records = 0;
  std::int64_t lines_consumed = 0;
  std::int64_t skipped = 0;
  // graph6 strings of any log-concavity violations: reported loudly, never
  // silently asserted away.
  std::vector<std::string> lc_violations;
  // First few skip diagnostics (line number, reason).
  std::vector<std::string> skip_notes;

  void add(const SurveyRecord& r);
  void merge(const SurveySummary& other);
};

struct SurveyOptions {
  // Workers parallelize across catalog lines (the work unit is one graph);
  // enumeration inside one graph stays sequential here. 0 = hardware threads.
  unsigned workers = 0;
  // strict: any line that fails to parse into a connected cubic graph within
  // budget aborts the survey (with its line number). Otherwise such lines are
  // skipped and counted.
  bool strict = true;
  std::uint64_t budget = std::uint64_t(1) << 26;
  bool force = false;
  RootOptions roots;
  // Stop after this many records (simulates an interrupted run; the
  // checkpoint then points mid-catalog).
  std::optional<std::uint64_t> stop_after;
  // Lines to skip before processing (resume support).
  std::uint64_t start_line = 0;
  // Optional progress hook: (records emitted, lines consumed).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Streams catalog lines (one graph6 graph per line) through a worker pool and
// hands finished records to `sink` in input order: a producer feeds a bounded
// window, workers analyze, a single reporter emits in sequence. Record
// content is a pure function of the catalog line, so output does not depend
// on the worker count. `line_index` is the 0-based catalog line the record
// came from.
SurveySummary run_survey(
    std::istream& catalog,
    const std::function<void(const SurveyRecord&, std::uint64_t line_index)>& sink,
    const SurveyOptions& options = {});

// Record serialization. CSV columns:
//   graph6,n,coefficients,log_concave,real_rooted,cone_violation,non_lc_quadratic
// with the distribution semicolon-joined ascending. JSON-lines mirrors
// SurveyRecord field for field (coefficients as decimal strings; includes
// compute_millis, which is wall-clock and so not byte-deterministic).
std::string csv_header();
std::string to_csv_line(const SurveyRecord& r);
std::string to_json_line(const SurveyRecord& r);
SurveyRecord record_from_csv(const std::string& line);
SurveyRecord record_from_json(const std::string& line);

// Census table, one line per order: "<n>: <census> / <total>", followed by
// loud LC-VIOLATION lines if any occurred.
std::string format_summary(const SurveySummary& s);

// FNV-1a 64-bit content hashes (checkpoint integrity).
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::string& path);

struct FileSurveyResult {
  SurveySummary summary;
  std::uint64_t records_total = 0;
  bool resumed = false;
};

// File-level driver with checkpoint/resume. The checkpoint (plain text,
// written atomically via write-temp-then-rename after every record) stores
// the catalog content hash, the report format, and the counts of fully
// processed lines and records. Resuming verifies the hash and that the
// existing report holds exactly the checkpointed record count, then continues
// appending; a finished checkpoint makes resume a no-op. The summary always
// covers the whole report (existing records are re-read, not recomputed). A
// mismatch throws checkpoint_error.
FileSurveyResult run_survey_file(const std::string& catalog_path,
                                 const std::string& output_path,
                                 ReportFormat format,
                                 const SurveyOptions& options,
                                 const std::optional<std::string>& checkpoint_path,
                                 bool resume);

}  // namespace genus
