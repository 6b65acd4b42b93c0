#include "genus/survey.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "genus/graph6.hpp"
#include "genus/polynomial.hpp"
#include "json.hpp"

namespace genus {

namespace {

constexpr std::size_t kMaxSkipNotes = 20;
constexpr const char* kCheckpointMagic = "genus-survey-checkpoint v1";

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

SurveyRecord analyze_catalog_line(const std::string& text, const SurveyOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  Graph g = parse_graph6(text);
  if (!g.is_regular(3)) throw validation_error("not a cubic graph");

  EnumerationOptions eo;
  eo.budget = opt.budget;
  eo.force = opt.force;
  eo.workers = 1;  // parallelism lives at the catalog-line level
  GenusDistribution dist = genus_distribution(g, eo);
  AnalysisReport report = analyze(genus_polynomial(dist), opt.roots);

  SurveyRecord r;
  r.graph6 = text;
  r.order = g.vertex_count();
  r.distribution = std::move(dist);
  r.log_concave = report.log_concave;
  r.real_rooted = report.real_rooted;
  r.cone_violation = !report.cone_violations.empty();
  r.non_lc_quadratic = !report.non_lc_quadratics.empty();
  r.compute_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  return r;
}

struct LineTask {
  std::uint64_t seq = 0;
  std::uint64_t line_index = 0;
  std::string text;
};

enum class FailKind { kNone, kGeneric, kBudget };

struct LineOutcome {
  std::uint64_t line_index = 0;
  bool blank = false;
  bool has_record = false;
  SurveyRecord record;
  FailKind fail = FailKind::kNone;
  std::string fail_text;
  std::string budget_required;
};

// Shared state of the producer / worker-pool / in-order-emitter pipeline.
struct Pipeline {
  std::mutex mu;
  std::condition_variable task_ready;
  std::condition_variable outcome_ready;
  std::deque<LineTask> pending;
  std::map<std::uint64_t, LineOutcome> done;
  bool closed = false;
  bool abort = false;
};

void worker_main(Pipeline& pl, const SurveyOptions& opt) {
  for (;;) {
    LineTask task;
    {
      std::unique_lock<std::mutex> lk(pl.mu);
      pl.task_ready.wait(lk, [&] { return pl.abort || pl.closed || !pl.pending.empty(); });
      if (pl.abort) return;
      if (pl.pending.empty()) {
        if (pl.closed) return;
        continue;
      }
      task = std::move(pl.pending.front());
      pl.pending.pop_front();
    }

    LineOutcome oc;
    oc.line_index = task.line_index;
    if (task.text.empty()) {
      oc.blank = true;
    } else {
      try {
        oc.record = analyze_catalog_line(task.text, opt);
        oc.has_record = true;
      } catch (const budget_error& e) {
        oc.fail = FailKind::kBudget;
        oc.fail_text = e.what();
        oc.budget_required = e.required_count();
      } catch (const std::exception& e) {
        oc.fail = FailKind::kGeneric;
        oc.fail_text = e.what();
      }
    }

    {
      std::lock_guard<std::mutex> lk(pl.mu);
      pl.done.emplace(task.seq, std::move(oc));
    }
    pl.outcome_ready.notify_all();
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool parse_bool_text(const std::string& s, const char* field) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw validation_error(std::string("bad boolean for ") + field + ": " + s);
}

std::string join_counts(const GenusDistribution& d, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (i > 0) out << sep;
    out << d.counts[i].str();
  }
  return out.str();
}

struct CheckpointData {
  std::uint64_t catalog_hash = 0;
  std::string format;
  std::uint64_t lines_done = 0;
  std::uint64_t records_done = 0;
};

void write_checkpoint_atomic(const std::string& path, const CheckpointData& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw checkpoint_error("cannot write checkpoint " + tmp);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(cp.catalog_hash));
    out << kCheckpointMagic << '\n'
        << "catalog " << hex << '\n'
        << "format " << cp.format << '\n'
        << "lines_done " << cp.lines_done << '\n'
        << "records_done " << cp.records_done << '\n';
    if (!out) throw checkpoint_error("cannot write checkpoint " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw checkpoint_error("cannot move checkpoint into place at " + path);
  }
}

CheckpointData read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw checkpoint_error("cannot open checkpoint " + path);
  CheckpointData cp;
  std::string line;
  if (!std::getline(in, line) || trimmed(line) != kCheckpointMagic) {
    throw checkpoint_error("unrecognized checkpoint header in " + path);
  }
  bool have_hash = false, have_format = false, have_lines = false, have_records = false;
  while (std::getline(in, line)) {
    std::istringstream ls(trimmed(line));
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "catalog") {
      std::string hex;
      if (!(ls >> hex)) throw checkpoint_error("bad catalog hash in " + path);
      cp.catalog_hash = std::stoull(hex, nullptr, 16);
      have_hash = true;
    } else if (key == "format") {
      if (!(ls >> cp.format)) throw checkpoint_error("bad format in " + path);
      have_format = true;
    } else if (key == "lines_done") {
      if (!(ls >> cp.lines_done)) throw checkpoint_error("bad lines_done in " + path);
      have_lines = true;
    } else if (key == "records_done") {
      if (!(ls >> cp.records_done)) throw checkpoint_error("bad records_done in " + path);
      have_records = true;
    } else {
      throw checkpoint_error("unknown checkpoint field '" + key + "' in " + path);
    }
  }
  if (!(have_hash && have_format && have_lines && have_records)) {
    throw checkpoint_error("incomplete checkpoint " + path);
  }
  return cp;
}

}  // namespace

namespace {

bool has_repeated_root(const GenusDistribution& d) {
  Polynomial p = Polynomial::from_coeffs(d.counts);
  if (p.degree() <= 1) return false;
  return squarefree_part(p).degree() != p.degree();
}

}  // namespace

void SurveySummary::add(const SurveyRecord& r) {
  OrderCounts& oc = per_order[r.order];
  ++oc.total;
  // Recomputed from the serialized coefficients (not carried as a record
  // field), so summaries rebuilt from an existing report on resume agree
  // with fresh ones.
  const bool repeated = has_repeated_root(r.distribution);
  if (!r.real_rooted) ++oc.non_real_rooted;
  if (repeated) ++oc.repeated_root;
  if (!r.real_rooted || repeated) ++oc.census;
  if (r.cone_violation) ++oc.cone_violation;
  if (!r.log_concave) {
    ++oc.non_log_concave;
    lc_violations.push_back(r.graph6);
  }
  ++records;
}

void SurveySummary::merge(const SurveySummary& other) {
  for (const auto& [order, oc] : other.per_order) {
    OrderCounts& mine = per_order[order];
    mine.total += oc.total;
    mine.non_real_rooted += oc.non_real_rooted;
    mine.repeated_root += oc.repeated_root;
    mine.census += oc.census;
    mine.cone_violation += oc.cone_violation;
    mine.non_log_concave += oc.non_log_concave;
  }
  records += other.records;
  lines_consumed += other.lines_consumed;
  skipped += other.skipped;
  lc_violations.insert(lc_violations.end(), other.lc_violations.begin(),
                       other.lc_violations.end());
  for (const std::string& note : other.skip_notes) {
    if (skip_notes.size() >= kMaxSkipNotes) break;
    skip_notes.push_back(note);
  }
}

SurveySummary run_survey(
    std::istream& catalog,
    const std::function<void(const SurveyRecord&, std::uint64_t line_index)>& sink,
    const SurveyOptions& options) {
  if (options.stop_after && *options.stop_after == 0) return {};
  const unsigned worker_count =
      options.workers != 0 ? options.workers
                           : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t window = std::max<std::uint64_t>(std::uint64_t(4) * worker_count, 16);

  Pipeline pl;
  SurveySummary summary;
  std::exception_ptr failure;
  std::uint64_t seq_issued = 0;
  std::uint64_t seq_emitted = 0;
  bool stopped = false;  // stop_after reached

  std::vector<std::thread> threads;
  threads.reserve(worker_count);
  for (unsigned i = 0; i < worker_count; ++i) {
    threads.emplace_back(worker_main, std::ref(pl), std::cref(options));
  }
  auto shut_down = [&] {
    {
      std::lock_guard<std::mutex> lk(pl.mu);
      pl.closed = true;
      if (failure || stopped) pl.abort = true;
    }
    pl.task_ready.notify_all();
    for (std::thread& t : threads) t.join();
  };

  // Emits the outcome with sequence number seq_emitted; blocks until a worker
  // deposits it. Strict failures and sink exceptions land in `failure`.
  auto emit_next = [&] {
    LineOutcome oc;
    {
      std::unique_lock<std::mutex> lk(pl.mu);
      pl.outcome_ready.wait(lk, [&] { return pl.done.count(seq_emitted) != 0; });
      auto it = pl.done.find(seq_emitted);
      oc = std::move(it->second);
      pl.done.erase(it);
    }
    ++seq_emitted;
    pl.task_ready.notify_all();  // window space freed
    ++summary.lines_consumed;
    if (oc.blank) return;
    if (oc.fail != FailKind::kNone) {
      const std::string where = "line " + std::to_string(oc.line_index + 1) + ": " + oc.fail_text;
      if (options.strict) {
        if (oc.fail == FailKind::kBudget) {
          failure = std::make_exception_ptr(budget_error(where, oc.budget_required));
        } else {
          failure = std::make_exception_ptr(validation_error(where));
        }
        return;
      }
      ++summary.skipped;
      if (summary.skip_notes.size() < kMaxSkipNotes) summary.skip_notes.push_back(where);
      return;
    }
    summary.add(oc.record);
    try {
      sink(oc.record, oc.line_index);
    } catch (...) {
      failure = std::current_exception();
      return;
    }
    if (options.progress) {
      options.progress(static_cast<std::uint64_t>(summary.records),
                       static_cast<std::uint64_t>(summary.lines_consumed));
    }
    if (options.stop_after &&
        static_cast<std::uint64_t>(summary.records) >= *options.stop_after) {
      stopped = true;
    }
  };

  try {
    std::string raw;
    std::uint64_t line_no = 0;
    while (!failure && !stopped && std::getline(catalog, raw)) {
      const std::uint64_t idx = line_no++;
      if (idx < options.start_line) continue;
      {
        std::lock_guard<std::mutex> lk(pl.mu);
        pl.pending.push_back(LineTask{seq_issued, idx, trimmed(raw)});
      }
      ++seq_issued;
      pl.task_ready.notify_one();
      while (!failure && !stopped && seq_issued - seq_emitted >= window) emit_next();
    }
    while (!failure && !stopped && seq_emitted < seq_issued) emit_next();
  } catch (...) {
    shut_down();
    throw;
  }
  shut_down();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

std::string csv_header() {
  return "graph6,n,coefficients,log_concave,real_rooted,cone_violation,non_lc_quadratic";
}

std::string to_csv_line(const SurveyRecord& r) {
  std::ostringstream out;
  out << r.graph6 << ',' << r.order << ',' << join_counts(r.distribution, ';') << ','
      << bool_text(r.log_concave) << ',' << bool_text(r.real_rooted) << ','
      << bool_text(r.cone_violation) << ',' << bool_text(r.non_lc_quadratic);
  return out.str();
}

std::string to_json_line(const SurveyRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const BigInt& c : r.distribution.counts) coeffs.push_back(c.str());
  j["distribution"] = std::move(coeffs);
  j["log_concave"] = r.log_concave;
  j["real_rooted"] = r.real_rooted;
  j["cone_violation"] = r.cone_violation;
  j["non_lc_quadratic"] = r.non_lc_quadratic;
  j["compute_millis"] = r.compute_millis;
  return j.dump();
}

SurveyRecord record_from_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (fields.size() != 7) {
    throw validation_error("expected 7 CSV fields, got " + std::to_string(fields.size()));
  }
  SurveyRecord r;
  r.graph6 = fields[0];
  try {
    r.order = std::stoi(fields[1]);
  } catch (const std::exception&) {
    throw validation_error("bad order field: " + fields[1]);
  }
  std::istringstream cs(fields[2]);
  std::string piece;
  while (std::getline(cs, piece, ';')) {
    try {
      r.distribution.counts.emplace_back(piece);
    } catch (const std::exception&) {
      throw validation_error("bad coefficient: " + piece);
    }
  }
  if (r.distribution.counts.empty()) throw validation_error("empty coefficient list");
  r.log_concave = parse_bool_text(fields[3], "log_concave");
  r.real_rooted = parse_bool_text(fields[4], "real_rooted");
  r.cone_violation = parse_bool_text(fields[5], "cone_violation");
  r.non_lc_quadratic = parse_bool_text(fields[6], "non_lc_quadratic");
  return r;
}

SurveyRecord record_from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("bad JSON record: ") + e.what());
  }
  try {
    SurveyRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.order = j.at("order").get<int>();
    for (const auto& c : j.at("distribution")) {
      r.distribution.counts.emplace_back(c.get<std::string>());
    }
    r.log_concave = j.at("log_concave").get<bool>();
    r.real_rooted = j.at("real_rooted").get<bool>();
    r.cone_violation = j.at("cone_violation").get<bool>();
    r.non_lc_quadratic = j.at("non_lc_quadratic").get<bool>();
    r.compute_millis = j.value("compute_millis", std::int64_t(0));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("bad JSON record: ") + e.what());
  }
}

std::string format_summary(const SurveySummary& s) {
  std::ostringstream out;
  for (const auto& [order, oc] : s.per_order) {
    out << order << ": " << oc.census << " / " << oc.total << '\n';
  }
  for (const std::string& g6 : s.lc_violations) {
    out << "LC-VIOLATION " << g6 << '\n';
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::uint64_t h = 14695981039346656037ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
    if (!in) break;
  }
  return h;
}

FileSurveyResult run_survey_file(const std::string& catalog_path,
                                 const std::string& output_path,
                                 ReportFormat format,
                                 const SurveyOptions& options,
                                 const std::optional<std::string>& checkpoint_path,
                                 bool resume) {
  const std::uint64_t catalog_hash = fnv1a64_file(catalog_path);
  const std::string format_name = format == ReportFormat::kCsv ? "csv" : "jsonl";

  FileSurveyResult result;
  std::uint64_t lines_done = 0;
  std::uint64_t records_done = 0;

  if (resume) {
    if (!checkpoint_path) throw checkpoint_error("resume needs a checkpoint path");
    CheckpointData cp = read_checkpoint(*checkpoint_path);
    if (cp.catalog_hash != catalog_hash) {
      throw checkpoint_error("catalog content changed since the checkpoint was written");
    }
    if (cp.format != format_name) {
      throw checkpoint_error("checkpoint was written for format " + cp.format +
                             ", not " + format_name);
    }
    lines_done = cp.lines_done;
    records_done = cp.records_done;

    // The existing report must hold exactly the checkpointed record count;
    // its records seed the summary so it covers the whole output.
    std::ifstream existing(output_path);
    if (!existing && records_done > 0) {
      throw checkpoint_error("cannot open existing report " + output_path);
    }
    std::uint64_t found = 0;
    std::string line;
    bool saw_header = false;
    while (existing && std::getline(existing, line)) {
      if (trimmed(line).empty()) continue;
      if (format == ReportFormat::kCsv && !saw_header) {
        if (trimmed(line) != csv_header()) {
          throw checkpoint_error("existing report is missing the CSV header");
        }
        saw_header = true;
        continue;
      }
      SurveyRecord r;
      try {
        r = format == ReportFormat::kCsv ? record_from_csv(trimmed(line))
                                         : record_from_json(line);
      } catch (const std::exception& e) {
        throw checkpoint_error(std::string("existing report is corrupt: ") + e.what());
      }
      result.summary.add(r);
      ++found;
    }
    if (format == ReportFormat::kCsv && records_done > 0 && !saw_header) {
      throw checkpoint_error("existing report is missing the CSV header");
    }
    if (found != records_done) {
      throw checkpoint_error("existing report holds " + std::to_string(found) +
                             " records but the checkpoint expects " +
                             std::to_string(records_done));
    }
    result.summary.lines_consumed = static_cast<std::int64_t>(lines_done);
    result.resumed = true;
  }

  std::ofstream out(output_path,
                    resume ? (std::ios::out | std::ios::app) : (std::ios::out | std::ios::trunc));
  if (!out) throw validation_error("cannot open report " + output_path + " for writing");
  if (!resume && format == ReportFormat::kCsv) out << csv_header() << '\n';

  SurveyOptions run_options = options;
  run_options.start_line = lines_done;

  auto sink = [&](const SurveyRecord& r, std::uint64_t line_index) {
    out << (format == ReportFormat::kCsv ? to_csv_line(r) : to_json_line(r)) << '\n';
    out.flush();
    if (!out) throw validation_error("write to " + output_path + " failed");
    ++records_done;
    lines_done = line_index + 1;
    if (checkpoint_path) {
      write_checkpoint_atomic(
          *checkpoint_path,
          CheckpointData{catalog_hash, format_name, lines_done, records_done});
    }
  };

  std::ifstream catalog(catalog_path);
  if (!catalog) throw validation_error("cannot open " + catalog_path);
  SurveySummary fresh = run_survey(catalog, sink, run_options);
  result.summary.merge(fresh);
  result.records_total = records_done;
  return result;
}

}  // namespace genus
