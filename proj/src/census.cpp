#include "cytk/census.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <thread>

namespace cytk {

namespace {

std::optional<Integer> parse_integer(const std::string& token) {
  Integer value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string join_types(const std::vector<SingularCurve>& curves) {
  std::string out;
  for (const auto& c : curves) {
    if (!out.empty()) out += ";";
    out += c.type.raw_string();
  }
  return out;
}

const char* bool_cell(bool b) { return b ? "true" : "false"; }

std::string optional_cell(const std::optional<bool>& b) { return b ? bool_cell(*b) : ""; }

bool keep_row(const RecordVerdict& v, RowFilter filter) {
  switch (filter) {
    case RowFilter::All: return true;
    case RowFilter::NotSmoothCodim2: return v.smooth_in_codim2 == false;
    case RowFilter::NotSmoothNoEdge: return v.smooth_in_codim2 == false && v.no_edge == true;
  }
  return true;
}

}  // namespace

ParseResult parse_database(std::istream& in) {
  ParseResult out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream tokens(line);
    std::vector<Integer> ints;
    std::string token;
    while (tokens >> token) {
      auto v = parse_integer(token);
      if (!v) break;
      ints.push_back(*v);
    }
    if (ints.empty()) {
      out.failures.push_back({number, "expected an integer degree"});
      continue;
    }
    if (std::any_of(ints.begin(), ints.end(), [](Integer v) { return v <= 0; })) {
      out.failures.push_back({number, "degree and weights must be positive"});
      continue;
    }
    const std::size_t count = ints.size() - 1;
    if (count != 4 && count != 5) {
      out.failures.push_back({number, "expected 4 or 5 weights, found " + std::to_string(count)});
      continue;
    }
    out.records.push_back({ints.front(), {ints.begin() + 1, ints.end()}, number});
  }
  return out;
}

ParseResult parse_database(const std::string& text) {
  std::istringstream in(text);
  return parse_database(in);
}

std::string to_string(Origin origin) { return origin == Origin::N3 ? "N3" : "N4"; }

NormalizedRecord normalize(const RawRecord& record) {
  const Integer d = record.degree;
  std::vector<Integer> w = record.weights;
  Origin origin = Origin::N4;
  if (w.size() == 4) {
    if (d % 2 != 0) throw NormalizationError("odd degree with four weights");
    if (std::find(w.begin(), w.end(), d / 2) != w.end())
      throw NormalizationError("trivial variable: a weight equals d/2");
    w.push_back(d / 2);
    origin = Origin::N3;
  } else if (w.size() != 5) {
    throw NormalizationError("expected 4 or 5 weights");
  }

  Integer sum = 0;
  for (Integer x : w) sum += x;
  if (sum != d)
    throw NormalizationError("degree " + std::to_string(d) + " differs from weight sum " + std::to_string(sum));

  try {
    return {WeightSystem(d, {w[0], w[1], w[2], w[3], w[4]}), origin, record.source_line};
  } catch (const std::invalid_argument& e) {
    throw NormalizationError(e.what());
  }
}

RawRecord denormalize(const NormalizedRecord& record) {
  const auto& w = record.ws.weights();
  RawRecord out{record.ws.degree(), {w.begin(), w.end()}, record.source_line};
  if (record.origin == Origin::N3) out.weights.pop_back();
  return out;
}

RecordVerdict evaluate_record(const NormalizedRecord& record) {
  const WeightSystem& ws = record.ws;
  RecordVerdict v{record.source_line, ws, record.origin, is_wellformed_hypersurface(ws), is_quasismooth(ws),
                  is_calabi_yau_degree(ws), {}, {}, {}, {}};
  if (v.quasismooth) {
    const auto locus = singular_locus(record.ws);
    v.smooth_in_codim2 = is_smooth_in_codim2(locus);
    v.no_edge = locus.contained_edges.empty();
    v.curves = locus.singular_curves;
  }
  if (v.calabi_yau_degree) v.c2_bound = c2_lower_bound(record.ws);
  return v;
}

CensusResult run_census(const std::vector<NormalizedRecord>& records, const CensusOptions& options) {
  std::vector<std::optional<RecordVerdict>> slots(records.size());

  std::size_t jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = std::min(jobs, std::max<std::size_t>(records.size(), 1));

  // Contiguous blocks per worker; each slot is written by exactly one thread.
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) slots[i] = evaluate_record(records[i]);
  };
  if (jobs <= 1) {
    work(0, records.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (records.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < records.size(); begin += chunk)
      workers.emplace_back(work, begin, std::min(begin + chunk, records.size()));
  }

  CensusResult result;
  auto& summary = result.summary;
  for (auto& slot : slots) {
    RecordVerdict& v = *slot;
    ++summary.total;
    if (!v.wellformed) summary.failures.push_back({v.source_line, "not wellformed"});
    if (!v.quasismooth) summary.failures.push_back({v.source_line, "not quasismooth"});
    if (v.smooth_in_codim2 == false) {
      ++summary.not_smooth_codim2;
      if (v.no_edge == true) ++summary.not_smooth_codim2_and_no_edge;
    }
    if (keep_row(v, options.rows)) result.verdicts.push_back(std::move(v));
  }
  return result;
}

CensusResult run_census(std::istream& in, const CensusOptions& options) {
  ParseResult parsed = parse_database(in);
  std::vector<NormalizedRecord> normalized;
  std::vector<LineFailure> failures = std::move(parsed.failures);
  for (const auto& raw : parsed.records) {
    try {
      normalized.push_back(normalize(raw));
    } catch (const NormalizationError& e) {
      failures.push_back({raw.source_line, e.what()});
    }
  }
  CensusResult result = run_census(normalized, options);
  failures.insert(failures.end(), result.summary.failures.begin(), result.summary.failures.end());
  std::stable_sort(failures.begin(), failures.end(),
                   [](const LineFailure& a, const LineFailure& b) { return a.line < b.line; });
  result.summary.failures = std::move(failures);
  return result;
}

std::string verdicts_csv(const CensusResult& result) {
  std::ostringstream os;
  os << "line,d,w0,w1,w2,w3,w4,wellformed,quasismooth,cy_degree,smooth_codim2,no_edge,curves\n";
  for (const auto& v : result.verdicts) {
    os << v.source_line << ',' << v.ws.degree();
    for (Integer w : v.ws.weights()) os << ',' << w;
    os << ',' << bool_cell(v.wellformed) << ',' << bool_cell(v.quasismooth) << ','
       << bool_cell(v.calabi_yau_degree) << ',' << optional_cell(v.smooth_in_codim2) << ','
       << optional_cell(v.no_edge) << ',' << join_types(v.curves) << '\n';
  }
  return os.str();
}

}  // namespace cytk
