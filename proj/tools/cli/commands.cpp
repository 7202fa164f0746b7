#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/eventually_periodic.hpp"
#include "hankel_lab/period.hpp"
#include "hankel_lab/reduction.hpp"
#include "hankel_lab/series.hpp"
#include "hankel_lab/structure.hpp"
#include "json.hpp"
#include "table1_golden.hpp"

namespace hankel_lab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a command produced, before it is rendered in the requested format.
struct Document {
  std::vector<std::pair<std::string, std::string>> fields;
  std::optional<Table> table;
  Json json = Json::object();
};

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_plain(const Document& doc) {
  std::ostringstream os;
  for (const auto& [key, value] : doc.fields) {
    os << key << ": " << value << "\n";
  }
  if (!doc.table) return os.str();
  const Table& t = *doc.table;
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << "\n";
  };
  if (!doc.fields.empty()) os << "\n";
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

std::string render_csv(const Document& doc) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_cell(row[i]);
    }
    os << "\n";
  };
  if (doc.table) {
    emit(doc.table->header);
    for (const auto& row : doc.table->rows) emit(row);
  } else {
    emit({"field", "value"});
    for (const auto& [key, value] : doc.fields) emit({key, value});
  }
  return os.str();
}

std::string render_markdown(const Document& doc) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
  };
  auto rule = [&](std::size_t columns) {
    os << "|";
    for (std::size_t i = 0; i < columns; ++i) os << " --- |";
    os << "\n";
  };
  if (!doc.fields.empty()) {
    emit({"field", "value"});
    rule(2);
    for (const auto& [key, value] : doc.fields) emit({key, "`" + value + "`"});
  }
  if (doc.table) {
    if (!doc.fields.empty()) os << "\n";
    emit(doc.table->header);
    rule(doc.table->header.size());
    for (const auto& row : doc.table->rows) emit(row);
  }
  return os.str();
}

std::string render(const Document& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return doc.json.dump(2) + "\n";
    case OutputFormat::kCsv:
      return render_csv(doc);
    case OutputFormat::kMarkdown:
      return render_markdown(doc);
    case OutputFormat::kPlain:
      break;
  }
  return render_plain(doc);
}

Json json_ints(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

Json report_json(const PeriodReport& report) { return Json::parse(to_json(report)); }

AvoidingSet require_set(const RunConfig& cfg) {
  if (!cfg.set_literal) {
    throw std::invalid_argument("a set literal such as 3:1 is required");
  }
  return parse_avoiding_set(*cfg.set_literal);
}

std::string set_braces(const std::vector<int>& values) { return "{" + join(values) + "}"; }

std::string period_text(const PeriodReport& report) {
  return report.witness ? std::to_string(report.witness->period_length()) : "none";
}

// The shared CSV layout for anything that carries a period report.
const std::vector<std::string> kPeriodColumns = {"set",      "m",     "V",
                                                  "period",   "preperiod", "cycle",
                                                  "terms_examined"};

std::vector<std::string> period_row(const AvoidingSet& set, const PeriodReport& report) {
  std::vector<BigInt> pre, cycle;
  if (report.witness) {
    pre = report.witness->preperiod();
    cycle = report.witness->period();
  }
  return {set.literal(),       std::to_string(set.modulus()), join(set.residues()),
          period_text(report), join(pre),                      join(cycle),
          std::to_string(report.terms_examined)};
}

void add_report_fields(Document& doc, const PeriodReport& report) {
  doc.fields.emplace_back("status", to_string(report.status));
  doc.fields.emplace_back("star", report.witness ? report.witness->star() : "none");
  doc.fields.emplace_back("period", period_text(report));
  if (report.witness) {
    doc.fields.emplace_back("preperiod_length",
                            std::to_string(report.witness->preperiod().size()));
    doc.fields.emplace_back("repeats_observed", std::to_string(report.repeats_observed));
  }
  doc.fields.emplace_back("terms_examined", std::to_string(report.terms_examined));
  if (report.covering_theorem) {
    doc.fields.emplace_back("covering_theorem", *report.covering_theorem);
  }
}

CommandResult finish(const Document& doc, const RunConfig& cfg) {
  CommandResult result;
  result.text = render(doc, cfg.output_format);
  return result;
}

std::string dual_trace(const std::vector<int>& ts) {
  const auto dual = dual_sequence(ts);
  std::vector<std::string> parts;
  const DualSequence& seq = std::holds_alternative<DualSequence>(dual)
                                ? std::get<DualSequence>(dual)
                                : std::get<ZeroEncountered>(dual).prefix;
  for (const auto& h : seq.hs) parts.push_back(to_string(h));
  std::string out = "h = ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  if (const auto* zero = std::get_if<ZeroEncountered>(&dual)) {
    out += " (zero at position " + std::to_string(zero->position) + " of " +
           std::to_string(ts.size()) + ")";
  }
  return out;
}

SeriesFlag parse_flag(const std::string& text) {
  if (text == "D") return SeriesFlag::kD;
  if (text == "Dminus1" || text == "-1+D") return SeriesFlag::kDminus1;
  throw ParseError("unknown series flag '" + text + "', expected D or Dminus1", 0);
}

}  // namespace

CommandResult cmd_coeffs(const RunConfig& cfg) {
  const AvoidingSet set = require_set(cfg);
  const CoeffSeries dp = dyck_count_dp(set, cfg.n);
  const CoeffSeries cf = series_cf(set, cfg.n);

  Document doc;
  std::optional<std::size_t> first_difference;
  Table table{{"n", "dp", "cf"}, {}};
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (!first_difference && dp[i] != cf[i]) first_difference = i;
    table.rows.push_back({std::to_string(i), to_decimal(dp[i]), to_decimal(cf[i])});
  }
  const bool agree = !first_difference;
  doc.fields = {{"set", set.literal()}, {"max_size", std::to_string(cfg.n)},
                {"agree", agree ? "yes" : "no"}};
  doc.table = std::move(table);
  doc.json["set"] = set.literal();
  doc.json["max_size"] = cfg.n;
  doc.json["dp"] = json_ints(dp.coeffs);
  doc.json["cf"] = json_ints(cf.coeffs);
  doc.json["agree"] = agree;

  CommandResult result = finish(doc, cfg);
  if (!agree) {
    result.diagnostics.push_back("engines disagree at d_" + std::to_string(*first_difference) +
                                 ": dp " + to_decimal(dp[*first_difference]) + ", cf " +
                                 to_decimal(cf[*first_difference]));
    result.exit_code = kExitInconsistent;
  }
  return result;
}

CommandResult cmd_hankel(const RunConfig& cfg) {
  const AvoidingSet set = require_set(cfg);
  const std::vector<BigInt> h = direct_hankel_sequence(set, cfg.n);

  Document doc;
  doc.fields = {{"set", set.literal()}, {"terms", std::to_string(h.size())}};
  doc.json["set"] = set.literal();
  doc.json["hankel"] = json_ints(h);

  Table table{{"n", "H"}, {}};
  for (std::size_t i = 0; i < h.size(); ++i) {
    table.rows.push_back({std::to_string(i + 1), to_decimal(h[i])});
  }
  if (cfg.detect) {
    PeriodReport report = detect_period(h, cfg.min_repeats.value_or(2));
    report.covering_theorem = covering_theorem(set);
    add_report_fields(doc, report);
    doc.json["report"] = report_json(report);
    if (cfg.output_format == OutputFormat::kCsv) {
      table = Table{kPeriodColumns, {period_row(set, report)}};
    }
  }
  doc.table = std::move(table);
  return finish(doc, cfg);
}

namespace {

struct RowOutcome {
  std::optional<AvoidingSet> set;
  std::vector<BigInt> hankel;
  PeriodReport report;
  std::string shown;
  std::optional<std::string> mismatch;
};

constexpr std::size_t kDefaultPrefixShown = 17;

RowOutcome evaluate_row(const GoldenRow& golden, std::size_t terms, std::size_t repeats) {
  RowOutcome row;
  row.set = parse_avoiding_set(golden.set);
  row.hankel = direct_hankel_sequence(*row.set, terms);
  row.report = detect_period(row.hankel, repeats);
  row.report.covering_theorem = covering_theorem(*row.set);

  const std::string pretty = row.set->pretty();
  if (golden.period > 0) {
    const EventuallyPeriodic expected = parse_star(golden.sequence);
    if (static_cast<int>(expected.period_length()) != golden.period) {
      row.mismatch = "golden data for " + pretty + " lists period " +
                     std::to_string(golden.period) + " but its cycle has length " +
                     std::to_string(expected.period_length());
    } else if (!row.report.witness) {
      row.mismatch = pretty + ": expected " + expected.star() + ", no period found";
    } else if (!(*row.report.witness == expected)) {
      row.mismatch = pretty + ": expected " + expected.star() + ", got " +
                     row.report.witness->star();
    }
  } else {
    std::vector<BigInt> prefix;
    std::stringstream ss{std::string(golden.sequence)};
    std::string item;
    while (std::getline(ss, item, ',')) prefix.emplace_back(item, 10);
    if (row.report.witness) {
      row.mismatch = pretty + ": expected no period, got " + row.report.witness->star();
    } else if (prefix.size() > row.hankel.size() ||
               !std::equal(prefix.begin(), prefix.end(), row.hankel.begin())) {
      row.mismatch = pretty + ": computed prefix differs from the printed " +
                     std::to_string(prefix.size()) + " terms";
    }
  }

  if (row.report.witness) {
    row.shown = row.report.witness->star();
  } else {
    std::size_t shown = kDefaultPrefixShown;
    if (golden.period == 0) {
      shown = static_cast<std::size_t>(std::count(golden.sequence.begin(),
                                                  golden.sequence.end(), ',')) + 1;
    }
    shown = std::min(shown, row.hankel.size());
    row.shown = join(std::vector<BigInt>(row.hankel.begin(),
                                         row.hankel.begin() + static_cast<long>(shown))) +
                ",...";
  }
  return row;
}

}  // namespace

CommandResult cmd_table1(const RunConfig& cfg) {
  const auto& golden = table1_golden();
  const std::size_t repeats = cfg.min_repeats.value_or(2);
  std::vector<RowOutcome> rows(golden.size());
  std::vector<std::exception_ptr> failures(golden.size());

  // Rows are claimed from a shared counter and written into their own slot,
  // so the output order never depends on scheduling.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < golden.size(); i = next++) {
      try {
        rows[i] = evaluate_row(golden[i], cfg.n, repeats);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = worker_count(golden.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  Document doc;
  CommandResult result;
  std::size_t matched = 0;
  Table table;
  if (cfg.output_format == OutputFormat::kCsv) {
    table.header = kPeriodColumns;
  } else {
    table.header = {"set", "sequence", "period", "golden"};
  }
  Json json_rows = Json::array();
  for (const RowOutcome& row : rows) {
    const bool ok = !row.mismatch;
    if (ok) {
      ++matched;
    } else {
      result.diagnostics.push_back("golden mismatch " + *row.mismatch);
    }
    if (cfg.output_format == OutputFormat::kCsv) {
      table.rows.push_back(period_row(*row.set, row.report));
    } else {
      table.rows.push_back({row.set->pretty(), row.shown, period_text(row.report),
                            ok ? "match" : "MISMATCH"});
    }
    Json entry;
    entry["set"] = row.set->literal();
    entry["sequence"] = row.shown;
    entry["period"] = row.report.witness ? Json(row.report.witness->period_length()) : Json();
    entry["golden_match"] = ok;
    entry["report"] = report_json(row.report);
    json_rows.push_back(std::move(entry));
  }
  doc.fields = {{"terms", std::to_string(cfg.n)},
                {"min_repeats", std::to_string(repeats)},
                {"rows", std::to_string(rows.size())},
                {"matched", std::to_string(matched)}};
  doc.table = std::move(table);
  doc.json["terms"] = cfg.n;
  doc.json["min_repeats"] = repeats;
  doc.json["matched"] = matched;
  doc.json["rows"] = std::move(json_rows);

  result.text = render(doc, cfg.output_format);
  if (matched != rows.size()) result.exit_code = kExitGoldenMismatch;
  return result;
}

CommandResult cmd_predict(const RunConfig& cfg) {
  const std::vector<int> ts = parse_int_list(cfg.ts);
  if (!is_primitive(ts)) {
    throw PreconditionError("ts " + join(ts) + " is not primitive: " + dual_trace(ts));
  }
  const PeriodPrediction pred = explain_prediction(ts, cfg.modulus, cfg.s);

  std::vector<std::string> hs;
  for (const auto& h : pred.dual.hs) hs.push_back(to_string(h));
  std::string dual_text;
  for (std::size_t i = 0; i < hs.size(); ++i) dual_text += (i ? "," : "") + hs[i];

  Document doc;
  doc.fields = {{"ts", join(ts)},
                {"s", std::to_string(pred.s)},
                {"m", std::to_string(pred.modulus)},
                {"feasible_set", set_braces(pred.feasible)},
                {"dual", dual_text},
                {"partial_product", to_string(pred.partial_product)},
                {"base_period", std::to_string(pred.base_period)},
                {"predicted_period", std::to_string(pred.period)},
                {"regime", pred.unproven_regime ? "unproven (odd m, s > 1)" : "proven"}};
  doc.json["ts"] = ts;
  doc.json["s"] = pred.s;
  doc.json["m"] = pred.modulus;
  doc.json["feasible_set"] = pred.feasible;
  doc.json["dual"] = hs;
  doc.json["partial_product"] = to_string(pred.partial_product);
  doc.json["base_period"] = pred.base_period;
  doc.json["predicted_period"] = pred.period;
  doc.json["unproven_regime"] = pred.unproven_regime;

  CommandResult result;
  if (cfg.verify) {
    const AvoidingSet set(pred.modulus, pred.feasible);
    const std::size_t terms =
        cfg.n_given ? cfg.n : 4 * static_cast<std::size_t>(pred.period) + 4;
    const PeriodReport report =
        detect_period(direct_hankel_sequence(set, terms), cfg.min_repeats.value_or(3));
    const bool agree =
        report.witness && static_cast<int>(report.witness->period_length()) == pred.period;
    doc.fields.emplace_back("detected_period", period_text(report));
    doc.fields.emplace_back("terms_examined", std::to_string(terms));
    doc.fields.emplace_back("agree", agree ? "yes" : "no");
    doc.json["detected"] = report_json(report);
    doc.json["agree"] = agree;
    if (!agree) {
      const std::string note = "predicted period " + std::to_string(pred.period) +
                               ", detected " + period_text(report);
      if (pred.unproven_regime) {
        result.diagnostics.push_back("finding: " + note);
      } else {
        result.diagnostics.push_back(note);
        result.exit_code = kExitInconsistent;
      }
    }
  }
  result.text = render(doc, cfg.output_format);
  return result;
}

CommandResult cmd_synthesize(const RunConfig& cfg) {
  const std::vector<SynthesisPart> parts = parse_parts(cfg.parts);
  auto built = synthesize(parts);
  if (const auto* violation = std::get_if<PreconditionViolation>(&built)) {
    throw PreconditionError(violation->message);
  }
  const std::vector<int>& residues = std::get<std::vector<int>>(built);
  const int max_element = residues.empty() ? 0 : residues.back();
  if (cfg.modulus < std::max(2, max_element)) {
    throw PreconditionError("modulus " + std::to_string(cfg.modulus) +
                            " is below the largest element " + std::to_string(max_element));
  }
  const AvoidingSet set(cfg.modulus, residues);
  // The period is m/2, m or 2m; enough terms for three copies of the longest.
  const std::size_t terms = cfg.n_given ? cfg.n : 8 * static_cast<std::size_t>(cfg.modulus) + 4;
  const std::vector<BigInt> h = direct_hankel_sequence(set, terms);
  const PeriodReport report = detect_period(h, cfg.min_repeats.value_or(3));

  Document doc;
  doc.fields = {{"parts", cfg.parts}, {"V", set_braces(residues)},
                {"m", std::to_string(cfg.modulus)}};
  add_report_fields(doc, report);
  doc.json["parts"] = cfg.parts;
  doc.json["V"] = residues;
  doc.json["m"] = cfg.modulus;
  doc.json["report"] = report_json(report);
  if (cfg.output_format == OutputFormat::kCsv) {
    doc.table = Table{kPeriodColumns, {period_row(set, report)}};
  }
  return finish(doc, cfg);
}

CommandResult cmd_reduce(const RunConfig& cfg) {
  const AvoidingSet set = require_set(cfg);
  const SeriesFlag flag = parse_flag(cfg.flag);
  const ReductionTrace trace = evaluate_with_trace(static_cast<int>(cfg.n), set, flag);

  Document doc;
  Json levels = Json::array();
  for (const auto& [n, combo] : trace.levels) {
    doc.fields.emplace_back("level " + std::to_string(n), combo.describe());
    levels.push_back({{"n", n}, {"combo", combo.describe()}});
  }
  doc.json["set"] = set.literal();
  doc.json["flag"] = to_string(flag);
  doc.json["n"] = cfg.n;
  doc.json["levels"] = std::move(levels);
  if (const auto* value = std::get_if<BigInt>(&trace.result)) {
    doc.fields.emplace_back("value", to_decimal(*value));
    doc.json["value"] = to_decimal(*value);
  } else {
    const auto& obstruction = std::get<Obstruction>(trace.result);
    doc.fields.emplace_back("obstruction", obstruction.describe());
    doc.json["obstruction"] = {{"atom", obstruction.atom.describe()},
                               {"n", obstruction.atom.n},
                               {"depth", obstruction.depth}};
  }
  return finish(doc, cfg);
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const AvoidingSet set = require_set(cfg);
  const EventuallyPeriodic claim = parse_star(cfg.claim);
  const bool holds = verify_claim(set, claim, cfg.n);

  Document doc;
  doc.fields = {{"set", set.literal()},
                {"claim", claim.star()},
                {"terms", std::to_string(cfg.n)},
                {"holds", holds ? "yes" : "no"}};
  doc.json["set"] = set.literal();
  doc.json["claim"] = claim.star();
  doc.json["terms"] = cfg.n;
  doc.json["holds"] = holds;
  return finish(doc, cfg);
}

CommandResult cmd_conjecture(const RunConfig& cfg) {
  const int m = cfg.modulus;
  const std::size_t terms = cfg.n_given ? cfg.n : 4 * static_cast<std::size_t>(m) + 8;
  const ConjectureOutcome outcome = conjecture_outcome(m, terms);

  Document doc;
  doc.fields = {{"m", std::to_string(m)},
                {"pattern", conjecture_pattern(m).star()},
                {"terms", std::to_string(terms)},
                {"holds", outcome.holds ? "yes" : "no"}};
  doc.json["m"] = m;
  doc.json["pattern"] = conjecture_pattern(m).star();
  doc.json["terms"] = terms;
  doc.json["holds"] = outcome.holds;
  doc.json["computed"] = json_ints(outcome.computed);
  CommandResult result;
  if (outcome.first_mismatch) {
    doc.fields.emplace_back("first_mismatch", "H_" + std::to_string(*outcome.first_mismatch + 1));
    doc.json["first_mismatch"] = *outcome.first_mismatch + 1;
    result.diagnostics.push_back("finding: pattern fails at H_" +
                                 std::to_string(*outcome.first_mismatch + 1) + " for m = " +
                                 std::to_string(m));
  }
  result.text = render(doc, cfg.output_format);
  return result;
}

CommandResult cmd_primitives(const RunConfig& cfg) {
  const auto all = generate_primitive(cfg.max_len, cfg.max_t);
  Document doc;
  Table table{{"ts", "length", "feasible_s1", "partial_product"}, {}};
  Json rows = Json::array();
  for (const auto& ts : all) {
    const auto dual = std::get<DualSequence>(dual_sequence(ts));
    const ExactRational product = dual.partial_product(ts.size() - 1);
    const std::vector<int> feasible = feasible_set(ts, 1);
    table.rows.push_back({join(ts), std::to_string(ts.size()), set_braces(feasible),
                          to_string(product)});
    rows.push_back({{"ts", ts}, {"feasible_s1", feasible}, {"partial_product", to_string(product)}});
  }
  doc.fields = {{"max_len", std::to_string(cfg.max_len)},
                {"max_t", std::to_string(cfg.max_t)},
                {"count", std::to_string(all.size())}};
  doc.table = std::move(table);
  doc.json["max_len"] = cfg.max_len;
  doc.json["max_t"] = cfg.max_t;
  doc.json["sequences"] = std::move(rows);
  return finish(doc, cfg);
}

CommandResult dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kCoeffs:
      return cmd_coeffs(cfg);
    case Command::kHankel:
      return cmd_hankel(cfg);
    case Command::kTable1:
      return cmd_table1(cfg);
    case Command::kPredict:
      return cmd_predict(cfg);
    case Command::kSynthesize:
      return cmd_synthesize(cfg);
    case Command::kReduce:
      return cmd_reduce(cfg);
    case Command::kVerify:
      return cmd_verify(cfg);
    case Command::kConjecture:
      return cmd_conjecture(cfg);
    case Command::kPrimitives:
      return cmd_primitives(cfg);
  }
  throw std::logic_error("unknown command");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CommandResult result;
  try {
    result = dispatch(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *cfg.output_path << " for writing\n";
      return kExitUsage;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  for (const auto& line : result.diagnostics) err << line << "\n";
  return result.exit_code;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HANKEL_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) {
      workers = std::min(workers, static_cast<std::size_t>(cap));
    }
  }
  return std::max<std::size_t>(1, std::min(workers, jobs));
}

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel determinants of Dyck paths whose peaks avoid congruence classes",
               "hankel-lab"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "plain";
  std::size_t repeats = 0;
  app.add_option("-f,--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv", "markdown"}));
  app.add_option("-o,--output", cfg.output_path, "Write the output to this file");
  auto* n_opt =
      app.add_option("-n,--n", cfg.n, "Term budget (default 60)")->check(CLI::PositiveNumber);
  auto* repeats_opt = app.add_option("--min-repeats", repeats, "Cycle repetitions required")
                          ->check(CLI::Range(2, 1000));

  auto add = [&](const std::string& name, const std::string& help, Command command) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&cfg, command] { cfg.command = command; });
    return sub;
  };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("set", cfg.set_literal, "Avoiding set literal, e.g. 3:1 or 4:2,4")
        ->required();
  };

  CLI::App* coeffs = add("coeffs", "Coefficients d_0..d_N from both engines", Command::kCoeffs);
  add_set(coeffs);

  CLI::App* hankel = add("hankel", "Hankel determinants H_1..H_N", Command::kHankel);
  add_set(hankel);
  hankel->add_flag("--detect", cfg.detect, "Look for an eventual period");

  add("table1", "Reproduce the periodicity table for m <= 5", Command::kTable1);

  CLI::App* predict = add("predict", "Predict the period of a primitive sequence's feasible set",
                          Command::kPredict);
  predict->add_option("--ts", cfg.ts, "Primitive sequence, e.g. 3,2,1")->required();
  predict->add_option("--m", cfg.modulus, "Modulus")->required();
  predict->add_option("--s", cfg.s, "Offset s (default 1)");
  predict->add_flag("--verify", cfg.verify, "Compare with the detected period");

  CLI::App* synth = add("synthesize", "Union of shifted feasible sets", Command::kSynthesize);
  synth->add_option("--parts", cfg.parts, "Parts, e.g. (2)@0;(2)@5")->required();
  synth->add_option("--m", cfg.modulus, "Modulus")->required();

  CLI::App* reduce = add("reduce", "Evaluate H_n by the reduction rules", Command::kReduce);
  add_set(reduce);
  reduce->add_option("--flag", cfg.flag, "D or Dminus1 (default D)");

  CLI::App* verify = add("verify", "Check a claimed sequence against H", Command::kVerify);
  add_set(verify);
  verify->add_option("--claim", cfg.claim, "Claim in star notation")->required();

  CLI::App* conj = add("conjecture", "Test the pattern for V = {1..m-1}", Command::kConjecture);
  conj->add_option("--m", cfg.modulus, "Modulus")->required();

  CLI::App* prims = add("primitives", "List primitive sequences", Command::kPrimitives);
  prims->add_option("--max-len", cfg.max_len, "Longest sequence (default 3)");
  prims->add_option("--max-t", cfg.max_t, "Largest entry (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.n_given = n_opt->count() > 0;
  if (repeats_opt->count() > 0) cfg.min_repeats = repeats;
  if (format == "json") cfg.output_format = OutputFormat::kJson;
  if (format == "csv") cfg.output_format = OutputFormat::kCsv;
  if (format == "markdown") cfg.output_format = OutputFormat::kMarkdown;
  return cfg;
}

}  // namespace hankel_lab::cli
