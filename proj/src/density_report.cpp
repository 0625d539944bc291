#include "daisy/density_report.hpp"

#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "daisy/binomial.hpp"
#include "daisy/constructions.hpp"
#include "daisy/errors.hpp"

namespace daisy {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::density_upper: return "density_upper";
    case BoundKind::count_upper: return "count_upper";
    case BoundKind::count_lower: return "count_lower";
    case BoundKind::density_lower: return "density_lower";
    case BoundKind::density_lower_asymptotic: return "density_lower_asymptotic";
  }
  return "unknown";
}

BoundKind bound_kind_from_string(const std::string& text) {
  for (auto kind : {BoundKind::density_upper, BoundKind::count_upper, BoundKind::count_lower, BoundKind::density_lower,
                    BoundKind::density_lower_asymptotic})
    if (to_string(kind) == text) return kind;
  throw InvalidInput("unknown bound kind '" + text + "'");
}

std::string rational_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto num = std::stoll(text, &used);
      if (used != text.size()) throw InvalidInput("bad rational");
      return Rational(num);
    }
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    const auto num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw InvalidInput("bad rational");
    const auto den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw InvalidInput("bad rational");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
}

std::string decimal_string(const Rational& q) {
  if (q < 0) throw InvalidInput("decimal_string expects a nonnegative rational");
  const __int128 scaled = static_cast<__int128>(q.numerator()) * 1'000'000;
  const __int128 den = q.denominator();
  __int128 whole = scaled / den;
  const __int128 rem = scaled % den;
  if (2 * rem > den || (2 * rem == den && whole % 2 == 1)) ++whole;
  const auto units = static_cast<long long>(whole / 1'000'000);
  const auto frac = static_cast<long long>(whole % 1'000'000);
  std::string frac_text = std::to_string(frac);
  return std::to_string(units) + "." + std::string(6 - frac_text.size(), '0') + frac_text;
}

std::string pattern_id(const DaisyPattern& p) {
  return "D" + std::to_string(p.r) + "(" + std::to_string(p.s) + "," + std::to_string(p.t) + ")";
}

ExProblem ExProblem::daisy(const DaisyPattern& pattern) {
  ExProblem p;
  p.id_ = pattern_id(pattern);
  p.r_ = pattern.r;
  p.pattern_ = pattern;
  return p;
}

ExProblem ExProblem::forbidden(const UniformHypergraph& h) {
  ExProblem p;
  p.id_ = hypergraph_id(h);
  p.r_ = h.uniformity();
  p.forbidden_ = h;
  return p;
}

ConstraintSystem ExProblem::system(unsigned n) const {
  if (pattern_) return build_daisy_constraints(n, *pattern_);
  return enumerate_copies(*forbidden_, n);
}

std::vector<NamedBound> closed_form_bounds(const DaisyPattern& p, unsigned n) {
  std::vector<NamedBound> out;
  if (p.t + 1 == p.s && n >= p.r + 1)
    out.push_back({"upper_t_eq_s_minus_1", BoundKind::density_upper, Rational(p.s - 1, p.r + 1)});
  if (p.t == 1) {
    const auto count = static_cast<std::int64_t>(binom(n, p.r - 1)) * (p.s - 1);
    out.push_back({"upper_t_eq_1", BoundKind::count_upper, Rational(count, p.r)});
  }
  if (p.s == 4 && p.t == 2) {
    std::int64_t factorial = 1;
    std::int64_t power = 1;
    for (unsigned i = 1; i <= p.r; ++i) {
      factorial *= i;
      power *= p.r;
    }
    out.push_back({"lower_multipartite", BoundKind::density_lower_asymptotic, Rational(factorial, power)});
    if (n >= p.r) {
      std::int64_t count = 1;
      for (unsigned size : Partition::even_split(n, p.r).sizes) count *= size;
      out.push_back({"lower_multipartite_count", BoundKind::count_lower, Rational(count)});
    }
  }
  return out;
}

ExTable ex_table(const ExProblem& problem, unsigned n_from, unsigned n_to, const SolverConfig& cfg,
                 std::size_t max_items) {
  ExTable table;
  for (unsigned n = n_from; n <= n_to; ++n) {
    if (n < problem.uniformity()) {
      table.notes.push_back("n=" + std::to_string(n) + " skipped: smaller than the uniformity");
      continue;
    }
    const std::uint64_t items = binom(n, problem.uniformity());
    if (items > max_items) {
      table.notes.push_back("n=" + std::to_string(n) + " skipped: " + std::to_string(items) +
                            " r-sets exceed the table limit of " + std::to_string(max_items));
      continue;
    }
    const auto result = solve_max_avoiding(problem.system(n), cfg);
    DensityRecord row;
    row.problem = problem.id();
    row.n = n;
    row.value = result.objective;
    row.is_exact = result.status == SearchStatus::exact;
    row.ratio = Rational(static_cast<std::int64_t>(result.objective), static_cast<std::int64_t>(items));
    if (problem.pattern()) row.bounds = closed_form_bounds(*problem.pattern(), n);
    table.records.push_back(std::move(row));
  }
  const DensityRecord* prev = nullptr;
  for (const auto& row : table.records) {
    if (!row.is_exact) continue;
    if (prev != nullptr && row.ratio > prev->ratio) {
      table.monotone = false;
      table.notes.push_back("ratio increases from n=" + std::to_string(prev->n) + " to n=" + std::to_string(row.n));
    }
    prev = &row;
  }
  return table;
}

BoundReport verify_bounds(const std::vector<DensityRecord>& records) {
  BoundReport report;
  for (const auto& row : records) {
    if (!row.is_exact) continue;
    const Rational value(static_cast<std::int64_t>(row.value));
    for (const auto& b : row.bounds) {
      bool ok = true;
      switch (b.kind) {
        case BoundKind::density_upper: ok = row.ratio <= b.value; break;
        case BoundKind::count_upper: ok = value <= b.value; break;
        case BoundKind::count_lower: ok = value >= b.value; break;
        case BoundKind::density_lower: ok = row.ratio >= b.value; break;
        case BoundKind::density_lower_asymptotic: continue;
      }
      ++report.checks;
      if (!ok)
        report.violations.push_back(row.problem + " n=" + std::to_string(row.n) + ": value " +
                                    std::to_string(row.value) + " (ratio " + rational_string(row.ratio) +
                                    ") violates " + b.name + " " + to_string(b.kind) + " " + rational_string(b.value));
    }
  }
  if (!report.violations.empty()) {
    std::string message = "bound violations:";
    for (const auto& v : report.violations) message += "\n  " + v;
    throw BoundViolation(message);
  }
  return report;
}

ExportFormat parse_export_format(const std::string& text) {
  if (text == "json") return ExportFormat::json;
  if (text == "csv") return ExportFormat::csv;
  throw InvalidInput("format must be json or csv, got '" + text + "'");
}

namespace {

constexpr const char* kSchema = "daisy-density-table/1";

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void export_records(std::ostream& out, const std::vector<DensityRecord>& records, ExportFormat format) {
  if (format == ExportFormat::csv) {
    out << "problem,n,value,is_exact,ratio,decimal,bounds\n";
    for (const auto& row : records) {
      std::string bounds;
      for (const auto& b : row.bounds) {
        if (!bounds.empty()) bounds += ';';
        bounds += b.name + "=" + rational_string(b.value);
      }
      out << csv_field(row.problem) << ',' << row.n << ',' << row.value << ',' << (row.is_exact ? "true" : "false")
          << ',' << rational_string(row.ratio) << ',' << decimal_string(row.ratio) << ',' << csv_field(bounds) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing CSV report");
    return;
  }
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : records) {
    nlohmann::ordered_json j;
    j["problem"] = row.problem;
    j["n"] = row.n;
    j["value"] = row.value;
    j["is_exact"] = row.is_exact;
    j["ratio"] = rational_string(row.ratio);
    j["decimal"] = decimal_string(row.ratio);
    j["bounds"] = nlohmann::ordered_json::array();
    for (const auto& b : row.bounds)
      j["bounds"].push_back({{"name", b.name}, {"kind", to_string(b.kind)}, {"value", rational_string(b.value)}});
    doc["records"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing JSON report");
}

std::vector<DensityRecord> read_records_json(std::istream& in) {
  std::vector<DensityRecord> out;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("schema").get<std::string>() != kSchema) throw InvalidInput("unknown report schema");
    for (const auto& j : doc.at("records")) {
      DensityRecord row;
      row.problem = j.at("problem").get<std::string>();
      row.n = j.at("n").get<unsigned>();
      row.value = j.at("value").get<std::uint64_t>();
      row.is_exact = j.at("is_exact").get<bool>();
      row.ratio = parse_rational(j.at("ratio").get<std::string>());
      for (const auto& b : j.at("bounds"))
        row.bounds.push_back({b.at("name").get<std::string>(), bound_kind_from_string(b.at("kind").get<std::string>()),
                              parse_rational(b.at("value").get<std::string>())});
      out.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

}  // namespace daisy
