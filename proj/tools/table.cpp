#include "table.hpp"

#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <system_error>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmlife/errors.hpp"
#include "gmlife/oracle.hpp"

namespace gmlife::table {

namespace {

constexpr int kSignificantDigits = 15;
// Quadrature below this relative tolerance only burns the evaluation budget.
constexpr double kOracleRelFloor = 1e-13;

double rounded(double value) {
  const std::string text = format_number(value);
  double parsed = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return parsed;
}

double relative_difference(double value, double reference) {
  if (value == reference) return 0.0;
  return std::fabs(value - reference) / std::fabs(reference);
}

std::vector<double> compute_row(const TableSpec& spec, double x, oracle::SeedStream& stream,
                                bool& verification_failed) {
  const GmParams& p = spec.params;
  const Rate r = spec.delta;
  const CommutationRow single = commutation_row(p, r, x, false);
  const double a_bar = annuity(p, r, x);
  std::vector<double> row = {x,           survival(p, x), mortality_rate(p, x), single.d_val,
                             single.n_val, single.m_val,  a_bar,                remaining_life(p, x)};
  if (spec.double_rate) {
    const CommutationRow twice = commutation_row(p, r, x, true);
    row.insert(row.end(), {twice.d_val, twice.n_val, twice.m_val});
  }
  if (spec.diagnostics) {
    row.push_back(ageing_factor(p, r, x));
    row.push_back(positive_shape_check(p, r));
  }
  if (spec.verify) {
    // Oracle tolerance three orders tighter than the comparison tolerance.
    const double oracle_rel = std::fmax(1e-3 * spec.verify_tol, kOracleRelFloor);
    const double a_quad =
        oracle::integrate_survival(p, r, x, oracle_rel * std::fabs(a_bar)).value;
    const double m_tol = oracle_rel * std::fabs(single.m_val);
    const double m_quad =
        m_tol > 0.0 ? oracle::integrate_m(p, r, x, m_tol).value : single.m_val;
    const double diff_a = relative_difference(a_bar, a_quad);
    const double diff_m = relative_difference(single.m_val, m_quad);
    oracle::SeedStream row_stream = stream.split();
    const oracle::McEstimate mc = oracle::mc_remaining_life(p, x, kVerifySamples, row_stream);
    row.insert(row.end(), {diff_a, diff_m, mc.mean, mc.std_error});
    verification_failed = !(diff_a <= spec.verify_tol) || !(diff_m <= spec.verify_tol);
  }
  for (double& value : row) {
    if (!std::isfinite(value)) throw OverflowError("non-finite table value");
    value = rounded(value);
  }
  return row;
}

}  // namespace

RowFailure::RowFailure(double age, const std::string& what)
    : std::runtime_error("age " + format_number(age) + ": " + what), age_(age) {}

void validate(const TableSpec& spec) {
  const GmParams& p = spec.params;
  if (p.alpha() + p.beta() == 0.0) {
    throw std::invalid_argument("alpha + beta must be > 0 (the lifetime would be infinite)");
  }
  if (!std::isfinite(spec.x_min) || !std::isfinite(spec.x_max) || spec.x_min < 0.0 ||
      spec.x_max < spec.x_min) {
    throw std::invalid_argument("need 0 <= x-min <= x-max");
  }
  if (!std::isfinite(spec.step) || !(spec.step > 0.0)) {
    throw std::invalid_argument("step must be > 0");
  }
  if (spec.verify && !(spec.verify_tol > 0.0)) {
    throw std::invalid_argument("verify-tol must be > 0");
  }
  if (spec.diagnostics && !(p.gamma() > 0.0)) {
    throw std::invalid_argument("--diagnostics needs gamma > 0");
  }
  if (spec.diagnostics && p.alpha() + spec.delta.delta() == 0.0) {
    throw std::invalid_argument("--diagnostics needs alpha + delta > 0");
  }
  if ((spec.x_max - spec.x_min) / spec.step >= static_cast<double>(kMaxRows)) {
    throw std::invalid_argument("age grid has more than " + std::to_string(kMaxRows) + " rows");
  }
}

std::vector<double> age_grid(double x_min, double x_max, double step) {
  // Slack absorbs representation error in (x_max - x_min) / step.
  const auto count = static_cast<std::int64_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
  std::vector<double> ages;
  ages.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    ages.push_back(std::fmin(x_min + static_cast<double>(i) * step, x_max));
  }
  return ages;
}

std::vector<std::string> column_names(const TableSpec& spec) {
  std::vector<std::string> names = {"x", "l", "mu", "D", "N", "M", "a_bar", "e_x"};
  if (spec.double_rate) names.insert(names.end(), {"D2", "N2", "M2"});
  if (spec.diagnostics) names.insert(names.end(), {"ageing", "shape"});
  if (spec.verify) names.insert(names.end(), {"rel_diff_a_bar", "rel_diff_M", "mc_e_x", "mc_se"});
  return names;
}

Table build_table(const TableSpec& spec) {
  validate(spec);
  Table table;
  table.header = column_names(spec);
  oracle::SeedStream stream(spec.seed);
  for (const double x : age_grid(spec.x_min, spec.x_max, spec.step)) {
    bool failed = false;
    try {
      table.rows.push_back(compute_row(spec, x, stream, failed));
    } catch (const OverflowError& e) {
      throw RowFailure(x, e.what());
    } catch (const ConvergenceError& e) {
      throw RowFailure(x, e.what());
    } catch (const DomainError& e) {
      throw RowFailure(x, e.what());
    }
    if (failed) table.verification_failures.push_back(x);
  }
  return table;
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, kSignificantDigits);
  return std::string(buffer, result.ptr);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[table.header[i]] = row[i];
    array.push_back(std::move(object));
  }
  out << array.dump(2) << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gompertz-Makeham commutation and annuity tables", "gm-table"};
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
  TableSpec spec;
  std::string format = "csv";
  app.add_option("--alpha", alpha, "Makeham (age-independent) hazard")->required();
  app.add_option("--beta", beta, "Gompertz hazard scale")->required();
  app.add_option("--gamma", gamma, "Gompertz ageing rate")->required();
  app.add_option("--delta", delta, "force of interest")->required();
  app.add_option("--x-min", spec.x_min, "first age")->required();
  app.add_option("--x-max", spec.x_max, "last age")->required();
  app.add_option("--step", spec.step, "age step")->required();
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--double-rate", spec.double_rate, "add D2, N2, M2 at twice the rate");
  app.add_flag("--verify", spec.verify, "compare against quadrature and Monte-Carlo");
  app.add_option("--verify-tol", spec.verify_tol, "relative tolerance for --verify")
      ->capture_default_str();
  app.add_flag("--diagnostics", spec.diagnostics, "add ageing factor and gamma shape columns");
  app.add_option("--seed", spec.seed, "seed for the verification Monte-Carlo")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gm-table: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    spec.params = GmParams(alpha, beta, gamma);
    spec.delta = Rate(delta);
    spec.format = format == "json" ? Format::kJson : Format::kCsv;
    validate(spec);
  } catch (const std::exception& e) {
    err << "gm-table: " << e.what() << '\n';
    return kExitUsage;
  }

  Table table;
  try {
    table = build_table(spec);
  } catch (const RowFailure& e) {
    err << "gm-table: numerical failure at " << e.what() << '\n';
    return kExitNumerical;
  }

  if (spec.format == Format::kJson) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }

  if (!table.verification_failures.empty()) {
    err << "gm-table: verification failed at age " << format_number(table.verification_failures.front());
    if (table.verification_failures.size() > 1) {
      err << " and " << table.verification_failures.size() - 1 << " other age(s)";
    }
    err << " (tolerance " << format_number(spec.verify_tol) << ")\n";
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace gmlife::table
