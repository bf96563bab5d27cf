#ifndef GMLIFE_TOOLS_TABLE_HPP_
#define GMLIFE_TOOLS_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmlife/life_values.hpp"
#include "gmlife/mortality.hpp"

namespace gmlife::table {

enum class Format { kCsv, kJson };

// Exit statuses of the table generator.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitVerification = 4;

inline constexpr std::int64_t kMaxRows = 1'000'000;
inline constexpr std::int64_t kVerifySamples = 100'000;

struct TableSpec {
  GmParams params{0.0, 0.0, 0.0};
  Rate delta{0.0};
  double x_min = 0.0;
  double x_max = 0.0;
  double step = 1.0;
  Format format = Format::kCsv;
  bool double_rate = false;
  bool verify = false;
  double verify_tol = 1e-7;
  bool diagnostics = false;
  std::uint64_t seed = 20080101;
};

// Raised when a row cannot be computed; carries the offending age.
class RowFailure : public std::runtime_error {
 public:
  RowFailure(double age, const std::string& what);
  double age() const noexcept { return age_; }

 private:
  double age_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  // Ages whose verification differences exceeded the tolerance.
  std::vector<double> verification_failures;
};

// Throws std::invalid_argument when the spec violates its invariants.
void validate(const TableSpec& spec);

std::vector<double> age_grid(double x_min, double x_max, double step);

std::vector<std::string> column_names(const TableSpec& spec);

// Values are rounded to the printed precision so CSV and JSON agree exactly.
Table build_table(const TableSpec& spec);

// Shortest text for `value` at 15 significant digits, locale independent.
std::string format_number(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

// Entry point of the gm-table command. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmlife::table

#endif  // GMLIFE_TOOLS_TABLE_HPP_
