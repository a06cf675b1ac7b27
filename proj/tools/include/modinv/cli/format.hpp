#pragma once

#include "modinv/crt.hpp"
#include "modinv/dayan.hpp"

#include "json.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modinv::cli {

/// Malformed command-line input or input file (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace as a table with one column per step index and rows
/// i, r, gamma, [s], c, beta, f. The s row appears only for strategies other
/// than all-plus. Tab separated, empty cells left blank, '\n' line ends.
std::string format_trace_tsv(const DayanTrace& trace);

/// Same layout as a GitHub-flavoured markdown table.
std::string format_trace_markdown(const DayanTrace& trace);

/// {p, q, a, strategy, steps: [{i, s, r, gamma, c, beta, f}], termination,
///  gcd, sum_index, solvable, value}. Integers are decimal strings; fields
/// absent from a step are null.
nlohmann::json trace_to_json(const DayanTrace& trace);

/// Inverse of trace_to_json. Throws ParseError on schema violations.
DayanTrace trace_from_json(const nlohmann::json& doc);

/// One "a mod m" per line; blank lines and lines starting with '#' are
/// skipped. Throws ParseError naming the offending line.
std::vector<Congruence> parse_congruences(std::istream& in);

struct FloatSeries {
  double value = 0.0;    ///< before rounding (and after the parity fix for type 1)
  double rounded = 0.0;
  double error = 0.0;    ///< |value - rounded|
  bool suspect = false;  ///< error above 0.25
};

/// Double-precision evaluation of the series formulas, for demonstration.
FloatSeries float_series(const Int& p, const Int& q, int type, bool condensed);

}  // namespace modinv::cli
