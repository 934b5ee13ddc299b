#pragma once

#include "mgsim/timeseries.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mgsim {

/// One verification row: a window, a metric quantity, and a tolerance band.
struct Expectation {
    double window_start = 0.0;
    double window_end = 0.0;
    std::string quantity; ///< e.g. mean_v_pcc, conv2.mean_current
    double expected = 0.0;
    double tolerance = 0.0; ///< absolute, > 0
};

struct ExpectationTable {
    std::vector<Expectation> rows;
};

/// Reads rows of `window_start,window_end,quantity,expected,tolerance`.
/// Blank lines and lines starting with # are skipped. Throws
/// std::invalid_argument with the line number on malformed input.
ExpectationTable load_expectations(const std::string& path);
ExpectationTable parse_expectations(std::istream& in, const std::string& origin = "<stream>");

/// Checks every quantity path against the converter count without running
/// anything. Throws std::invalid_argument on the first unresolvable path.
void resolve_expectations(const ExpectationTable& table, int n_converters);

struct ExpectationResult {
    Expectation row;
    double measured = 0.0;
    bool pass = false;
};

/// Evaluates every row against metrics computed from the series.
std::vector<ExpectationResult> evaluate_expectations(const ExpectationTable& table,
                                                     const TimeSeries& series,
                                                     double v_nominal);

} // namespace mgsim
