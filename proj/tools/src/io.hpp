// io.hpp — CSV emission, numeric grids, and the bounded row pool

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eqcdj/log_real.hpp"

namespace eqcdj::cli {

// Sweep axis parsed from "start:stop:count".  count >= 1; a single-point grid
// collapses to {start}, otherwise both endpoints are hit exactly.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> points() const;
};

// Throws validation_error naming the flag on any malformed spec.
GridSpec parse_grid(const std::string& text, const char* flag);

// Fixed-precision scientific with 12 significant digits.
std::string fmt(double v);

// log10 of a probability with the "-inf" sentinel for exact zeros.
std::string fmt_log10(const LogReal& v);
std::string fmt_log10(double v);

// Evaluate count rows with a bounded worker pool and return them in input
// order.  jobs <= 0 means hardware concurrency.  The first failing row (by
// input index) has its exception rethrown on the calling thread.
std::vector<std::string> collect_rows(int count, int jobs,
                                      const std::function<std::string(int)>& row);

// Header plus rows to path, or to stdout when path is empty.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

// Companion matplotlib stub next to the CSV (path + ".plot.py").
void write_plot_stub(const std::string& csv_path, const std::string& x_column,
                     const std::string& y_column);

}  // namespace eqcdj::cli
