// io.cpp — CSV emission, numeric grids, and the bounded row pool

#include "io.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "eqcdj/errors.hpp"

namespace eqcdj::cli {

std::vector<double> GridSpec::points() const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    // i/(count-1) keeps dyadic interior points (and both endpoints) exact.
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(start + (stop - start) * t);
  }
  return out;
}

GridSpec parse_grid(const std::string& text, const char* flag) {
  const auto fail = [&] {
    throw validation_error(std::string(flag) + " expects start:stop:count, got '" + text + "'");
  };
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) fail();
  GridSpec g;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first);
    const std::string b = text.substr(first + 1, second - first - 1);
    const std::string c = text.substr(second + 1);
    g.start = std::stod(a, &used);
    if (used != a.size()) fail();
    g.stop = std::stod(b, &used);
    if (used != b.size()) fail();
    g.count = std::stoi(c, &used);
    if (used != c.size()) fail();
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
    fail();
  }
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || g.count < 1)
    throw validation_error(std::string(flag) + " needs finite endpoints and count >= 1");
  return g;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string fmt_log10(const LogReal& v) {
  if (v.is_zero()) return "-inf";
  return fmt(v.log10());
}

std::string fmt_log10(double v) {
  if (v == 0.0) return "-inf";
  return fmt(std::log10(v));
}

std::vector<std::string> collect_rows(int count, int jobs,
                                      const std::function<std::string(int)>& row) {
  std::vector<std::string> rows(count);
  if (count == 0) return rows;

  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  if (workers == 0) workers = 4;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));

  if (workers <= 1) {
    for (int i = 0; i < count; ++i) rows[i] = row(i);
    return rows;
  }

  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        rows[i] = row(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ostringstream body;
  body << header << '\n';
  for (const auto& r : rows) body << r << '\n';
  if (path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open output file: " + path);
  out << body.str();
}

void write_plot_stub(const std::string& csv_path, const std::string& x_column,
                     const std::string& y_column) {
  const std::string path = csv_path + ".plot.py";
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open plot stub: " + path);
  out << "#!/usr/bin/env python3\n"
      << "# Renders " << y_column << " against " << x_column << " from the companion CSV.\n"
      << "import csv\n"
      << "import matplotlib.pyplot as plt\n"
      << "\n"
      << "xs, ys = [], []\n"
      << "with open(" << '"' << csv_path << '"' << ") as fh:\n"
      << "    for row in csv.DictReader(fh):\n"
      << "        try:\n"
      << "            xs.append(float(row[\"" << x_column << "\"]))\n"
      << "            ys.append(float(row[\"" << y_column << "\"]))\n"
      << "        except (KeyError, ValueError):\n"
      << "            continue\n"
      << "plt.plot(xs, ys, marker=\"o\", markersize=3)\n"
      << "plt.xlabel(\"" << x_column << "\")\n"
      << "plt.ylabel(\"" << y_column << "\")\n"
      << "plt.grid(True, alpha=0.3)\n"
      << "plt.savefig(" << '"' << csv_path << ".png" << '"' << ", dpi=160, bbox_inches=\"tight\")\n";
}

}  // namespace eqcdj::cli
