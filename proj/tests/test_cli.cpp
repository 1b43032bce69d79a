// test_cli.cpp — end-to-end checks of the eqcdj executable: CSV shape,
// exit-code contract, determinism, config handling

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

std::string g_cli;  // path to the built executable, from argv or EQCDJ_CLI

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  for (;;) {
    const std::size_t n = std::fread(buf, 1, sizeof buf, pipe);
    if (n == 0) break;
    r.out.append(buf, n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// "d.dddddddddddExdd": fixed-precision scientific with 12 significant digits.
bool twelve_digit_scientific(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  ++i;
  if (i >= s.size() || s[i] != '.') return false;
  ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits != 11) return false;
  if (i >= s.size() || s[i] != 'e') return false;
  ++i;
  if (i >= s.size() || (s[i] != '-' && s[i] != '+')) return false;
  ++i;
  return i < s.size() && std::all_of(s.begin() + i, s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("the qubit run enumerates and decides every two-input oracle") {
  const RunResult r = run_cli("qubit-dj --m 2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "oracle_id,class,p_x0,decision,correct");
  CHECK(lines[1] == "0000,constant,1.00000000000e+00,constant,1");
  CHECK(lines[2] == "1111,constant,1.00000000000e+00,constant,1");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 5);
    CHECK(f[1] == (i <= 2 ? "constant" : "balanced"));
    CHECK(f[1] == f[3]);
    CHECK(f[4] == "1");
    CHECK(twelve_digit_scientific(f[2]));
  }
}

TEST_CASE("truth tables arrive literally, from files, and from presets") {
  const RunResult literal = run_cli("qubit-dj --oracle 1001");
  const RunResult preset = run_cli("qubit-dj --preset f4");
  CHECK(literal.exit_code == 0);
  CHECK(literal.out == preset.out);

  const std::string path = "cli_oracle_file.txt";
  std::ofstream(path) << "  0110\n";
  const RunResult from_file = run_cli("qubit-dj --oracle " + path);
  const RunResult inline_table = run_cli("qubit-dj --oracle 0110");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == inline_table.out);
  std::remove(path.c_str());
}

TEST_CASE("the method run prints the recorded exponents") {
  const RunResult deutsch = run_cli("method --method 2 --oracle 01 --n0 1000 --n 1100 --params zero");
  CHECK(deutsch.exit_code == 0);
  const auto dl = lines_of(deutsch.out);
  REQUIRE(dl.size() == 2);
  CHECK(dl[0] == "oracle_id,class,dims,log10_p,decision,correct");
  CHECK(dl[1] == "01,balanced,1000;1100,-1.86284959608e+03,balanced,1");

  const RunResult nonlinear = run_cli("method --method 2 --preset f1 --n 8 --n0 8");
  CHECK(lines_of(nonlinear.out).at(1) == "0011,balanced,8;8;8,-2.52148864844e+00,balanced,1");

  const RunResult linear = run_cli("method --method 2 --preset f4 --n 8 --n0 8");
  CHECK(lines_of(linear.out).at(1) == "1001,balanced,8;8;8,-inf,balanced,1");

  const RunResult parity = run_cli("method --method 1 --preset f6 --n 2");
  const auto pf = fields_of(lines_of(parity.out).at(1));
  REQUIRE(pf.size() == 6);
  CHECK(pf[2] == "1;2;2");
  CHECK(pf[4] == "balanced");
  CHECK(pf[5] == "1");
}

TEST_CASE("the qubit limit of both methods agrees with the reference decisions") {
  std::map<std::string, std::string> reference;
  for (const auto& line : lines_of(run_cli("qubit-dj --m 2").out)) {
    const auto f = fields_of(line);
    if (f.size() == 5 && f[0] != "oracle_id") reference[f[0]] = f[3];
  }
  REQUIRE(reference.size() == 8);
  for (const std::string method : {"1", "2"}) {
    const RunResult r = run_cli("method --method " + method + " --m 2");
    CHECK(r.exit_code == 0);
    for (const auto& line : lines_of(r.out)) {
      const auto f = fields_of(line);
      if (f.size() != 6 || f[0] == "oracle_id") continue;
      CHECK(f[2] == "1;1;1");
      CHECK(f[4] == reference.at(f[0]));
      CHECK(f[5] == "1");
    }
  }
}

TEST_CASE("curves carry the sentinel and twelve-digit samples") {
  const RunResult r = run_cli("curves --m 1 --n 30 --tau-grid 0:1:5");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "m,N1,N2,N3,tau,log10_value");
  CHECK(lines[1] == "1,30,,,0.00000000000e+00,0.00000000000e+00");
  CHECK(lines[3] == "1,30,,,5.00000000000e-01,-inf");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 6);
    CHECK(twelve_digit_scientific(f[4]));
    if (f[5] != "-inf") CHECK(twelve_digit_scientific(f[5]));
  }

  const RunResult even = run_cli("curves --m 2 --n 10 --tau-grid 0.5:0.5:1");
  const auto ef = fields_of(lines_of(even.out).at(1));
  CHECK(std::abs(std::stod(ef[5])) < 1e-12);  // p = 1 for even sizes at tau = 1/2

  const RunResult one_point = run_cli("curves --m 3 --n 3,4,5 --quantity eps --tau-grid 0.01:0.01:1");
  CHECK(one_point.exit_code == 0);
  CHECK(lines_of(one_point.out).size() == 2);
}

TEST_CASE("the fit lands in the recorded band and reports the recorded line") {
  const RunResult m2 = run_cli("fit --m 2 --n-grid 6,8,10,12,14,16");
  CHECK(m2.exit_code == 0);
  const auto lines = lines_of(m2.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "kind,n,tau_at_max,ln_eps_max,slope,intercept,residual_rms");
  CHECK(lines[1] == "point,6,8.33333333333e-02,-4.27964410534e+00,,,");
  const auto summary = fields_of(lines[7]);
  REQUIRE(summary.size() == 7);
  CHECK(summary[0] == "summary");
  CHECK(summary[4] == "-7.67327237283e-01");
  const double slope = std::stod(summary[4]);
  CHECK(slope >= -0.92);
  CHECK(slope <= -0.62);

  const RunResult m3 = run_cli("fit --m 3 --n-grid 6,8,10,12,14,16");
  CHECK(m3.exit_code == 0);
  const double slope3 = std::stod(fields_of(lines_of(m3.out).back())[4]);
  CHECK(slope3 >= -1.93);
  CHECK(slope3 <= -1.63);
}

TEST_CASE("decoherence rows carry the closed-form column") {
  const RunResult r = run_cli("decoherence --m 2 --n 8 --gamma-t-grid 0:1:2");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 17);  // 8 oracles, 2 exposures each
  CHECK(lines[0] == "oracle_id,class,gamma_t,signal,constant_signal,decision");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 6);
    const double gt = std::stod(f[2]);
    const double signal = std::stod(f[3]);
    const double closed = std::stod(f[4]);
    if (f[1] == "constant") {
      CHECK(std::abs(signal - closed) < 1e-9);  // simulated rows ride the closed form
      if (gt == 0.0) CHECK(std::abs(signal - 1.0) < 1e-12);
    } else if (gt == 0.0) {
      CHECK(signal < 1e-10);
    }
    if (gt == 1.0) CHECK(f[4] == "3.22246551340e-01");
  }
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run_cli("qubit-dj --oracle 0111").exit_code == 2);        // not constant or balanced
  CHECK(run_cli("qubit-dj --preset f9").exit_code == 2);          // unknown preset
  CHECK(run_cli("qubit-dj").exit_code == 2);                      // no oracle source
  CHECK(run_cli("curves --m 1 --n 4 --tau-grid nonsense").exit_code == 2);
  CHECK(run_cli("curves --m 1 --n 4 --tau-grid 0:1:0").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                              // a subcommand is required
  CHECK(run_cli("method --method 1 --preset f1 --n 4 --cap 10").exit_code == 3);
  CHECK(run_cli("method --method 1 --preset f1 --n 4", "EQCDJ_CAP=10 ").exit_code == 3);
  CHECK(run_cli("method --method 1 --preset f1 --n 4 --cap 100000", "EQCDJ_CAP=10 ").exit_code == 0);
  CHECK(run_cli("qubit-dj --m 1", "EQCDJ_CAP=zero ").exit_code == 2);
  CHECK(run_cli("decoherence --oracle 11101000 --n 8 --gamma-t-grid 0:0:1").exit_code == 3);
  CHECK(run_cli("fit --n-grid 7,9").exit_code == 4);
  CHECK(run_cli("fit --m 4 --n-grid 6,8,10,12,14,16").exit_code == 4);
  CHECK(run_cli("oracle-verify --preset f2 --draws 2 --tol 1e-20").exit_code == 1);
}

TEST_CASE("identical configuration gives byte-identical output") {
  const std::string args =
      "decoherence --preset f4 --method 2 --n 4 --n0 4 --params recommended "
      "--gamma-t-grid 0:0.1:3 --out ";
  CHECK(run_cli(args + "cli_det_a.csv").exit_code == 0);
  CHECK(run_cli(args + "cli_det_b.csv").exit_code == 0);
  CHECK(slurp("cli_det_a.csv") == slurp("cli_det_b.csv"));
  std::remove("cli_det_a.csv");
  std::remove("cli_det_b.csv");

  const std::string verify = "oracle-verify --m 2 --draws 5 --seed 42 --jobs 4 --out ";
  CHECK(run_cli(verify + "cli_det_c.csv").exit_code == 0);
  CHECK(run_cli(verify + "cli_det_d.csv").exit_code == 0);
  CHECK(slurp("cli_det_c.csv") == slurp("cli_det_d.csv"));
  std::remove("cli_det_c.csv");
  std::remove("cli_det_d.csv");
}

TEST_CASE("the config file fills flags and the command line wins") {
  std::ofstream("cli_config.ini") << "[curves]\nm=2\nn=4,4\nquantity=p\ntau-grid=0:1:9\n";
  const RunResult from_file = run_cli("curves --config cli_config.ini");
  const RunResult from_flags = run_cli("curves --m 2 --n 4,4 --quantity p --tau-grid 0:1:9");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == from_flags.out);

  const RunResult overridden = run_cli("curves --config cli_config.ini --tau-grid 0:1:3");
  const RunResult direct = run_cli("curves --m 2 --n 4,4 --tau-grid 0:1:3");
  CHECK(overridden.out == direct.out);
  std::remove("cli_config.ini");
}

TEST_CASE("oracle verification sweeps the parameter family") {
  const RunResult r = run_cli("oracle-verify --m 3 --draws 2 --out cli_verify.csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(slurp("cli_verify.csv"));
  REQUIRE(lines.size() == 1 + 72 * 3);  // 2 constants + 70 balanced, zero draw + 2 seeded
  CHECK(lines[0] == "oracle_id,class,draw,residual");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 4);
    CHECK(f[2] == std::to_string((i - 1) % 3));
    CHECK(std::stod(f[3]) < 1e-9);
  }
  std::remove("cli_verify.csv");
}

TEST_CASE("plot stubs reference their csv") {
  CHECK(run_cli("curves --m 1 --n 8 --tau-grid 0:1:3 --out cli_plot.csv --plot-script").exit_code == 0);
  const std::string stub = slurp("cli_plot.csv.plot.py");
  CHECK(stub.find("cli_plot.csv") != std::string::npos);
  CHECK(stub.find("matplotlib") != std::string::npos);
  CHECK(stub.find("log10_value") != std::string::npos);
  std::remove("cli_plot.csv");
  std::remove("cli_plot.csv.plot.py");
}

int main(int argc, char** argv) {
  doctest::Context context;
  std::vector<const char*> args;
  for (int i = 0; i < argc; ++i) {
    if (i == argc - 1 && argc > 1 && argv[i][0] != '-') {
      g_cli = argv[i];
      continue;
    }
    args.push_back(argv[i]);
  }
  if (g_cli.empty()) {
    const char* env = std::getenv("EQCDJ_CLI");
    if (env != nullptr) g_cli = env;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path to eqcdj>\n");
    return 64;
  }
  context.applyCommandLine(static_cast<int>(args.size()), args.data());
  return context.run();
}
