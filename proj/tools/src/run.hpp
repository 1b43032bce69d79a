// run.hpp — experiment configuration and the subcommand runners

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqcdj::cli {

// One bag of settings shared by every subcommand; each runner reads the
// fields its flags bind.  Grids stay as raw text so error messages can name
// the flag that carried them.
struct ExperimentConfig {
  std::string oracle_text;             // literal truth table or a file path
  std::string preset;                  // f1..f6, m3-entangled
  int enumerate_m = 0;                 // run every oracle on this many inputs
  std::vector<int> n;                  // particles per input ensemble (one value broadcasts)
  int n0 = 1;                          // particles in the answer ensemble
  int method = 1;                      // encoding: 1 parity, 2 coherent poles
  std::string params = "recommended";  // zero | recommended | JSON file
  std::string quantity = "p";          // curves: p | eps
  int order = 0;                       // curve or fit order m (0: per-command default)
  std::string tau_grid = "0:1:201";
  std::vector<int> n_grid;             // fit grid (empty: even 6..40)
  std::string gamma_t_grid = "0:1:11";
  int draws = 50;                      // oracle-verify random parameter draws
  double tol = 1e-9;                   // oracle-verify residual bound
  std::string out;                     // CSV path (empty: stdout)
  bool plot_script = false;            // also write <out>.plot.py
  std::uint32_t seed = 12345;
  std::int64_t cap = 0;                // dimension cap (0: per-path default)
  int jobs = 0;                        // worker bound (0: hardware concurrency)
};

int cmd_qubit_dj(const ExperimentConfig& cfg);
int cmd_method(const ExperimentConfig& cfg);
int cmd_curves(const ExperimentConfig& cfg);
int cmd_fit(const ExperimentConfig& cfg);
int cmd_decoherence(const ExperimentConfig& cfg);
int cmd_oracle_verify(const ExperimentConfig& cfg);

}  // namespace eqcdj::cli
