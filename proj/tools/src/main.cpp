// main.cpp — eqcdj command line: flags, config file, exit-code mapping

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eqcdj/errors.hpp"
#include "run.hpp"

namespace {

// --cap wins over the environment; zero leaves each path on its own default.
std::int64_t cap_from_env() {
  const char* raw = std::getenv("EQCDJ_CAP");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0)
    throw eqcdj::validation_error("EQCDJ_CAP must be a positive integer");
  return value;
}

void add_oracle_flags(CLI::App* sub, eqcdj::cli::ExperimentConfig& cfg) {
  auto* oracle =
      sub->add_option("--oracle", cfg.oracle_text,
                      "Truth table like 0110, or a path to a file holding one");
  auto* preset = sub->add_option("--preset", cfg.preset,
                                 "Named oracle: f1..f6 (two inputs) or m3-entangled");
  auto* all = sub->add_option(
      "--m", cfg.enumerate_m, "Run every constant and balanced oracle on this many inputs");
  oracle->excludes(preset)->excludes(all);
  preset->excludes(all);
}

void add_dims_flags(CLI::App* sub, eqcdj::cli::ExperimentConfig& cfg) {
  sub->add_option("--n", cfg.n, "Particles per input ensemble; one value broadcasts")
      ->delimiter(',');
  sub->add_option("--n0", cfg.n0, "Particles in the answer ensemble")->capture_default_str();
}

void add_params_flag(CLI::App* sub, eqcdj::cli::ExperimentConfig& cfg) {
  sub->add_option("--params", cfg.params,
                  "Free integers j_x: zero, recommended, or a JSON file with j_map/j_const")
      ->capture_default_str();
}

void add_common_flags(CLI::App* sub, eqcdj::cli::ExperimentConfig& cfg) {
  sub->add_option("--out", cfg.out, "Write the CSV here instead of stdout");
  sub->add_option("--seed", cfg.seed, "Random seed for parameter draws")->capture_default_str();
  sub->add_option("--cap", cfg.cap,
                  "State-dimension cap; overrides EQCDJ_CAP and the built-in default");
  sub->add_option("--jobs", cfg.jobs, "Worker bound for sweeps (0: hardware concurrency)");
}

void add_plot_flag(CLI::App* sub, eqcdj::cli::ExperimentConfig& cfg) {
  sub->add_flag("--plot-script", cfg.plot_script,
                "Also write a matplotlib stub next to the CSV (needs --out)");
}

}  // namespace

int main(int argc, char** argv) {
  eqcdj::cli::ExperimentConfig cfg;
  CLI::App app{"Deutsch-Jozsa on particle ensembles: exact runs, error curves, scaling fits"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI file with one [subcommand] section per command");
  app.footer(
      "Exit codes: 0 success, 1 failed check, 2 invalid input, 3 capacity cap, 4 grid "
      "precondition.\n"
      "EQCDJ_CAP in the environment overrides the default dimension cap; --cap wins over "
      "both.\n"
      "Config-file values fill in only the flags the command line leaves unset.");

  int rc = 0;
  try {
    cfg.cap = cap_from_env();

    auto* qubit = app.add_subcommand(
        "qubit-dj", "Single-particle reference circuit over one oracle or a full enumeration");
    add_oracle_flags(qubit, cfg);
    add_common_flags(qubit, cfg);
    qubit->callback([&] { rc = eqcdj::cli::cmd_qubit_dj(cfg); });

    auto* method = app.add_subcommand(
        "method", "Ensemble run: parity encoding (1) or coherent-pole encoding (2)");
    add_oracle_flags(method, cfg);
    add_dims_flags(method, cfg);
    add_params_flag(method, cfg);
    method->add_option("--method", cfg.method, "Encoding: 1 parity, 2 coherent poles")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    add_common_flags(method, cfg);
    method->callback([&] { rc = eqcdj::cli::cmd_method(cfg); });

    auto* curves = app.add_subcommand(
        "curves", "Sample the return probability p or the error curve eps over a tau grid");
    curves->add_option("--m", cfg.order, "Curve order: number of input ensembles (default 1)");
    curves->add_option("--n", cfg.n, "Particles per ensemble; one value broadcasts")
        ->delimiter(',');
    curves->add_option("--quantity", cfg.quantity, "p (stay probability) or eps (flip error)")
        ->capture_default_str();
    curves->add_option("--tau-grid", cfg.tau_grid, "Sweep axis as start:stop:count")
        ->capture_default_str();
    add_common_flags(curves, cfg);
    add_plot_flag(curves, cfg);
    curves->callback([&] { rc = eqcdj::cli::cmd_curves(cfg); });

    auto* fit = app.add_subcommand(
        "fit", "Fit ln(max eps) against N over an even grid; exit 0 inside the slope band");
    fit->add_option("--m", cfg.order, "Fit order: 2 or 3 (default 2)");
    fit->add_option("--n-grid", cfg.n_grid, "Comma list of even ensemble sizes (default 6..40)")
        ->delimiter(',');
    add_common_flags(fit, cfg);
    add_plot_flag(fit, cfg);
    fit->callback([&] { rc = eqcdj::cli::cmd_fit(cfg); });

    auto* deco = app.add_subcommand(
        "decoherence", "Sweep collective dephasing exposure and read the class signal");
    add_oracle_flags(deco, cfg);
    add_dims_flags(deco, cfg);
    add_params_flag(deco, cfg);
    deco->add_option("--method", cfg.method, "Encoding: 1 parity, 2 coherent poles")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();
    deco->add_option("--gamma-t-grid", cfg.gamma_t_grid, "Exposure axis as start:stop:count")
        ->capture_default_str();
    add_common_flags(deco, cfg);
    add_plot_flag(deco, cfg);
    deco->callback([&] { rc = eqcdj::cli::cmd_decoherence(cfg); });

    auto* verify = app.add_subcommand(
        "oracle-verify", "Check exp(-iH) against the oracle permutation over parameter draws");
    add_oracle_flags(verify, cfg);
    verify->add_option("--draws", cfg.draws, "Seeded random parameter draws after the zero draw")
        ->capture_default_str();
    verify->add_option("--tol", cfg.tol, "Largest acceptable residual")->capture_default_str();
    add_common_flags(verify, cfg);
    verify->callback([&] { rc = eqcdj::cli::cmd_oracle_verify(cfg); });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const eqcdj::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const eqcdj::grid_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const eqcdj::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
