// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

// mbc: many-body coherence of partially distinguishable particles.
//
// Single evaluations (`coherence`), sweeps over thermal and photon scenarios
// (`thermal`, `photon`, `asymptote`), bulk figure datasets (`fig-thermal`,
// `fig-photon`) and the oracle-vs-spectral self check (`oracle-check`).
// All output is deterministic: fixed row order, fixed float formatting.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mbc/coherence.hpp"
#include "mbc/density_matrix.hpp"
#include "mbc/photon.hpp"
#include "mbc/spectrum.hpp"
#include "mbc/thermal.hpp"
#include "parallel.hpp"
#include "table.hpp"

namespace fs = std::filesystem;
using mbctool::Cell;
using mbctool::Table;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> logspace(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  const double l0 = std::log10(lo), l1 = std::log10(hi);
  for (int i = 0; i < points; ++i) {
    grid.push_back(std::pow(10.0, l0 + (l1 - l0) * i / (points - 1)));
  }
  return grid;
}

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<int> log_int_grid(int lo, int hi, int points) {
  std::vector<int> out;
  for (double v : logspace(lo, hi, points)) {
    const int n = static_cast<int>(std::llround(v));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

struct SpectrumInput {
  std::vector<double> eigenvalues;
  std::string file;

  mbc::Spectrum resolve() const {
    if (!eigenvalues.empty() && !file.empty()) {
      throw mbc::DomainError("give either --eigenvalues or --spectrum-file, not both");
    }
    if (!eigenvalues.empty()) return mbc::Spectrum(eigenvalues);
    if (!file.empty()) return mbc::Spectrum::load(file);
    throw mbc::DomainError("a spectrum is required: --eigenvalues or --spectrum-file");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--eigenvalues", eigenvalues,
                    "comma-separated eigenvalues (normalized on load)")
        ->delimiter(',');
    cmd->add_option("--spectrum-file", file,
                    "text file, one eigenvalue per line, '#' comments");
  }
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  int jobs = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", path, "output file (default: stdout)");
    cmd->add_option("--jobs", jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
  }

  void emit(const Table& table) const {
    if (path.empty()) {
      if (format == "csv") {
        mbctool::write_csv(table, std::cout);
      } else {
        mbctool::write_json(table, std::cout);
      }
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mbc::IoError("cannot write output file: " + path);
    if (format == "csv") {
      mbctool::write_csv(table, out);
    } else {
      mbctool::write_json(table, out);
    }
    out.flush();
    if (!out) throw mbc::IoError("failed while writing output file: " + path);
  }
};

void write_figure_file(const Table& table, const fs::path& dir, const std::string& stem,
                       const std::string& format) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / (stem + (format == "csv" ? ".csv" : ".json"));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mbc::IoError("cannot write output file: " + path.string());
  if (format == "csv") {
    mbctool::write_csv(table, out);
  } else {
    mbctool::write_json(table, out);
  }
  out.flush();
  if (!out) throw mbc::IoError("failed while writing output file: " + path.string());
}

struct SingleValue {
  double value;
  double log10_value;
  std::string method;
  int n;
  int k;
};

void print_single(const SingleValue& v) {
  const bool underflowed = v.value == 0.0 && std::isfinite(v.log10_value);
  std::cout << mbctool::format_double(underflowed ? 0.0 : v.value) << '\n';
  std::cout << "# method: " << v.method << '\n';
  std::cout << "# log10_W_C: " << mbctool::format_double(v.log10_value) << '\n';
  std::cout << "# N: " << v.n << '\n';
  std::cout << "# k: " << v.k << '\n';
  if (underflowed) std::cout << "# underflow: true\n";
}

/// Asymptotic value of a spectrum: the exact symmetric-subspace dimension
/// ratio when every eigenvalue is degenerate with the leading one (the
/// maximally mixed case), the exponential thermodynamic-limit form otherwise.
SingleValue asymptote_value(const mbc::Spectrum& spectrum, int n) {
  if (spectrum.max() >= 1.0 - 1e-12) {
    throw mbc::RegimeError(
        "asymptote undefined for lambda_max = 1 (indistinguishable particles; "
        "the exact coherence is 1)");
  }
  if (spectrum.degeneracy() == static_cast<int>(spectrum.size())) {
    const int m = static_cast<int>(spectrum.size());
    const double log10_value = mbc::coherence_maximally_mixed_log10(m, n);
    return {mbc::coherence_maximally_mixed(m, n), log10_value, "asymptote", n, n};
  }
  const double log10_value = mbc::coherence_asymptote_log10(spectrum, n);
  return {mbc::coherence_asymptote(spectrum, n), log10_value, "asymptote", n, n};
}

SingleValue faint_value(const mbc::Spectrum& spectrum, int n) {
  const double epsilon = 1.0 - spectrum.max();
  const double value = mbc::coherence_faint(epsilon, n);
  return {value, n * std::log10(1.0 - epsilon), "faint", n, n};
}

SingleValue from_result(const mbc::CoherenceResult& r) {
  return {r.value, r.log10_value, std::string(to_string(r.method)), r.particle_count,
          r.order};
}

// ---------------------------------------------------------------------------
// coherence: single evaluation
// ---------------------------------------------------------------------------

struct CoherenceCmd {
  SpectrumInput spectrum;
  int n = 0;
  int k = 0;
  std::string method = "exact";

  int run() const {
    const mbc::Spectrum spec = spectrum.resolve();
    const int order = k > 0 ? k : n;
    SingleValue out;
    if (method == "exact" || method == "spectral") {
      out = from_result(k > 0 ? mbc::coherence_reduced(spec, n, k)
                              : mbc::coherence_spectral(spec, n));
    } else if (method == "asymptote") {
      out = asymptote_value(spec, order);
      out.n = n;
    } else {
      out = faint_value(spec, order);
      out.n = n;
    }
    print_single(out);
    return 0;
  }
};

// ---------------------------------------------------------------------------
// thermal / photon / asymptote sweeps
// ---------------------------------------------------------------------------

struct ThermalCmd {
  std::vector<double> kbt;
  std::vector<int> n_list;
  std::vector<double> targets;
  int levels = 4;
  std::string method = "spectral";
  OutputOptions output;

  int run() const {
    if (!targets.empty()) {
      Table table;
      table.columns = {"W_target", "N", "kbT_over_dE"};
      for (double w : targets) {
        for (int n : n_list) {
          table.add_row({w, static_cast<std::int64_t>(n), mbc::admissible_temperature(w, n)});
        }
      }
      output.emit(table);
      return 0;
    }
    if (kbt.empty()) throw mbc::DomainError("thermal sweep needs --kbt (or --target)");
    Table table;
    table.columns = {"kbT_over_dE", "N", "W_C", "log10_W_C", "method", "underflow"};
    std::vector<std::vector<std::vector<Cell>>> blocks(kbt.size());
    mbctool::parallel_for(kbt.size(), output.jobs, [&](std::size_t i) {
      const mbc::ThermalConfig config{levels, kbt[i]};
      auto& block = blocks[i];
      for (int n : n_list) {
        SingleValue v;
        if (method == "faint" || method == "low-t") {
          const double value = mbc::low_temperature_approx(config, n);
          // direct log10 stays finite when the power itself underflows
          const double log10_value =
              n * std::log10(1.0 - std::exp(-1.0 / kbt[i]));
          v = {value, log10_value, "faint", n, n};
        } else if (method == "asymptote") {
          v = asymptote_value(mbc::thermal_spectrum(config), n);
        } else {
          v = from_result(mbc::coherence_spectral(mbc::thermal_spectrum(config), n));
        }
        block.push_back({kbt[i], static_cast<std::int64_t>(n), v.value, v.log10_value,
                         v.method,
                         static_cast<std::int64_t>(
                             v.value == 0.0 && std::isfinite(v.log10_value) ? 1 : 0)});
      }
    });
    for (auto& block : blocks) {
      for (auto& row : block) table.add_row(std::move(row));
    }
    output.emit(table);
    return 0;
  }
};

struct PhotonCmd {
  std::vector<double> sigma_delta;
  std::vector<int> n_list;
  std::vector<double> targets;
  int quad_points = 200;
  double window = 8.0;
  std::string density_file;
  std::string method = "spectral";
  OutputOptions output;

  mbc::PhotonConfig config(double sd) const {
    mbc::PhotonConfig cfg{sd, quad_points, window, std::nullopt};
    if (!density_file.empty()) cfg.density = mbc::TabulatedDensity::load(density_file);
    return cfg;
  }

  int run() const {
    if (!targets.empty()) {
      Table table;
      table.columns = {"W_target", "N", "sigma_delta", "sigma_delta_simplified"};
      for (double w : targets) {
        for (int n : n_list) {
          const auto j = mbc::admissible_jitter(w, n);
          table.add_row({w, static_cast<std::int64_t>(n), j.full, j.simplified});
        }
      }
      output.emit(table);
      return 0;
    }
    if (sigma_delta.empty()) {
      throw mbc::DomainError("photon sweep needs --sigma-delta (or --target)");
    }
    Table table;
    table.columns = {"sigma_delta", "N", "W_C", "log10_W_C", "method", "underflow"};
    std::vector<std::vector<std::vector<Cell>>> blocks(sigma_delta.size());
    mbctool::parallel_for(sigma_delta.size(), output.jobs, [&](std::size_t i) {
      const double sd = sigma_delta[i];
      auto& block = blocks[i];
      // one kernel diagonalization per jitter value, shared across N
      std::optional<mbc::Spectrum> spec;
      if (method == "spectral" || method == "exact" || method == "asymptote") {
        spec = mbc::photon_spectrum(config(sd));
      }
      for (int n : n_list) {
        SingleValue v;
        if (method == "faint") {
          const double value = mbc::faint_jitter_approx(sd, n);
          v = {value, n * std::log10(1.0 - sd * sd), "faint", n, n};
        } else if (method == "asymptote") {
          v = asymptote_value(*spec, n);
        } else {
          v = from_result(mbc::coherence_spectral(*spec, n));
        }
        block.push_back({sd, static_cast<std::int64_t>(n), v.value, v.log10_value,
                         v.method,
                         static_cast<std::int64_t>(
                             v.value == 0.0 && std::isfinite(v.log10_value) ? 1 : 0)});
      }
    });
    for (auto& block : blocks) {
      for (auto& row : block) table.add_row(std::move(row));
    }
    output.emit(table);
    return 0;
  }
};

struct AsymptoteCmd {
  SpectrumInput spectrum;
  std::vector<int> n_list;
  OutputOptions output;

  int run() const {
    const mbc::Spectrum spec = spectrum.resolve();
    Table table;
    table.columns = {"N", "W_C_asymptote", "log10_W_C_asymptote"};
    for (int n : n_list) {
      const SingleValue v = asymptote_value(spec, n);
      table.add_row({static_cast<std::int64_t>(n), v.value, v.log10_value});
    }
    output.emit(table);
    return 0;
  }
};

// ---------------------------------------------------------------------------
// figure datasets
// ---------------------------------------------------------------------------

struct FigThermalCmd {
  std::string output_dir = ".";
  std::string format = "csv";
  int levels = 4;
  int points = 61;
  std::vector<int> n_list = {2, 5, 10, 20, 50, 100};
  std::vector<double> targets = {0.5, 0.9, 0.99};
  int jobs = 1;

  int run() const {
    // (b) coherence vs temperature with the infinite-temperature floor
    {
      Table table;
      table.columns = {"kbT_over_dE", "N", "W_C", "W_C_infT"};
      const auto grid = logspace(1e-2, 10.0, points);
      std::vector<std::vector<std::vector<Cell>>> blocks(grid.size());
      mbctool::parallel_for(grid.size(), jobs, [&](std::size_t i) {
        const mbc::Spectrum spec = mbc::thermal_spectrum({levels, grid[i]});
        for (int n : n_list) {
          blocks[i].push_back({grid[i], static_cast<std::int64_t>(n),
                               mbc::coherence_spectral(spec, n).value,
                               mbc::coherence_maximally_mixed(levels, n)});
        }
      });
      for (auto& block : blocks) {
        for (auto& row : block) table.add_row(std::move(row));
      }
      write_figure_file(table, output_dir, "fig1b", format);
    }

    // (c) admissible temperature vs N at fixed target coherences
    {
      Table table;
      table.columns = {"N", "W_target", "kbT_over_dE"};
      for (int n : int_range(2, 100)) {
        for (double w : targets) {
          table.add_row({static_cast<std::int64_t>(n), w, mbc::admissible_temperature(w, n)});
        }
      }
      write_figure_file(table, output_dir, "fig1c", format);
    }

    // (d) zoom with the low-temperature decay overlay
    {
      Table table;
      table.columns = {"kbT_over_dE", "N", "W_C", "W_C_lowT"};
      const auto grid = logspace(0.05, 1.0, 41);
      const std::vector<int> ns = {2, 10, 50, 100};
      for (double kbt : grid) {
        const mbc::Spectrum spec = mbc::thermal_spectrum({levels, kbt});
        for (int n : ns) {
          const double low = kbt < mbc::kLowTemperatureLimit
                                 ? mbc::low_temperature_approx({levels, kbt}, n)
                                 : kNan;
          table.add_row({kbt, static_cast<std::int64_t>(n),
                         mbc::coherence_spectral(spec, n).value, low});
        }
      }
      write_figure_file(table, output_dir, "fig1d", format);
    }

    // (e) decay in N with the thermodynamic-limit asymptote
    {
      Table table;
      table.columns = {"kbT_over_dE",       "N",        "W_C",
                       "W_C_asymptote",     "log10_W_C", "log10_W_C_asymptote",
                       "underflow"};
      for (double kbt : {0.3, 0.5, 1.0}) {
        const mbc::Spectrum spec = mbc::thermal_spectrum({levels, kbt});
        for (int n : int_range(2, 100)) {
          const auto r = mbc::coherence_spectral(spec, n);
          table.add_row({kbt, static_cast<std::int64_t>(n), r.value,
                         mbc::coherence_asymptote(spec, n), r.log10_value,
                         mbc::coherence_asymptote_log10(spec, n),
                         static_cast<std::int64_t>(r.underflowed() ? 1 : 0)});
        }
      }
      write_figure_file(table, output_dir, "fig1e", format);
    }
    return 0;
  }
};

struct FigPhotonCmd {
  std::string output_dir = ".";
  std::string format = "csv";
  int points = 61;
  int quad_points = 200;
  std::vector<int> n_list = {2, 3, 4, 5, 6, 7, 8, 9, 10, 100};
  std::vector<double> targets = {0.5, 0.9, 0.99};
  int jobs = 1;

  int run() const {
    // (b) coherence vs jitter with the faint-decay overlay
    {
      Table table;
      table.columns = {"sigma_delta", "N", "W_C", "W_C_faint"};
      const auto grid = logspace(1e-2, 10.0, points);
      std::vector<std::vector<std::vector<Cell>>> blocks(grid.size());
      mbctool::parallel_for(grid.size(), jobs, [&](std::size_t i) {
        const double sd = grid[i];
        const mbc::Spectrum spec = mbc::photon_spectrum({sd, quad_points, 8.0, std::nullopt});
        for (int n : n_list) {
          const double faint = sd < mbc::kFaintJitterLimit
                                   ? mbc::faint_jitter_approx(sd, n)
                                   : kNan;
          blocks[i].push_back({sd, static_cast<std::int64_t>(n),
                               mbc::coherence_spectral(spec, n).value, faint});
        }
      });
      for (auto& block : blocks) {
        for (auto& row : block) table.add_row(std::move(row));
      }
      write_figure_file(table, output_dir, "fig2b", format);
    }

    // (c) admissible jitter vs N, full and power-law forms
    {
      Table table;
      table.columns = {"N", "W_target", "sigma_delta", "sigma_delta_simplified"};
      for (int n : log_int_grid(2, 1000, points)) {
        for (double w : targets) {
          const auto j = mbc::admissible_jitter(w, n);
          table.add_row({static_cast<std::int64_t>(n), w, j.full, j.simplified});
        }
      }
      write_figure_file(table, output_dir, "fig2c", format);
    }

    // (d) decay in N at fixed jitter
    {
      Table table;
      table.columns = {"sigma_delta", "N", "W_C", "log10_W_C", "underflow"};
      const std::vector<double> sds = {0.2, 0.3, 0.5, 1.0};
      std::vector<std::vector<std::vector<Cell>>> blocks(sds.size());
      mbctool::parallel_for(sds.size(), jobs, [&](std::size_t i) {
        const mbc::Spectrum spec =
            mbc::photon_spectrum({sds[i], quad_points, 8.0, std::nullopt});
        for (int n : int_range(2, 150)) {
          const auto r = mbc::coherence_spectral(spec, n);
          blocks[i].push_back({sds[i], static_cast<std::int64_t>(n), r.value,
                               r.log10_value,
                               static_cast<std::int64_t>(r.underflowed() ? 1 : 0)});
        }
      });
      for (auto& block : blocks) {
        for (auto& row : block) table.add_row(std::move(row));
      }
      write_figure_file(table, output_dir, "fig2d", format);
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------
// oracle-check
// ---------------------------------------------------------------------------

struct OracleCheckCmd {
  int n_max = 5;
  int m_max = 3;
  int trials = 50;
  std::uint64_t seed = 1;

  int run() const {
    if (n_max < 2 || n_max > 6) {
      throw mbc::SizeLimitError("oracle check requires 2 <= --n-max <= 6");
    }
    if (m_max < 1 || m_max > 3) {
      throw mbc::SizeLimitError("oracle check requires 1 <= --m-max <= 3");
    }
    if (trials < 0) throw mbc::DomainError("--trials must be non-negative");
    if (trials == 0) {
      std::cout << "warning: 0 trials requested, vacuous pass\n";
      return 0;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_m(1, m_max);
    std::uniform_int_distribution<int> pick_n(2, n_max);
    std::uniform_real_distribution<double> unit(0.01, 1.0);

    double worst = 0.0;
    std::vector<double> worst_spectrum;
    int worst_n = 0;
    for (int t = 0; t < trials; ++t) {
      const int m = pick_m(rng);
      const int n = pick_n(rng);
      std::vector<double> values(static_cast<std::size_t>(m));
      for (auto& v : values) v = unit(rng);
      const mbc::Spectrum spec(values);
      const auto rho = mbc::product_state(mbc::DensityMatrix::diagonal(spec), n);
      const double dev = std::abs(mbc::coherence_oracle(rho, n).value -
                                  mbc::coherence_spectral(spec, n).value);
      if (dev > worst) {
        worst = dev;
        worst_spectrum = spec.values();
        worst_n = n;
      }
    }
    std::cout << "oracle-check: trials=" << trials << " seed=" << seed
              << " n-max=" << n_max << " m-max=" << m_max << '\n';
    std::cout << "max |oracle - spectral| = " << mbctool::format_double(worst) << '\n';
    if (worst < 1e-10) {
      std::cout << "PASS\n";
      return 0;
    }
    std::cout << "FAIL at N=" << worst_n << " spectrum =";
    for (double v : worst_spectrum) std::cout << ' ' << mbctool::format_double(v);
    std::cout << '\n';
    return 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"many-body coherence of partially distinguishable bosons/fermions"};
  app.require_subcommand(1);

  CoherenceCmd coherence;
  auto* coherence_cmd = app.add_subcommand("coherence", "evaluate W_C for a spectrum");
  coherence.spectrum.attach(coherence_cmd);
  coherence_cmd->add_option("--n", coherence.n, "particle count N")->required();
  coherence_cmd->add_option("--k", coherence.k, "reduced coherence order k (2..N)");
  coherence_cmd->add_option("--method", coherence.method, "evaluation method")
      ->check(CLI::IsMember({"exact", "spectral", "asymptote", "faint"}));

  ThermalCmd thermal;
  auto* thermal_cmd =
      app.add_subcommand("thermal", "thermal-atom sweep: W_C over (kbT, N)");
  thermal_cmd->add_option("--kbt", thermal.kbt, "kB*T/dE values")->delimiter(',');
  thermal_cmd->add_option("--n", thermal.n_list, "particle counts")
      ->delimiter(',')
      ->required();
  thermal_cmd->add_option("--target", thermal.targets,
                          "target coherences: emit admissible temperatures instead")
      ->delimiter(',');
  thermal_cmd->add_option("--levels", thermal.levels, "internal levels m");
  thermal_cmd->add_option("--method", thermal.method, "evaluation method")
      ->check(CLI::IsMember({"exact", "spectral", "asymptote", "faint", "low-t"}));
  thermal.output.attach(thermal_cmd);

  PhotonCmd photon;
  auto* photon_cmd =
      app.add_subcommand("photon", "photon arrival-time sweep: W_C over (sigma*Delta, N)");
  photon_cmd->add_option("--sigma-delta", photon.sigma_delta, "sigma*Delta values")
      ->delimiter(',');
  photon_cmd->add_option("--n", photon.n_list, "particle counts")
      ->delimiter(',')
      ->required();
  photon_cmd->add_option("--target", photon.targets,
                         "target coherences: emit admissible jitters instead")
      ->delimiter(',');
  photon_cmd->add_option("--quad-points", photon.quad_points, "quadrature nodes");
  photon_cmd->add_option("--window", photon.window, "quadrature window halfwidth (sigma)");
  photon_cmd->add_option("--density-file", photon.density_file,
                         "tabulated arrival-time density (t, P(t) rows)");
  photon_cmd->add_option("--method", photon.method, "evaluation method")
      ->check(CLI::IsMember({"exact", "spectral", "asymptote", "faint"}));
  photon.output.attach(photon_cmd);

  AsymptoteCmd asymptote;
  auto* asymptote_cmd =
      app.add_subcommand("asymptote", "thermodynamic-limit asymptote over N");
  asymptote.spectrum.attach(asymptote_cmd);
  asymptote_cmd->add_option("--n", asymptote.n_list, "particle counts")
      ->delimiter(',')
      ->required();
  asymptote.output.attach(asymptote_cmd);

  FigThermalCmd fig_thermal;
  auto* fig_thermal_cmd = app.add_subcommand(
      "fig-thermal", "emit the thermal-scenario datasets fig1b..fig1e");
  fig_thermal_cmd->add_option("--output", fig_thermal.output_dir, "output directory");
  fig_thermal_cmd->add_option("--format", fig_thermal.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  fig_thermal_cmd->add_option("--levels", fig_thermal.levels, "internal levels m");
  fig_thermal_cmd->add_option("--points", fig_thermal.points, "temperature grid points");
  fig_thermal_cmd->add_option("--n", fig_thermal.n_list, "N curves for fig1b")
      ->delimiter(',');
  fig_thermal_cmd->add_option("--target", fig_thermal.targets, "coherence targets for fig1c")
      ->delimiter(',');
  fig_thermal_cmd->add_option("--jobs", fig_thermal.jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  FigPhotonCmd fig_photon;
  auto* fig_photon_cmd = app.add_subcommand(
      "fig-photon", "emit the photon-scenario datasets fig2b..fig2d");
  fig_photon_cmd->add_option("--output", fig_photon.output_dir, "output directory");
  fig_photon_cmd->add_option("--format", fig_photon.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  fig_photon_cmd->add_option("--points", fig_photon.points, "jitter grid points");
  fig_photon_cmd->add_option("--quad-points", fig_photon.quad_points, "quadrature nodes");
  fig_photon_cmd->add_option("--n", fig_photon.n_list, "N curves for fig2b")
      ->delimiter(',');
  fig_photon_cmd->add_option("--target", fig_photon.targets, "coherence targets for fig2c")
      ->delimiter(',');
  fig_photon_cmd->add_option("--jobs", fig_photon.jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  OracleCheckCmd oracle_check;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "verify the S_N oracle against the spectral path");
  oracle_cmd->add_option("--n-max", oracle_check.n_max, "largest particle count (<= 6)");
  oracle_cmd->add_option("--m-max", oracle_check.m_max, "largest spectrum size (<= 3)");
  oracle_cmd->add_option("--trials", oracle_check.trials, "random spectra to test");
  oracle_cmd->add_option("--seed", oracle_check.seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coherence_cmd->parsed()) return coherence.run();
    if (thermal_cmd->parsed()) return thermal.run();
    if (photon_cmd->parsed()) return photon.run();
    if (asymptote_cmd->parsed()) return asymptote.run();
    if (fig_thermal_cmd->parsed()) return fig_thermal.run();
    if (fig_photon_cmd->parsed()) return fig_photon.run();
    if (oracle_cmd->parsed()) return oracle_check.run();
  } catch (const mbc::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mbc::DiscretizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const mbc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const mbc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
