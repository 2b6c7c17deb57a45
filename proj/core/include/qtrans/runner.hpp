#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrans/observables.hpp"
#include "qtrans/scattering.hpp"
#include "qtrans/scenario.hpp"

namespace qtrans {

/// Per-dump diagnostics retained in memory for tests and the acceptance suite.
struct DumpRecord {
    double t = 0.0;
    double norm = 0.0;
    double energy = 0.0;           ///< <H> (two_channel) or <H_e> (single)
    double ks_x = 0.0;             ///< trajectories vs x-marginal density
    double ks_q = 0.0;             ///< 2D runs only
};

struct RunResult {
    std::string out_dir;
    std::string label;

    double e1 = 0.0, e2 = 0.0;     ///< resonances used (when the basis was built)
    PopulationSeries populations;
    std::vector<DumpRecord> dumps;
    std::vector<TransitionReport> transition_reports;
    std::vector<double> event_times;

    // final field(s), for cross-run comparisons
    ComplexField1D final_psi;          // single
    TwoChannelState final_two_channel; // two_channel / projected joint
    double final_outside_span = 0.0;   // joint runs: residual outside {psi0, psi1}
    double max_outside_span = 0.0;

    // whole-grid spectra around events (single runs with events)
    SpectralCoefficients spectrum_initial;     // t = 0
    SpectralCoefficients spectrum_pre_event;   // t_s^-
    SpectralCoefficients spectrum_post_event;  // t_s^+
    SpectralCoefficients spectrum_initial_active;
    SpectralCoefficients spectrum_pre_event_active;
    SpectralCoefficients spectrum_post_event_active;

    double max_ks_x = 0.0;
    double max_ks_q = 0.0;
    double initial_ks_x = 0.0;
    double norm_drift = 0.0;       ///< max |norm - norm(0)| over dumps
    double energy_drift_rel = 0.0; ///< closed runs: max relative <H> drift
};

/// Executes propagation, events, trajectories and observable extraction;
/// writes CSVs and summary.txt under out_dir. Deterministic given the seed.
RunResult run_scenario(const ScenarioSpec& spec, const std::string& out_dir, int threads = 1);

/// A builtin experiment: one or more labelled scenario runs.
struct BuiltinScenario {
    std::string name;
    std::vector<std::pair<std::string, ScenarioSpec>> runs;
};

std::vector<std::string> builtin_names();
BuiltinScenario builtin_scenario(const std::string& name);

/// Runs every labelled sub-run of a builtin into out_dir/<label>.
std::vector<RunResult> run_builtin(const BuiltinScenario& b, const std::string& out_dir,
                                   int threads = 1);

} // namespace qtrans
