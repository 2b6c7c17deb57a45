#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtrans/constants.hpp"
#include "qtrans/grid.hpp"
#include "qtrans/scattering.hpp"

namespace qtrans {

enum class SolverKind { single, two_channel, joint_2d };

/// Full experiment description, parsed from a flat key = value file.
struct ScenarioSpec {
    std::string name = "scenario";

    // grid.*
    SpatialGrid grid{};

    // potential.*
    PotentialKind potential_kind = PotentialKind::double_barrier;
    double well_width = 10.0;
    double barrier_thickness = 2.0;
    double barrier_height = 0.5;

    // packet.*
    double packet_x0 = -100.0;
    double packet_sigma = 30.0;
    double packet_energy = 0.23;            ///< eV; <0 means "second resonance"
    Direction packet_direction = Direction::left_to_right;

    // photon.*
    bool photon_enabled = false;
    double hbar_omega = -1.0;               ///< eV; <0 means E2-E1 from resonances
    double alpha_ev_per_m = 2.5e7;          ///< converted once to eV/nm internally
    double coupling_half_width = -1.0;      ///< nm; <0 means potential active region
    int n_q = 128;
    double q_span_factor = 8.0;

    // scattering.* (zero or more events)
    struct EventSpec {
        ScatteringEvent event{};
        bool matched_from_packet = false;   ///< derive p_gamma from packet energy
    };
    std::vector<EventSpec> events;

    // basis.*
    double basis_e_min = 0.002;
    double basis_e_max = 1.5;
    double basis_de = 0.001;

    // run.*
    SolverKind solver = SolverKind::single;
    double t_end = 400.0;
    double dt = -1.0;                       ///< <0: 0.1 fs (0.2 fs for joint_2d)
    double snapshot_every = 10.0;
    double populations_every = 1.0;
    int trajectories = 2000;
    uint64_t seed = 12345;
    double ramo_length = -1.0;              ///< <0: full grid length
    bool absorbing_boundary = false;
    double absorbing_width = 40.0;
    double absorbing_strength = 0.1;
    bool emit_fields = true;
    bool emit_spectra = false;
    bool emit_current = true;

    PhysicalConstants constants{};

    double effective_dt() const { return dt > 0 ? dt : (solver == SolverKind::joint_2d ? 0.2 : 0.1); }

    /// Throws ConfigError naming the offending key on any inconsistency.
    void validate() const;

    static ScenarioSpec parse_file(const std::string& path);
    static ScenarioSpec parse_string(const std::string& text, const std::string& origin = "<string>");
};

} // namespace qtrans
