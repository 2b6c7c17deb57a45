#pragma once

#include <utility>

#include "qtrans/evolution.hpp"
#include "qtrans/field.hpp"
#include "qtrans/spectral.hpp"

namespace qtrans {

enum class TransitionModel { A, B };
enum class TransitionKind { absorption, emission };

/// A prescribed single-shot transition applied to the propagated field at t_s.
struct ScatteringEvent {
    double t_s = 0.0;                 ///< fs
    TransitionModel model = TransitionModel::A;
    TransitionKind kind = TransitionKind::absorption;
    double e_gamma = 0.0;             ///< eV (model A; also used to derive matched p_gamma)
    double p_gamma = 0.0;             ///< eV*fs/nm (model B)
    int n_ts = 1;                     ///< sub-steps for gradual application

    void validate() const;
};

/// Momentum increment that moves a packet of central energy `e_central` to
/// e_central + e_gamma: sqrt(2m(E+Eg)) - sqrt(2mE).
double matched_momentum_shift(const PhysicalConstants& pc, double e_central, double e_gamma);

struct TransitionReport {
    double pre_mean_energy = 0.0;       ///< folded <|E|> before, whole grid
    double post_mean_energy = 0.0;      ///< folded <|E|> after, whole grid
    double leaked_probability = 0.0;    ///< weight lost at the spectrum edges
    double negative_branch_weight = 0.0;///< of the post-event field, whole grid
};

/// Model with well-defined energies: decompose over the device eigenbasis,
/// translate the coefficient profile along |E| within each injection branch
/// (+E_gamma absorption, -E_gamma emission), drop what leaves the basis,
/// renormalize and synthesize.
std::pair<ComplexField1D, TransitionReport>
apply_model_a(const ComplexField1D& psi, const EnergyBasis& basis, const ScatteringEvent& event,
              int threads = 1);

/// Model with well-defined momenta: psi -> exp(i p_gamma x / hbar) psi.
/// |psi| is unchanged pointwise; the velocity field shifts by p_gamma/m*.
std::pair<ComplexField1D, TransitionReport>
apply_model_b(const ComplexField1D& psi, const EnergyBasis& basis, const ScatteringEvent& event,
              int threads = 1);

/// apply_model_b without spectral bookkeeping (no basis required).
ComplexField1D apply_momentum_phase(const ComplexField1D& psi, const SpatialGrid& grid,
                                    const PhysicalConstants& pc, double p_gamma);

/// Spread the transition over n_ts partial shifts interleaved with one
/// propagator step each.
ComplexField1D apply_gradual(const ComplexField1D& psi, const EnergyBasis* basis,
                             const ScatteringEvent& event, const Cn1dStepper& stepper,
                             int threads = 1);

} // namespace qtrans
