#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfd/spectral.hpp"
#include "sfd/system.hpp"

namespace sfd {

/// Sampled energy history of W' = A_h W.
///   times, energies, boundary_values (w_{N+1} at each sample time) have equal length;
///   step_gaps[i] = E_{i+1} - E_i + k dt |m_{N+1}|^2 with m the step midpoint state.
struct EnergyTrace {
    std::vector<double> times;
    std::vector<double> energies;
    std::vector<cplx> boundary_values;
    std::vector<double> step_gaps;
};

enum class Integrator {
    midpoint,  // implicit midpoint: per-step energy identity is exact
    modal,     // exact semigroup through the eigendecomposition of S A_h S^{-1}
};

const char* to_string(Integrator integrator);
Integrator parse_integrator(std::string_view name);

/// W+ = (I - dt/2 A)^{-1} (I + dt/2 A) W with the LU factors computed once.
class MidpointStepper {
public:
    MidpointStepper(const SemiDiscreteSystem& system, double dt);

    [[nodiscard]] CVector step(const CVector& w) const;
    [[nodiscard]] double dt() const { return dt_; }

private:
    SemiDiscreteSystem system_;
    double dt_;
    Eigen::PartialPivLU<DenseComplexMatrix> implicit_half_;
};

/// One midpoint step (factorizes on every call; use MidpointStepper in loops).
CVector step_midpoint(const SemiDiscreteSystem& system, const CVector& w, double dt);

/// W(t) = exp(t A_h) W0 evaluated through A_h's eigenbasis in the weighted
/// coordinates, where the basis is well conditioned.
class ModalPropagator {
public:
    ModalPropagator(const SemiDiscreteSystem& system, const CVector& w0);

    [[nodiscard]] CVector at(double t) const;

private:
    SemiDiscreteSystem system_;
    EigenPairs modes_;
    CVector coefficients_;
};

EnergyTrace simulate(const SemiDiscreteSystem& system, const CVector& w0, double dt,
                     double t_final, Integrator integrator = Integrator::midpoint);

/// -slope/2 of the least-squares line through ln E(t) on [t_start, t_end],
/// i.e. the state-norm decay rate omega in E ~ exp(-2 omega t).
double fit_decay_rate(const EnergyTrace& trace, double t_start, double t_end);

/// Complex standard normal entries, reproducible for a given seed.
CVector random_initial_state(int n, std::uint64_t seed);

/// sin(pi x_j) at x_1 .. x_{N+1}.
CVector sine_initial_state(const Mesh& mesh);

/// N+1 lines of "re,im" (or just "re"); blank lines, '#' comments and a
/// non-numeric header line are skipped.
CVector load_initial_state(const std::string& path, const Mesh& mesh);

}  // namespace sfd
