#pragma once

#include <optional>
#include <vector>

#include "sfd/execution.hpp"
#include "sfd/system.hpp"

namespace sfd {

/// Dense eigensolvers refuse matrices larger than this.
inline constexpr Eigen::Index kMaxEigenDimension = 2048;

struct EigenPairs {
    CVector values;
    DenseComplexMatrix vectors;  // unit 2-norm columns
};

/// All eigenvalues with multiplicity (balancing, Hessenberg reduction, shifted QR).
CVector eigenvalues(const DenseComplexMatrix& a);

/// Eigenvalues plus right eigenvectors.
EigenPairs eigenpairs(const DenseComplexMatrix& a);

/// max_j ||A v_j - lambda_j v_j|| / ||A||_F.
double max_eigen_residual(const DenseComplexMatrix& a, const EigenPairs& pairs,
                          Execution exec = Execution::parallel);

struct SpectrumReport {
    Scheme scheme{};
    int n = 0;
    double k = 0.0;
    std::vector<cplx> eigenvalues;
    double abscissa = 0.0;            // max Re(lambda)
    double max_eigen_residual = 0.0;  // relative to ||A||_F
};

/// Spectrum of the generator with residual certification; throws
/// NumericalError when a residual exceeds tol * ||A||.
SpectrumReport spectral_abscissa(const SemiDiscreteSystem& system, double tol = 1e-8,
                                 Execution exec = Execution::parallel);

/// || (i beta I - A_h)^{-1} || in the state norm, evaluated as
/// 1 / sigma_min(i beta I - S A_h S^{-1}).
double resolvent_norm(const SemiDiscreteSystem& system, double beta);

/// Sampling plan for the imaginary axis. Linear grid on [beta_min, beta_max],
/// log-spaced tails 10^0 .. 10^log_decades on both signs, and, when enabled,
/// the imaginary parts of the generator's eigenvalues inside that range
/// (resolvent peaks sit there).
struct SweepGrid {
    double beta_min = 0.0;
    double beta_max = 0.0;
    int linear_steps = 201;
    int log_decades = 6;
    int points_per_decade = 4;
    bool anchor_eigenvalues = true;

    /// Symmetric range +-2 (pi (N+1))^2, which covers the reach of the
    /// physical part of the discrete spectrum.
    static SweepGrid defaults(int n);
};

/// Sorted, duplicate-free evaluation points for `grid`.
std::vector<double> sweep_points(const SemiDiscreteSystem& system, const SweepGrid& grid);

struct ResolventSweepReport {
    Scheme scheme{};
    int n = 0;
    double k = 0.0;
    std::vector<double> beta_grid;
    std::vector<double> norms;
    double sup_norm = 0.0;
    double argmax_beta = 0.0;
};

ResolventSweepReport resolvent_sweep(const SemiDiscreteSystem& system, const SweepGrid& grid,
                                     Execution exec = Execution::parallel);

/// Sweep over caller-supplied points (evaluated in the given order).
ResolventSweepReport resolvent_sweep(const SemiDiscreteSystem& system,
                                     const std::vector<double>& betas,
                                     Execution exec = Execution::parallel);

struct UniformityRow {
    int n = 0;
    double h = 0.0;
    double abscissa_or = 0.0;
    double abscissa_cl = 0.0;
    double sup_resolvent_or = 0.0;
    double sup_resolvent_cl = 0.0;
};

/// One row per N, both schemes; `grid` overrides SweepGrid::defaults(N) when set.
std::vector<UniformityRow> uniformity_report(const std::vector<int>& ns, double k,
                                             const std::optional<SweepGrid>& grid = std::nullopt,
                                             Execution exec = Execution::parallel);

}  // namespace sfd
