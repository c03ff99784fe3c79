#include "sfd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sfd/errors.hpp"

namespace sfd {

SpectrumReport spectral_abscissa(const SemiDiscreteSystem& system, double tol, Execution exec) {
    const DenseComplexMatrix& a = system.generator();
    const EigenPairs pairs = eigenpairs(a);

    SpectrumReport report;
    report.scheme = system.scheme();
    report.n = system.mesh().n;
    report.k = system.k();
    report.eigenvalues.assign(pairs.values.data(), pairs.values.data() + pairs.values.size());
    report.abscissa = -std::numeric_limits<double>::infinity();
    for (const cplx& l : report.eigenvalues) report.abscissa = std::max(report.abscissa, l.real());
    report.max_eigen_residual = max_eigen_residual(a, pairs, exec);
    if (report.max_eigen_residual > tol) {
        std::ostringstream msg;
        msg << "spectral_abscissa: eigen-residual " << report.max_eigen_residual
            << " exceeds tolerance " << tol << " (" << to_string(system.scheme())
            << ", N=" << report.n << ")";
        throw NumericalError(msg.str());
    }
    return report;
}

double resolvent_norm(const SemiDiscreteSystem& system, double beta) {
    DenseComplexMatrix shifted = -system.weighted_generator();
    shifted.diagonal().array() += I * beta;
    const Eigen::BDCSVD<DenseComplexMatrix> svd(shifted);
    const auto& sigma = svd.singularValues();
    const double smallest = sigma(sigma.size() - 1);
    if (!(smallest > 1e-14 * sigma(0))) {
        std::ostringstream msg;
        msg << "resolvent_norm: i*beta - A_h is numerically singular at beta = " << beta
            << " (sigma_min = " << smallest << ")";
        throw NumericalError(msg.str());
    }
    return 1.0 / smallest;
}

SweepGrid SweepGrid::defaults(int n) {
    SweepGrid g;
    const double reach = std::numbers::pi * (n + 1);
    g.beta_max = 2.0 * reach * reach;
    g.beta_min = -g.beta_max;
    return g;
}

std::vector<double> sweep_points(const SemiDiscreteSystem& system, const SweepGrid& grid) {
    if (!(grid.beta_min < grid.beta_max)) throw DomainError("resolvent_sweep: need beta_min < beta_max");
    if (grid.linear_steps < 2) throw DomainError("resolvent_sweep: need at least 2 linear steps");
    if (grid.log_decades < 0 || grid.points_per_decade < 1)
        throw DomainError("resolvent_sweep: invalid log tail parameters");

    std::vector<double> points;
    const double span = grid.beta_max - grid.beta_min;
    for (int i = 0; i < grid.linear_steps; ++i)
        points.push_back(grid.beta_min + span * i / (grid.linear_steps - 1));

    const int tail = grid.log_decades * grid.points_per_decade;
    for (int i = 0; i <= tail; ++i) {
        const double b = std::pow(10.0, static_cast<double>(i) / grid.points_per_decade);
        points.push_back(b);
        points.push_back(-b);
    }

    const double lo = std::min(grid.beta_min, -std::pow(10.0, grid.log_decades));
    const double hi = std::max(grid.beta_max, std::pow(10.0, grid.log_decades));
    if (grid.anchor_eigenvalues) {
        const CVector ev = eigenvalues(system.generator());
        for (const cplx& l : ev)
            if (l.imag() >= lo && l.imag() <= hi) points.push_back(l.imag());
    }

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

ResolventSweepReport resolvent_sweep(const SemiDiscreteSystem& system,
                                     const std::vector<double>& betas, Execution exec) {
    if (betas.empty()) throw DomainError("resolvent_sweep: empty beta grid");
    ResolventSweepReport report;
    report.scheme = system.scheme();
    report.n = system.mesh().n;
    report.k = system.k();
    report.beta_grid = betas;
    report.norms.resize(betas.size());

    (void)system.weighted_generator();  // assemble once, outside the parallel region
    for_each_index(exec, betas.size(),
                   [&](std::size_t i) { report.norms[i] = resolvent_norm(system, betas[i]); });

    // Ordered reduction; ties go to the smallest |beta|, then the smaller beta.
    report.sup_norm = report.norms[0];
    report.argmax_beta = betas[0];
    for (std::size_t i = 1; i < betas.size(); ++i) {
        const double v = report.norms[i], b = betas[i];
        const bool better =
            v > report.sup_norm ||
            (v == report.sup_norm &&
             (std::abs(b) < std::abs(report.argmax_beta) ||
              (std::abs(b) == std::abs(report.argmax_beta) && b < report.argmax_beta)));
        if (better) {
            report.sup_norm = v;
            report.argmax_beta = b;
        }
    }
    return report;
}

ResolventSweepReport resolvent_sweep(const SemiDiscreteSystem& system, const SweepGrid& grid,
                                     Execution exec) {
    return resolvent_sweep(system, sweep_points(system, grid), exec);
}

std::vector<UniformityRow> uniformity_report(const std::vector<int>& ns, double k,
                                             const std::optional<SweepGrid>& grid, Execution exec) {
    if (ns.empty()) throw DomainError("uniformity_report: empty N list");
    std::vector<UniformityRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        const SemiDiscreteSystem or_sys(Scheme::order_reduction, n, k);
        const SemiDiscreteSystem cl_sys(Scheme::classical, n, k);
        const SweepGrid g = grid.value_or(SweepGrid::defaults(n));
        UniformityRow row;
        row.n = n;
        row.h = or_sys.mesh().h;
        row.abscissa_or = spectral_abscissa(or_sys, 1e-8, exec).abscissa;
        row.abscissa_cl = spectral_abscissa(cl_sys, 1e-8, exec).abscissa;
        row.sup_resolvent_or = resolvent_sweep(or_sys, g, exec).sup_norm;
        row.sup_resolvent_cl = resolvent_sweep(cl_sys, g, exec).sup_norm;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sfd
