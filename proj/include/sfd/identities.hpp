#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sfd/execution.hpp"
#include "sfd/grid.hpp"

namespace sfd {

/// Absolute gap of an identity that holds exactly in exact arithmetic, with
/// the largest absolute term that entered it (sums of moduli for sums).
struct IdentityGap {
    double gap = 0.0;
    double scale = 0.0;

    [[nodiscard]] double relative() const { return scale > 0.0 ? gap / scale : gap; }
};

/// Order reduction: |Re <A_h Y, Y>_{Y_h} + k |y_{N+1}|^2|, scaled by h sum |(D A_h Y)_j| |(D Y)_j|.
IdentityGap dissipation_identity(const GridVector& y, double k, const Mesh& mesh);

/// |E_h(W) - 1/2 <W, W>_{Y_h}|: the energy as a midpoint sum against the D-weighted norm.
IdentityGap energy_identity(const GridVector& w, const Mesh& mesh);

/// triple_sum_identity_gap with the sum of the moduli of every term as scale.
IdentityGap triple_sum_gap(const CVector& u, const CVector& v, const CVector& w);

/// |2 Re(h sum x_{j+1/2} y_{j+1/2} conj(dy_{j+1/2}))
///   - (|y_{N+1}|^2 - h sum |y_{j+1/2}|^2 - h^3/4 sum |dy_{j+1/2}|^2)|, y_0 := 0.
IdentityGap boundary_multiplier_gap_y(const GridVector& y, const Mesh& mesh);

/// The same identity for an extended vector z_0 .. z_{N+1}; z_0 is unconstrained.
IdentityGap boundary_multiplier_gap_z(const GridVector& z_ext, const Mesh& mesh);

/// |h sum (conj(y_{j+1/2}) dz_{j+1/2} + y_{j+1/2} conj(dz_{j+1/2})) + 2 h sum |z_{j+1/2}|^2|
/// with Z the shadow element, y_0 := 0 and z_{N+1} := -i k y_{N+1}.
IdentityGap cross_term_gap(const GridVector& y, double k, const Mesh& mesh);

/// Matrix form (D, Sigma, Delta) against sum form of the two frequency-domain
/// functionals:
///   linear  : |Y|^2 + h|Sigma Z^|^2/beta + h^2/(4 beta) h|Delta Z^|^2 + h^2/4 h|Delta Y^|^2
///   quadratic: |Y|^2 + h|Delta Z^|^2/beta^2 - 2 h|Sigma Z^|^2/beta
struct FunctionalGaps {
    IdentityGap linear;
    IdentityGap quadratic;
};

FunctionalGaps claim_functionals_gap(const GridVector& y, double k, double beta, const Mesh& mesh,
                                     const SchemeMatrices& matrices);

/// Convenience overload building the matrices from the mesh.
FunctionalGaps claim_functionals_gap(const GridVector& y, double k, double beta, const Mesh& mesh);

/// Worst case of one identity over the random samples of one configuration.
struct MultiplierReport {
    std::string identity;
    int n = 0;
    double k = 0.0;
    std::uint64_t seed = 0;  // seed of the worst sample
    double gap = 0.0;
    double scale = 0.0;
    double tolerance = 0.0;

    [[nodiscard]] double relative() const { return scale > 0.0 ? gap / scale : gap; }
    [[nodiscard]] bool passed() const { return relative() <= tolerance; }
};

struct IdentitySuiteConfig {
    std::vector<int> ns{1, 2, 7, 64, 255};
    std::vector<double> ks{0.1, 1.0, 10.0};
    int samples = 100;
    std::uint64_t base_seed = 20240601;
    double beta = 3.7;  // alternates sign between samples
    /// Added to one entry of Sigma to check that the suite notices a
    /// corrupted operator; 0 disables.
    double perturb = 0.0;
};

/// Per-sample seed used for configuration (n, k index, sample).
std::uint64_t sample_seed(std::uint64_t base, int n, std::size_t k_index, int sample);

/// Complex standard normal vector of the given length.
CVector random_complex_vector(Eigen::Index length, std::uint64_t seed);

/// Identity names in report order.
const std::vector<std::string>& identity_names();

/// Relative tolerance each identity is held to.
double identity_tolerance(const std::string& identity);

/// Every identity at every configuration; one report per (identity, N, k).
std::vector<MultiplierReport> run_identity_suite(const IdentitySuiteConfig& config,
                                                 Execution exec = Execution::parallel);

}  // namespace sfd
