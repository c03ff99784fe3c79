#pragma once

#include <vector>

#include "sfd/linalg.hpp"

namespace sfd {

/// Equidistant partition 0 = x_0 < x_1 < ... < x_{N+1} = 1 with h = 1/(N+1).
struct Mesh {
    int n = 0;
    double h = 0.0;
    std::vector<double> nodes;  // x_0 .. x_{N+1}

    /// Dimension of the state space, N+1.
    [[nodiscard]] int state_size() const { return n + 1; }
};

Mesh make_mesh(int n);

/// Index range a grid vector covers.
///   state    : y_1 .. y_{N+1}   (unknowns W_h, Y_h)
///   shadow   : z_0 .. z_N       (shadow element Z_h)
///   extended : u_0 .. u_{N+1}   (padded vectors such as (0, Y_h) or (Z_h, z_{N+1}))
enum class Convention { state, shadow, extended };

const char* to_string(Convention c);

class GridVector {
public:
    static GridVector state(const Mesh& mesh, CVector values);
    static GridVector shadow(const Mesh& mesh, CVector values);
    static GridVector extended(const Mesh& mesh, CVector values);

    [[nodiscard]] Convention convention() const { return convention_; }
    [[nodiscard]] const CVector& values() const { return values_; }
    [[nodiscard]] Eigen::Index size() const { return values_.size(); }

    /// Index of the first stored entry in grid numbering (1 for state, 0 otherwise).
    [[nodiscard]] int first_index() const { return convention_ == Convention::state ? 1 : 0; }
    [[nodiscard]] int last_index() const { return first_index() + static_cast<int>(values_.size()) - 1; }

    /// Entry by grid index j (x_j), honoring the convention's offset.
    [[nodiscard]] cplx at(int j) const { return values_(j - first_index()); }

private:
    GridVector(Convention c, CVector values) : convention_(c), values_(std::move(values)) {}

    Convention convention_;
    CVector values_;
};

/// Require `v` to use convention `c` on `mesh`; throws DomainError otherwise.
void require(const GridVector& v, Convention c, const Mesh& mesh, const char* who);

/// u_{j+1/2} = (u_j + u_{j+1}) / 2, length m -> m-1.
CVector average(const CVector& u);

/// delta_x u_{j+1/2} = (u_{j+1} - u_j) / h, length m -> m-1.
CVector difference(const CVector& u, double h);

/// Dense matrices of the scheme.
///   D     : (N+1)x(N+1) lower bidiagonal averaging, D[0][0] = 1/2
///   M     : (N+1)x(N+1) upper bidiagonal difference scaled by 1/h
///   Sigma : (N+1)x(N+2) midpoint averages of an extended vector
///   Delta : (N+1)x(N+2) scaled differences of an extended vector
struct SchemeMatrices {
    DenseComplexMatrix D;
    DenseComplexMatrix M;
    DenseComplexMatrix Sigma;
    DenseComplexMatrix Delta;
};

SchemeMatrices build_scheme_matrices(const Mesh& mesh);

/// <Y, Y~>_{Y_h} = h <D Y, D Y~>, conjugate-linear in the second slot.
cplx yh_inner(const GridVector& y, const GridVector& y_tilde, const Mesh& mesh);

/// Shadow element Z_h of Y_h: D^T Z = -M^T Y + (0, ..., i k y_{N+1} / 2)^T.
GridVector shadow_element(const GridVector& y, double k, const Mesh& mesh);

/// Boundary convention z_{N+1} := -i k y_{N+1}.
cplx shadow_boundary_value(const GridVector& y, double k);

/// (0, y_1, ..., y_{N+1}) -- the y_0 := 0 convention.
GridVector extend_state(const GridVector& y, const Mesh& mesh);

/// (z_0, ..., z_N, -i k y_{N+1}) built from Y_h and its shadow element.
GridVector extend_shadow(const GridVector& z, const GridVector& y, double k, const Mesh& mesh);

/// Left side minus right side of the summation-by-parts identity for three
/// sequences of common length m:
///   1/4 sum (du)(sv)(sw) + (du)(dv)(dw) + (su)(dv)(sw) + (su)(sv)(dw)
///   = u_{m-1} v_{m-1} w_{m-1} - u_0 v_0 w_0,
/// where s and d denote neighbour sums and differences.
cplx triple_sum_identity_gap(const CVector& u, const CVector& v, const CVector& w);

/// O(N) kernels for the bidiagonal factors, used instead of dense products.
namespace bidiag {

CVector apply_D(const CVector& y);
CVector solve_D(const CVector& r);
CVector solve_Dt(const CVector& b);
CVector apply_M(const CVector& z, double h);
CVector apply_Mt(const CVector& y, double h);

}  // namespace bidiag

}  // namespace sfd
