#pragma once

#include <memory>
#include <mutex>
#include <string_view>

#include "sfd/execution.hpp"
#include "sfd/grid.hpp"

namespace sfd {

enum class Scheme { order_reduction, classical };

const char* to_string(Scheme s);
/// Accepts "order_reduction"/"or" and "classical"/"cl".
Scheme parse_scheme(std::string_view name);

/// Order-reduction generator applied matrix-free:
///   A_h Y = D^{-1} [ -i M Z - (0, ..., k y_{N+1} / h)^T ],  Z = shadow_element(Y).
/// Two bidiagonal solves and one bidiagonal product, O(N).
GridVector apply_order_reduction(const GridVector& y, double k, const Mesh& mesh);

/// Classical (D_h = I) generator:
///   A^_h Y = i M (M^T Y - (0, ..., i k y_{N+1} / 2)^T) - (0, ..., k y_{N+1} / h)^T.
GridVector apply_classical(const GridVector& y, double k, const Mesh& mesh);

GridVector apply_generator(Scheme scheme, const GridVector& y, double k, const Mesh& mesh);

/// Dense generator, column j = applier(e_j). The parallel and serial paths
/// are bit-identical.
DenseComplexMatrix assemble_generator(Scheme scheme, double k, const Mesh& mesh,
                                      Execution exec = Execution::parallel);

/// Order reduction: Re <A_h Y, Y>_{Y_h} + k |y_{N+1}|^2 (zero in exact arithmetic).
/// Classical: Re h <A^_h Y, Y> + k |y_{N+1}|^2, a diagnostic with no exactness claim.
double dissipation_gap(const GridVector& y, double k, const Mesh& mesh, Scheme scheme);

/// E_h = (h/2) sum_{j=0}^{N} |w_{j+1/2}|^2 with w_0 := 0.
double discrete_energy(const GridVector& w, const Mesh& mesh);

/// Immutable (scheme, mesh, k) triple with lazily assembled dense matrices.
/// Copies share the assembled matrices; assembly runs at most once even
/// under concurrent first access.
class SemiDiscreteSystem {
public:
    SemiDiscreteSystem(Scheme scheme, int n, double k);

    [[nodiscard]] Scheme scheme() const { return scheme_; }
    [[nodiscard]] const Mesh& mesh() const { return mesh_; }
    [[nodiscard]] double k() const { return k_; }
    [[nodiscard]] int dimension() const { return mesh_.n + 1; }

    [[nodiscard]] GridVector apply(const GridVector& y) const;

    [[nodiscard]] const DenseComplexMatrix& generator() const;

    /// S A S^{-1}, where S carries the state norm to the Euclidean norm:
    /// S = sqrt(h) D for order reduction, S = sqrt(h) I for classical.
    [[nodiscard]] const DenseComplexMatrix& weighted_generator() const;

    [[nodiscard]] CVector to_weighted(const CVector& y) const;
    [[nodiscard]] CVector from_weighted(const CVector& u) const;

    /// State-space energy: discrete_energy for order reduction, (h/2)|W|^2 for classical.
    [[nodiscard]] double energy(const CVector& w) const;

private:
    struct Cache {
        std::once_flag generator_once;
        std::once_flag weighted_once;
        DenseComplexMatrix generator;
        DenseComplexMatrix weighted;
    };

    Scheme scheme_;
    Mesh mesh_;
    double k_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace sfd
