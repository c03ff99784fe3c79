#include "sfd/system.hpp"

#include <cmath>
#include <string>

#include "sfd/errors.hpp"

namespace sfd {

const char* to_string(Scheme s) {
    return s == Scheme::order_reduction ? "order_reduction" : "classical";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "order_reduction" || name == "or") return Scheme::order_reduction;
    if (name == "classical" || name == "cl") return Scheme::classical;
    throw DomainError("unknown scheme '" + std::string(name) + "'");
}

namespace {

void check_gain(double k, const char* who) {
    if (!(k > 0.0)) throw DomainError(std::string(who) + ": gain k must be positive");
}

// Weighted generator column: D A D^{-1} e_j for order reduction.
CVector weighted_column(Scheme scheme, double k, const Mesh& mesh, Eigen::Index j) {
    CVector e = CVector::Zero(mesh.n + 1);
    e(j) = 1.0;
    if (scheme == Scheme::classical)
        return apply_classical(GridVector::state(mesh, std::move(e)), k, mesh).values();
    const GridVector pre = GridVector::state(mesh, bidiag::solve_D(e));
    return bidiag::apply_D(apply_order_reduction(pre, k, mesh).values());
}

}  // namespace

GridVector apply_order_reduction(const GridVector& y, double k, const Mesh& mesh) {
    check_gain(k, "apply_order_reduction");
    const GridVector z = shadow_element(y, k, mesh);
    CVector r = -I * bidiag::apply_M(z.values(), mesh.h);
    r(mesh.n) -= k / mesh.h * y.values()(mesh.n);
    return GridVector::state(mesh, bidiag::solve_D(r));
}

GridVector apply_classical(const GridVector& y, double k, const Mesh& mesh) {
    check_gain(k, "apply_classical");
    require(y, Convention::state, mesh, "apply_classical");
    const cplx boundary = y.values()(mesh.n);
    CVector inner = bidiag::apply_Mt(y.values(), mesh.h);
    inner(mesh.n) -= 0.5 * I * k * boundary;
    CVector out = I * bidiag::apply_M(inner, mesh.h);
    out(mesh.n) -= k / mesh.h * boundary;
    return GridVector::state(mesh, std::move(out));
}

GridVector apply_generator(Scheme scheme, const GridVector& y, double k, const Mesh& mesh) {
    return scheme == Scheme::order_reduction ? apply_order_reduction(y, k, mesh)
                                             : apply_classical(y, k, mesh);
}

DenseComplexMatrix assemble_generator(Scheme scheme, double k, const Mesh& mesh, Execution exec) {
    check_gain(k, "assemble_generator");
    const Eigen::Index n = mesh.n + 1;
    DenseComplexMatrix a(n, n);
    for_each_index(exec, static_cast<std::size_t>(n), [&](std::size_t j) {
        CVector e = CVector::Zero(n);
        e(static_cast<Eigen::Index>(j)) = 1.0;
        a.col(static_cast<Eigen::Index>(j)) =
            apply_generator(scheme, GridVector::state(mesh, std::move(e)), k, mesh).values();
    });
    return a;
}

double dissipation_gap(const GridVector& y, double k, const Mesh& mesh, Scheme scheme) {
    const GridVector ay = apply_generator(scheme, y, k, mesh);
    const double boundary = k * std::norm(y.values()(mesh.n));
    if (scheme == Scheme::order_reduction) return yh_inner(ay, y, mesh).real() + boundary;
    return mesh.h * y.values().dot(ay.values()).real() + boundary;
}

double discrete_energy(const GridVector& w, const Mesh& mesh) {
    const CVector mid = average(extend_state(w, mesh).values());
    return 0.5 * mesh.h * mid.squaredNorm();
}

SemiDiscreteSystem::SemiDiscreteSystem(Scheme scheme, int n, double k)
    : scheme_(scheme), mesh_(make_mesh(n)), k_(k), cache_(std::make_shared<Cache>()) {
    check_gain(k, "SemiDiscreteSystem");
}

GridVector SemiDiscreteSystem::apply(const GridVector& y) const {
    return apply_generator(scheme_, y, k_, mesh_);
}

const DenseComplexMatrix& SemiDiscreteSystem::generator() const {
    std::call_once(cache_->generator_once, [this] {
        cache_->generator = assemble_generator(scheme_, k_, mesh_);
    });
    return cache_->generator;
}

const DenseComplexMatrix& SemiDiscreteSystem::weighted_generator() const {
    std::call_once(cache_->weighted_once, [this] {
        if (scheme_ == Scheme::classical) {
            cache_->weighted = generator();
            return;
        }
        const Eigen::Index n = dimension();
        DenseComplexMatrix b(n, n);
        for_each_index(Execution::parallel, static_cast<std::size_t>(n), [&](std::size_t j) {
            b.col(static_cast<Eigen::Index>(j)) =
                weighted_column(scheme_, k_, mesh_, static_cast<Eigen::Index>(j));
        });
        cache_->weighted = std::move(b);
    });
    return cache_->weighted;
}

CVector SemiDiscreteSystem::to_weighted(const CVector& y) const {
    const double s = std::sqrt(mesh_.h);
    return scheme_ == Scheme::order_reduction ? CVector(s * bidiag::apply_D(y)) : CVector(s * y);
}

CVector SemiDiscreteSystem::from_weighted(const CVector& u) const {
    const double s = 1.0 / std::sqrt(mesh_.h);
    return scheme_ == Scheme::order_reduction ? CVector(s * bidiag::solve_D(u)) : CVector(s * u);
}

double SemiDiscreteSystem::energy(const CVector& w) const {
    if (scheme_ == Scheme::order_reduction)
        return discrete_energy(GridVector::state(mesh_, w), mesh_);
    return 0.5 * mesh_.h * w.squaredNorm();
}

}  // namespace sfd
