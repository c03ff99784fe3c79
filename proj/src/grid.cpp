#include "sfd/grid.hpp"

#include <string>

#include "sfd/errors.hpp"

namespace sfd {

Mesh make_mesh(int n) {
    if (n < 1) throw DomainError("make_mesh: N must be >= 1, got " + std::to_string(n));
    Mesh mesh;
    mesh.n = n;
    mesh.h = 1.0 / static_cast<double>(n + 1);
    mesh.nodes.resize(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) mesh.nodes[static_cast<std::size_t>(j)] = j * mesh.h;
    mesh.nodes.back() = 1.0;
    return mesh;
}

const char* to_string(Convention c) {
    switch (c) {
        case Convention::state: return "state";
        case Convention::shadow: return "shadow";
        case Convention::extended: return "extended";
    }
    return "?";
}

namespace {

Eigen::Index expected_length(Convention c, const Mesh& mesh) {
    return c == Convention::extended ? mesh.n + 2 : mesh.n + 1;
}

void check_length(Convention c, const Mesh& mesh, const CVector& values) {
    if (values.size() != expected_length(c, mesh)) {
        throw DomainError(std::string("GridVector: ") + to_string(c) + " vector on N=" +
                          std::to_string(mesh.n) + " needs length " +
                          std::to_string(expected_length(c, mesh)) + ", got " +
                          std::to_string(values.size()));
    }
}

}  // namespace

GridVector GridVector::state(const Mesh& mesh, CVector values) {
    check_length(Convention::state, mesh, values);
    return {Convention::state, std::move(values)};
}

GridVector GridVector::shadow(const Mesh& mesh, CVector values) {
    check_length(Convention::shadow, mesh, values);
    return {Convention::shadow, std::move(values)};
}

GridVector GridVector::extended(const Mesh& mesh, CVector values) {
    check_length(Convention::extended, mesh, values);
    return {Convention::extended, std::move(values)};
}

void require(const GridVector& v, Convention c, const Mesh& mesh, const char* who) {
    if (v.convention() != c) {
        throw DomainError(std::string(who) + ": expected a " + to_string(c) + " vector, got " +
                          to_string(v.convention()));
    }
    if (v.size() != expected_length(c, mesh)) {
        throw DomainError(std::string(who) + ": length " + std::to_string(v.size()) +
                          " does not match N=" + std::to_string(mesh.n));
    }
}

CVector average(const CVector& u) {
    if (u.size() < 2) throw DomainError("average: need at least 2 values");
    const Eigen::Index m = u.size() - 1;
    return 0.5 * (u.head(m) + u.tail(m));
}

CVector difference(const CVector& u, double h) {
    if (u.size() < 2) throw DomainError("difference: need at least 2 values");
    if (!(h > 0.0)) throw DomainError("difference: step must be positive");
    const Eigen::Index m = u.size() - 1;
    return (u.tail(m) - u.head(m)) / h;
}

SchemeMatrices build_scheme_matrices(const Mesh& mesh) {
    const Eigen::Index n = mesh.n + 1;
    const double inv_h = 1.0 / mesh.h;
    SchemeMatrices s;
    s.D = DenseComplexMatrix::Zero(n, n);
    s.M = DenseComplexMatrix::Zero(n, n);
    s.Sigma = DenseComplexMatrix::Zero(n, n + 1);
    s.Delta = DenseComplexMatrix::Zero(n, n + 1);
    for (Eigen::Index j = 0; j < n; ++j) {
        s.D(j, j) = 0.5;
        if (j > 0) s.D(j, j - 1) = 0.5;
        s.M(j, j) = -inv_h;
        if (j + 1 < n) s.M(j, j + 1) = inv_h;
        s.Sigma(j, j) = 0.5;
        s.Sigma(j, j + 1) = 0.5;
        s.Delta(j, j) = -inv_h;
        s.Delta(j, j + 1) = inv_h;
    }
    return s;
}

cplx yh_inner(const GridVector& y, const GridVector& y_tilde, const Mesh& mesh) {
    require(y, Convention::state, mesh, "yh_inner");
    require(y_tilde, Convention::state, mesh, "yh_inner");
    const CVector a = bidiag::apply_D(y.values());
    const CVector b = bidiag::apply_D(y_tilde.values());
    // Eigen's dot() conjugates its first argument.
    return mesh.h * b.dot(a);
}

GridVector shadow_element(const GridVector& y, double k, const Mesh& mesh) {
    if (!(k > 0.0)) throw DomainError("shadow_element: gain k must be positive");
    require(y, Convention::state, mesh, "shadow_element");
    CVector rhs = -bidiag::apply_Mt(y.values(), mesh.h);
    rhs(mesh.n) += 0.5 * I * k * y.values()(mesh.n);
    return GridVector::shadow(mesh, bidiag::solve_Dt(rhs));
}

cplx shadow_boundary_value(const GridVector& y, double k) {
    return -I * k * y.values()(y.size() - 1);
}

GridVector extend_state(const GridVector& y, const Mesh& mesh) {
    require(y, Convention::state, mesh, "extend_state");
    CVector ext(mesh.n + 2);
    ext(0) = 0.0;
    ext.tail(mesh.n + 1) = y.values();
    return GridVector::extended(mesh, std::move(ext));
}

GridVector extend_shadow(const GridVector& z, const GridVector& y, double k, const Mesh& mesh) {
    require(z, Convention::shadow, mesh, "extend_shadow");
    require(y, Convention::state, mesh, "extend_shadow");
    CVector ext(mesh.n + 2);
    ext.head(mesh.n + 1) = z.values();
    ext(mesh.n + 1) = shadow_boundary_value(y, k);
    return GridVector::extended(mesh, std::move(ext));
}

cplx triple_sum_identity_gap(const CVector& u, const CVector& v, const CVector& w) {
    if (u.size() != v.size() || u.size() != w.size())
        throw DomainError("triple_sum_identity_gap: sequences differ in length");
    if (u.size() < 2) throw DomainError("triple_sum_identity_gap: need length >= 2");
    const Eigen::Index last = u.size() - 1;
    cplx lhs = 0.0;
    for (Eigen::Index i = 0; i < last; ++i) {
        const cplx du = u(i + 1) - u(i), su = u(i + 1) + u(i);
        const cplx dv = v(i + 1) - v(i), sv = v(i + 1) + v(i);
        const cplx dw = w(i + 1) - w(i), sw = w(i + 1) + w(i);
        lhs += du * sv * sw + du * dv * dw + su * dv * sw + su * sv * dw;
    }
    lhs *= 0.25;
    return lhs - (u(last) * v(last) * w(last) - u(0) * v(0) * w(0));
}

namespace bidiag {

CVector apply_D(const CVector& y) {
    CVector out(y.size());
    for (Eigen::Index j = 0; j < y.size(); ++j)
        out(j) = 0.5 * ((j > 0 ? y(j - 1) : cplx{}) + y(j));
    return out;
}

CVector solve_D(const CVector& r) {
    CVector x(r.size());
    for (Eigen::Index j = 0; j < r.size(); ++j)
        x(j) = 2.0 * r(j) - (j > 0 ? x(j - 1) : cplx{});
    return x;
}

CVector solve_Dt(const CVector& b) {
    const Eigen::Index n = b.size();
    CVector z(n);
    for (Eigen::Index j = n - 1; j >= 0; --j)
        z(j) = 2.0 * b(j) - (j + 1 < n ? z(j + 1) : cplx{});
    return z;
}

CVector apply_M(const CVector& z, double h) {
    const Eigen::Index n = z.size();
    CVector out(n);
    for (Eigen::Index j = 0; j < n; ++j)
        out(j) = ((j + 1 < n ? z(j + 1) : cplx{}) - z(j)) / h;
    return out;
}

CVector apply_Mt(const CVector& y, double h) {
    CVector out(y.size());
    for (Eigen::Index j = 0; j < y.size(); ++j)
        out(j) = ((j > 0 ? y(j - 1) : cplx{}) - y(j)) / h;
    return out;
}

}  // namespace bidiag

}  // namespace sfd
