#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "sfd/grid.hpp"
#include "sfd/identities.hpp"

namespace sfd::test {

inline CVector random_vector(Eigen::Index n, std::uint64_t seed) {
    return random_complex_vector(n, seed);
}

inline GridVector random_state(const Mesh& mesh, std::uint64_t seed) {
    return GridVector::state(mesh, random_vector(mesh.n + 1, seed));
}

inline double max_abs_diff(const CVector& a, const CVector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double rel_diff(const CVector& a, const CVector& b) {
    const double scale = std::max(a.norm(), b.norm());
    return scale > 0.0 ? (a - b).norm() / scale : 0.0;
}

}  // namespace sfd::test
