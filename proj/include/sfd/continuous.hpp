#pragma once

#include <functional>
#include <vector>

#include "sfd/linalg.hpp"

namespace sfd {

/// Samples of a function on a uniform grid covering [0, 1] inclusively.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<cplx> values;

    static SampledFunction uniform(int points, const std::function<cplx(double)>& f);

    [[nodiscard]] double spacing() const { return grid[1] - grid[0]; }
};

/// g = A^{-1} f for the closed-loop operator A g = -i g'', i.e. the solution of
///   -i g'' = f,  g(0) = 0,  g'(1) = -i k g(1),
/// in the closed form g(x) = a x + i int_0^x (x - t) f(t) dt with
///   a (1 + i k) = -i int_0^1 f + k int_0^1 (1 - t) f(t) dt.
/// Integrals use the composite trapezoid rule on the sample grid.
SampledFunction apply_continuous_inverse(const SampledFunction& f, double k);

/// The first `count` eigenvalues lambda = -i mu^2 of the closed-loop operator,
/// mu a root of mu cosh(mu) + i k sinh(mu) = 0. Newton is seeded at
/// mu_0 = i (n + 1/2) pi; a continuation in k from the conservative case is the
/// fallback when a seed stalls.
std::vector<cplx> characteristic_roots(double k, int count);

/// mu cosh(mu) + i k sinh(mu).
cplx characteristic_function(cplx mu, double k);

/// (1/2) int_0^1 |w|^2 by the trapezoid rule.
double continuous_energy(const SampledFunction& w);

}  // namespace sfd
