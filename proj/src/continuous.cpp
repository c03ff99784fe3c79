#include "sfd/continuous.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "sfd/errors.hpp"

namespace sfd {

SampledFunction SampledFunction::uniform(int points, const std::function<cplx(double)>& f) {
    if (points < 2) throw DomainError("SampledFunction::uniform: need at least 2 points");
    SampledFunction s;
    s.grid.resize(static_cast<std::size_t>(points));
    s.values.resize(static_cast<std::size_t>(points));
    const double step = 1.0 / (points - 1);
    for (int j = 0; j < points; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        s.grid[idx] = j == points - 1 ? 1.0 : j * step;
        s.values[idx] = f(s.grid[idx]);
    }
    return s;
}

namespace {

void validate(const SampledFunction& f, std::size_t min_points, const char* who) {
    if (f.grid.size() != f.values.size())
        throw DomainError(std::string(who) + ": grid and values differ in length");
    if (f.grid.size() < min_points)
        throw DomainError(std::string(who) + ": need at least " + std::to_string(min_points) +
                          " samples, got " + std::to_string(f.grid.size()));
    if (f.grid.front() != 0.0 || f.grid.back() != 1.0)
        throw DomainError(std::string(who) + ": grid must cover [0, 1]");
}

}  // namespace

SampledFunction apply_continuous_inverse(const SampledFunction& f, double k) {
    if (!(k > 0.0)) throw DomainError("apply_continuous_inverse: gain k must be positive");
    validate(f, 33, "apply_continuous_inverse");

    const std::size_t n = f.grid.size();
    // F(x) = int_0^x f,  G(x) = int_0^x t f(t) dt, cumulative trapezoid.
    std::vector<cplx> F(n), G(n);
    F[0] = G[0] = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double dx = f.grid[j] - f.grid[j - 1];
        F[j] = F[j - 1] + 0.5 * dx * (f.values[j - 1] + f.values[j]);
        G[j] = G[j - 1] + 0.5 * dx * (f.grid[j - 1] * f.values[j - 1] + f.grid[j] * f.values[j]);
    }
    const cplx a = (-I * F[n - 1] + k * (F[n - 1] - G[n - 1])) / (1.0 + I * k);

    SampledFunction g;
    g.grid = f.grid;
    g.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = f.grid[j];
        g.values[j] = a * x + I * (x * F[j] - G[j]);
    }
    return g;
}

cplx characteristic_function(cplx mu, double k) {
    return mu * std::cosh(mu) + I * k * std::sinh(mu);
}

namespace {

cplx characteristic_derivative(cplx mu, double k) {
    return (1.0 + I * k) * std::cosh(mu) + mu * std::sinh(mu);
}

bool accepted(cplx mu, double k) {
    const double bound = 1e-12 * (1.0 + std::abs(mu) * std::exp(std::abs(mu.real())));
    return std::abs(characteristic_function(mu, k)) <= bound;
}

std::optional<cplx> newton(cplx mu, double k) {
    for (int it = 0; it < 100; ++it) {
        const cplx step = characteristic_function(mu, k) / characteristic_derivative(mu, k);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
        mu -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(mu))) break;
    }
    if (!accepted(mu, k)) return std::nullopt;
    return mu;
}

}  // namespace

std::vector<cplx> characteristic_roots(double k, int count) {
    if (count < 1) throw DomainError("characteristic_roots: count must be >= 1");
    if (!(k >= 0.0)) throw DomainError("characteristic_roots: k must be >= 0");

    std::vector<cplx> lambdas;
    lambdas.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        const cplx seed = I * ((n + 0.5) * std::numbers::pi);
        std::optional<cplx> mu = newton(seed, k);
        if (!mu) {
            constexpr int steps = 64;
            mu = seed;
            for (int s = 1; s <= steps && mu; ++s) mu = newton(*mu, k * s / steps);
        }
        if (!mu) {
            std::ostringstream msg;
            msg << "characteristic_roots: Newton failed for seed mu0 = i*" << seed.imag()
                << " (n = " << n << ", k = " << k << ")";
            throw NumericalError(msg.str());
        }
        lambdas.push_back(-I * (*mu) * (*mu));
    }
    return lambdas;
}

double continuous_energy(const SampledFunction& w) {
    validate(w, 2, "continuous_energy");
    double integral = 0.0;
    for (std::size_t j = 1; j < w.grid.size(); ++j) {
        const double dx = w.grid[j] - w.grid[j - 1];
        integral += 0.5 * dx * (std::norm(w.values[j - 1]) + std::norm(w.values[j]));
    }
    return 0.5 * integral;
}

}  // namespace sfd
