#include "sfd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "sfd/errors.hpp"

namespace sfd {

const char* to_string(Integrator integrator) {
    return integrator == Integrator::midpoint ? "midpoint" : "modal";
}

Integrator parse_integrator(std::string_view name) {
    if (name == "midpoint") return Integrator::midpoint;
    if (name == "modal") return Integrator::modal;
    throw DomainError("unknown integrator '" + std::string(name) + "'");
}

MidpointStepper::MidpointStepper(const SemiDiscreteSystem& system, double dt)
    : system_(system), dt_(dt) {
    if (!(dt > 0.0)) throw DomainError("MidpointStepper: dt must be positive");
    const Eigen::Index n = system.dimension();
    DenseComplexMatrix lhs = DenseComplexMatrix::Identity(n, n) - 0.5 * dt * system.generator();
    implicit_half_.compute(lhs);
    const double rcond = implicit_half_.rcond();
    if (!(rcond > 1e-300)) {
        std::ostringstream msg;
        msg << "MidpointStepper: I - dt/2 A_h is singular for dt = " << dt;
        throw NumericalError(msg.str());
    }
}

CVector MidpointStepper::step(const CVector& w) const {
    const Mesh& mesh = system_.mesh();
    const CVector aw = system_.apply(GridVector::state(mesh, w)).values();
    return implicit_half_.solve(CVector(w + 0.5 * dt_ * aw));
}

CVector step_midpoint(const SemiDiscreteSystem& system, const CVector& w, double dt) {
    return MidpointStepper(system, dt).step(w);
}

ModalPropagator::ModalPropagator(const SemiDiscreteSystem& system, const CVector& w0)
    : system_(system), modes_(eigenpairs(system.weighted_generator())) {
    coefficients_ = modes_.vectors.partialPivLu().solve(system.to_weighted(w0));
}

CVector ModalPropagator::at(double t) const {
    const CVector growth = (modes_.values * t).array().exp();
    const CVector u = modes_.vectors * growth.cwiseProduct(coefficients_);
    return system_.from_weighted(u);
}

EnergyTrace simulate(const SemiDiscreteSystem& system, const CVector& w0, double dt,
                     double t_final, Integrator integrator) {
    if (!(dt > 0.0)) throw DomainError("simulate: dt must be positive");
    if (!(t_final >= dt)) throw DomainError("simulate: t_final must be >= dt");
    if (w0.size() != system.dimension())
        throw DomainError("simulate: initial state has wrong length");

    const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
    const Eigen::Index last = system.mesh().n;
    const double k = system.k();

    EnergyTrace trace;
    trace.times.reserve(steps + 1);
    trace.energies.reserve(steps + 1);
    trace.boundary_values.reserve(steps + 1);
    trace.step_gaps.reserve(steps);

    auto record = [&](double t, const CVector& w) {
        trace.times.push_back(t);
        trace.energies.push_back(system.energy(w));
        trace.boundary_values.push_back(w(last));
    };

    CVector w = w0;
    record(0.0, w);

    auto advance = [&](std::size_t i, const CVector& next) {
        const cplx mid_boundary = 0.5 * (w(last) + next(last));
        record(static_cast<double>(i + 1) * dt, next);
        const double e_prev = trace.energies[i], e_next = trace.energies[i + 1];
        trace.step_gaps.push_back(e_next - e_prev + k * dt * std::norm(mid_boundary));
        w = next;
    };

    if (integrator == Integrator::midpoint) {
        const MidpointStepper stepper(system, dt);
        for (std::size_t i = 0; i < steps; ++i) advance(i, stepper.step(w));
    } else {
        const ModalPropagator propagator(system, w0);
        for (std::size_t i = 0; i < steps; ++i)
            advance(i, propagator.at(static_cast<double>(i + 1) * dt));
    }
    return trace;
}

double fit_decay_rate(const EnergyTrace& trace, double t_start, double t_end) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        const double t = trace.times[i];
        if (t < t_start || t > t_end) continue;
        const double e = trace.energies[i];
        if (!(e > 0.0)) {
            std::ostringstream msg;
            msg << "fit_decay_rate: energy vanishes at t = " << t
                << "; shrink the window [" << t_start << ", " << t_end << "]";
            throw DomainError(msg.str());
        }
        const double y = std::log(e);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        ++count;
    }
    if (count < 10) throw DomainError("fit_decay_rate: window holds fewer than 10 samples");
    const double n = static_cast<double>(count);
    const double denom = n * sxx - sx * sx;
    if (!(denom > 0.0)) throw DomainError("fit_decay_rate: degenerate time window");
    const double slope = (n * sxy - sx * sy) / denom;
    return -0.5 * slope;
}

CVector random_initial_state(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("random_initial_state: N must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    CVector w(n + 1);
    for (Eigen::Index j = 0; j <= n; ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        w(j) = {re, im};
    }
    return w;
}

CVector sine_initial_state(const Mesh& mesh) {
    CVector w(mesh.n + 1);
    for (int j = 1; j <= mesh.n + 1; ++j)
        w(j - 1) = std::sin(std::numbers::pi * mesh.nodes[static_cast<std::size_t>(j)]);
    return w;
}

CVector load_initial_state(const std::string& path, const Mesh& mesh) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_initial_state: cannot open '" + path + "'");
    std::vector<cplx> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double re = 0.0, im = 0.0;
        if (!(row >> re)) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw DomainError("load_initial_state: malformed line '" + line + "'");
        }
        first = false;
        if (!(row >> im)) im = 0.0;
        values.emplace_back(re, im);
    }
    if (static_cast<int>(values.size()) != mesh.n + 1) {
        throw DomainError("load_initial_state: expected " + std::to_string(mesh.n + 1) +
                          " values, got " + std::to_string(values.size()));
    }
    return Eigen::Map<const CVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace sfd
