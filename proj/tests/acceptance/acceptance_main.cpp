// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sfd/continuous.hpp"
#include "sfd/dynamics.hpp"
#include "sfd/identities.hpp"
#include "sfd/spectral.hpp"
#include "sfd/system.hpp"

using namespace sfd;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

CVector normal_vector(Eigen::Index size, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CVector v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = cplx(normal(rng), normal(rng));
    return v;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

Outcome dissipation() {
    double worst = 0.0;
    for (int n : {1, 4, 16, 64, 256, 1023}) {
        const Mesh m = make_mesh(n);
        for (double k : {0.1, 1.0, 10.0}) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 1000 + static_cast<std::uint64_t>(k * 10));
            for (int s = 0; s < 1000; ++s) {
                const IdentityGap g = dissipation_identity(GridVector::state(m, normal_vector(n + 1, rng)), k, m);
                worst = std::max(worst, g.relative());
            }
        }
    }
    return {worst <= 1e-10, "worst relative gap " + fmt(worst)};
}

Outcome triple_sum() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> length(1, 4097);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * std::numbers::pi);
    const auto unit_disk = [&](int len) {
        CVector v(len);
        for (int i = 0; i < len; ++i) v(i) = std::polar(std::sqrt(radius(rng)), angle(rng));
        return v;
    };
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int len = t == 0 ? 4097 : length(rng);
        const CVector u = unit_disk(len), v = unit_disk(len), w = unit_disk(len);
        worst = std::max(worst, triple_sum_gap(u, v, w).relative());
    }
    return {worst <= 1e-12, "worst relative gap " + fmt(worst)};
}

Outcome multipliers() {
    IdentitySuiteConfig c;
    c.ns = {1, 2, 7, 64, 255, 1023};
    c.samples = 1000;
    const std::set<std::string> wanted{"boundary_multiplier_y", "boundary_multiplier_z", "cross_term",
                                       "functional_linear", "functional_quadratic"};
    double worst = 0.0;
    std::size_t count = 0;
    for (const MultiplierReport& r : run_identity_suite(c)) {
        if (!wanted.count(r.identity)) continue;
        worst = std::max(worst, r.relative());
        ++count;
    }
    return {count == wanted.size() * c.ns.size() * c.ks.size() && worst <= 1e-12,
            std::to_string(count) + " configurations, worst relative gap " + fmt(worst)};
}

Outcome spectrum_location() {
    double max_abscissa = -1e300, max_residual = 0.0;
    bool ok = true;
    for (int n = 1; n <= 512; n *= 2) {
        for (double k : {0.1, 1.0, 10.0}) {
            try {
                const SpectrumReport r = spectral_abscissa(SemiDiscreteSystem(Scheme::order_reduction, n, k), 1e-8);
                max_abscissa = std::max(max_abscissa, r.abscissa);
                max_residual = std::max(max_residual, r.max_eigen_residual);
                ok = ok && r.abscissa < 0.0;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    return {ok && max_residual <= 1e-8,
            "max Re lambda " + fmt(max_abscissa) + ", max residual " + fmt(max_residual)};
}

Outcome figures() {
    std::vector<int> ns{9, 19, 49, 99, 199};
    for (int n = 299; n <= 999; n += 100) ns.push_back(n);
    std::vector<double> cl, orr;
    for (int n : ns) {
        cl.push_back(spectral_abscissa(SemiDiscreteSystem(Scheme::classical, n, 1.0)).abscissa);
        orr.push_back(spectral_abscissa(SemiDiscreteSystem(Scheme::order_reduction, n, 1.0)).abscissa);
    }
    const double ratio = std::abs(cl.front()) / std::abs(cl.back());
    int non_monotone = 0;
    for (std::size_t i = 1; i < cl.size(); ++i) non_monotone += std::abs(cl[i]) >= std::abs(cl[i - 1]);
    const auto [lo, hi] = std::minmax_element(orr.begin(), orr.end());
    const double variation = (std::abs(*lo) - std::abs(*hi)) / std::abs(*hi);

    double continuous = -1e300;
    for (const cplx& lambda : characteristic_roots(1.0, 50)) continuous = std::max(continuous, lambda.real());
    const double at511 = spectral_abscissa(SemiDiscreteSystem(Scheme::order_reduction, 511, 1.0)).abscissa;
    const double agreement = std::abs(at511 - continuous) / std::abs(continuous);
    return {ratio >= 10.0 && non_monotone <= 2 && variation < 0.2 && agreement <= 0.05,
            "classical ratio " + fmt(ratio) + ", non-monotone pairs " + std::to_string(non_monotone) +
                ", order-reduction variation " + fmt(variation) + ", N=511 vs continuous " + fmt(at511) + " / " +
                fmt(continuous) + " (" + fmt(agreement) + ")"};
}

Outcome uniformity() {
    const std::vector<UniformityRow> rows = uniformity_report({15, 63, 255}, 1.0);
    double lo = 1e300, hi = 0.0;
    bool increasing = true;
    std::ostringstream detail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        lo = std::min(lo, rows[i].sup_resolvent_or);
        hi = std::max(hi, rows[i].sup_resolvent_or);
        if (i > 0) increasing = increasing && rows[i].sup_resolvent_cl > rows[i - 1].sup_resolvent_cl;
        detail << "N=" << rows[i].n << " or " << fmt(rows[i].sup_resolvent_or) << " cl "
               << fmt(rows[i].sup_resolvent_cl) << "; ";
    }
    return {hi <= 2.0 * lo && increasing, detail.str()};
}

Outcome midpoint_energy() {
    double worst = 0.0;
    bool monotone = true;
    for (int n : {15, 31, 63}) {
        const SemiDiscreteSystem sys(Scheme::order_reduction, n, 1.0);
        const EnergyTrace t = simulate(sys, random_initial_state(n, 20240601), 1e-3, 5.0);
        const double e0 = t.energies.front();
        for (double g : t.step_gaps) worst = std::max(worst, std::abs(g) / e0);
        for (std::size_t i = 1; i < t.energies.size(); ++i) monotone = monotone && t.energies[i] <= t.energies[i - 1];
    }
    return {worst <= 1e-12 && monotone,
            "worst step gap / E0 " + fmt(worst) + (monotone ? ", energies non-increasing" : ", energy increased")};
}

Outcome decay_rates() {
    std::vector<double> omegas;
    double worst_vs_abscissa = 0.0;
    std::ostringstream detail;
    for (int n : {31, 63, 127, 255}) {
        const SemiDiscreteSystem sys(Scheme::order_reduction, n, 1.0);
        const EnergyTrace t = simulate(sys, random_initial_state(n, 20240601), 0.01, 5.0, Integrator::modal);
        const double omega = fit_decay_rate(t, 2.5, 5.0);
        const double abscissa = std::abs(spectral_abscissa(sys).abscissa);
        worst_vs_abscissa = std::max(worst_vs_abscissa, std::abs(omega - abscissa) / abscissa);
        omegas.push_back(omega);
        detail << "N=" << n << " omega " << fmt(omega) << "; ";
    }
    const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
    const double spread = (*hi - *lo) / *lo;
    detail << "spread " << fmt(spread) << ", worst vs |abscissa| " << fmt(worst_vs_abscissa);
    return {spread <= 0.10 && worst_vs_abscissa <= 0.15, detail.str()};
}

Outcome continuous_inverse() {
    const auto f = [](double x) { return cplx(std::sin(std::numbers::pi * x), std::cos(3.0 * x)); };
    std::vector<double> interior, boundary;
    for (int points : {65, 129, 257, 513}) {
        const auto s = SampledFunction::uniform(points, f);
        const SampledFunction g = apply_continuous_inverse(s, 1.0);
        const double h = s.spacing();
        double worst = 0.0;
        for (std::size_t j = 2; j + 2 < g.values.size(); ++j) {
            const cplx g2 = (g.values[j + 2] - 2.0 * g.values[j] + g.values[j - 2]) / (4.0 * h * h);
            worst = std::max(worst, std::abs(-I * g2 - s.values[j]));
        }
        interior.push_back(worst);
        const std::size_t n = g.values.size() - 1;
        const cplx dg = (3.0 * g.values[n] - 4.0 * g.values[n - 1] + g.values[n - 2]) / (2.0 * h);
        boundary.push_back(std::max(std::abs(g.values[0]), std::abs(dg + I * g.values[n])) / (h * h));
    }
    bool ok = true;
    std::ostringstream detail;
    detail << "ratios";
    for (std::size_t i = 1; i < interior.size(); ++i) {
        const double ratio = interior[i - 1] / interior[i];
        ok = ok && ratio >= 3.0 && ratio <= 5.0;
        detail << ' ' << fmt(ratio);
    }
    const double bc = *std::max_element(boundary.begin(), boundary.end());
    ok = ok && bc <= 10.0;
    detail << ", boundary residual / grid^2 <= " << fmt(bc);
    return {ok, detail.str()};
}

Outcome eigensolver_oracle() {
    const SemiDiscreteSystem system(Scheme::order_reduction, 1, 1.0);
    const DenseComplexMatrix& a = system.generator();
    const cplx tr = a(0, 0) + a(1, 1), det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx r1 = (tr + disc) / 2.0, r2 = (tr - disc) / 2.0;
    const CVector ev = eigenvalues(a);
    const double err = std::min(std::max(std::abs(ev(0) - r1) / std::abs(r1), std::abs(ev(1) - r2) / std::abs(r2)),
                                std::max(std::abs(ev(0) - r2) / std::abs(r2), std::abs(ev(1) - r1) / std::abs(r1)));

    bool exact = true;
    for (const cplx& v : eigenvalues(DenseComplexMatrix::Identity(6, 6))) exact = exact && v == cplx(1.0);
    DenseComplexMatrix d = DenseComplexMatrix::Zero(4, 4);
    const std::vector<cplx> diag{cplx(2.0), cplx(0, 3), cplx(-1.0), cplx(-4, 0.5)};
    for (int i = 0; i < 4; ++i) d(i, i) = diag[i];
    std::vector<cplx> got;
    for (const cplx& v : eigenvalues(d)) got.push_back(v);
    for (const cplx& v : diag) exact = exact && std::count(got.begin(), got.end(), v) == 1;
    return {err <= 1e-10 && exact, "N=1 relative error " + fmt(err) + (exact ? ", exact cases match" : ", exact case mismatch")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dissipation identity", dissipation},
        {"triple-sum identity", triple_sum},
        {"multiplier identities", multipliers},
        {"spectrum location", spectrum_location},
        {"abscissa versus N", figures},
        {"resolvent uniformity", uniformity},
        {"midpoint energy identity", midpoint_energy},
        {"decay-rate uniformity", decay_rates},
        {"continuous inverse", continuous_inverse},
        {"eigensolver oracle", eigensolver_oracle},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !outcome.passed;
        std::printf("%s %2zu %-26s %8.2fs  %s\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
