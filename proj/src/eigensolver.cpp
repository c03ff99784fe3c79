// LAPACK zgeev behind the Eigen-typed interface in spectral.hpp.

#include <lapacke.h>

#include <algorithm>

#include <string>

#include "sfd/errors.hpp"
#include "sfd/spectral.hpp"

namespace sfd {

namespace {

void check_square(const DenseComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw DomainError(std::string(who) + ": matrix must be square and non-empty");
    if (a.rows() > kMaxEigenDimension)
        throw DomainError(std::string(who) + ": dimension " + std::to_string(a.rows()) +
                          " exceeds cap " + std::to_string(kMaxEigenDimension));
}

auto* lapack_ptr(cplx* p) { return reinterpret_cast<lapack_complex_double*>(p); }

EigenPairs run_zgeev(const DenseComplexMatrix& a, bool want_vectors, const char* who) {
    check_square(a, who);
    const auto n = static_cast<lapack_int>(a.rows());
    DenseComplexMatrix work = a;  // zgeev overwrites its input
    EigenPairs out;
    out.values.resize(n);
    if (want_vectors) out.vectors.resize(n, n);
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, lapack_ptr(work.data()),
                      n, lapack_ptr(out.values.data()), nullptr, 1,
                      want_vectors ? lapack_ptr(out.vectors.data()) : nullptr,
                      want_vectors ? n : 1);
    if (info < 0) throw DomainError(std::string(who) + ": zgeev rejected argument " +
                                    std::to_string(-info));
    if (info > 0)
        throw NumericalError(std::string(who) + ": QR iteration failed to converge (" +
                             std::to_string(info) + " eigenvalues unresolved)");
    return out;
}

}  // namespace

CVector eigenvalues(const DenseComplexMatrix& a) {
    return run_zgeev(a, false, "eigenvalues").values;
}

EigenPairs eigenpairs(const DenseComplexMatrix& a) { return run_zgeev(a, true, "eigenpairs"); }

double max_eigen_residual(const DenseComplexMatrix& a, const EigenPairs& pairs, Execution exec) {
    const double scale = a.norm();
    if (scale == 0.0) return 0.0;
    const auto n = static_cast<std::size_t>(pairs.values.size());
    std::vector<double> residual(n);
    for_each_index(exec, n, [&](std::size_t j) {
        const auto col = static_cast<Eigen::Index>(j);
        const CVector v = pairs.vectors.col(col);
        residual[j] = (a * v - pairs.values(col) * v).norm() / scale;
    });
    double worst = 0.0;
    for (double r : residual) worst = std::max(worst, r);
    return worst;
}

}  // namespace sfd
