#include <stdexcept>
#include <string>

#include <lapacke.h>

#include "arcwave/operators.hpp"

namespace arcwave {

namespace {

EigenDecomposition zgeev(const Eigen::MatrixXcd& a, bool vectors) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectrum: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EigenDecomposition out;
  out.values.resize(n);
  if (n == 0) return out;
  Eigen::MatrixXcd work = a;
  if (vectors) out.vectors.resize(n, n);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', vectors ? 'V' : 'N', n, reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(out.values.data()), nullptr, 1,
      vectors ? reinterpret_cast<lapack_complex_double*>(out.vectors.data()) : nullptr, vectors ? n : 1);
  if (info > 0)
    throw std::runtime_error("spectrum: QR iteration failed to converge (" + std::to_string(info) +
                             " eigenvalues unresolved)");
  if (info < 0) throw std::invalid_argument("spectrum: invalid argument " + std::to_string(-info) + " to zgeev");
  return out;
}

}  // namespace

Eigen::VectorXcd spectrum(const Eigen::MatrixXcd& a) { return zgeev(a, false).values; }

EigenDecomposition eigen_decomposition(const Eigen::MatrixXcd& a) { return zgeev(a, true); }

}  // namespace arcwave
