#include "orbitkit/states.hpp"

#include <cstdlib>
#include <stdexcept>

namespace orbitkit {

namespace {

std::complex<double> ipow(std::complex<double> base, long long e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

} // namespace

std::complex<double> highest_weight_state(const WeightVector& mu,
                                          const Eigen::MatrixXcd& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n || static_cast<std::size_t>(n) != mu.size())
    throw std::invalid_argument("highest_weight_state: size mismatch");
  if (!is_dominant(mu))
    throw std::invalid_argument("highest_weight_state: weight is not weakly decreasing");
  if (n == 0) return 1.0;
  const Eigen::MatrixXcd defect =
      g.adjoint() * g - Eigen::MatrixXcd::Identity(n, n);
  if (defect.cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("highest_weight_state: matrix is not unitary");

  std::complex<double> value = 1.0;
  for (Eigen::Index k = 1; k < n; ++k) {
    const long long e = mu[k - 1] - mu[k];
    if (e != 0) value *= ipow(g.topLeftCorner(k, k).determinant(), e);
  }
  value *= ipow(g.determinant(), mu[n - 1]);
  return value;
}

} // namespace orbitkit
