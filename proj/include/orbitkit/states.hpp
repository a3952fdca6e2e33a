#pragma once

#include "orbitkit/weights.hpp"

#include <Eigen/Dense>

#include <complex>

namespace orbitkit {

// Matrix coefficient of the top weight vector of the u(n) module with
// dominant highest weight mu, as a function of the group element g: the
// product of leading principal minors m_k(g)^{mu_k - mu_{k+1}} times
// det(g)^{mu_n}.  Normalized so the identity maps to 1, with |value| <= 1
// on the unitary group.  Throws std::invalid_argument when g is not unitary
// within 1e-10 or mu is not weakly decreasing.
std::complex<double> highest_weight_state(const WeightVector& mu,
                                          const Eigen::MatrixXcd& g);

} // namespace orbitkit
