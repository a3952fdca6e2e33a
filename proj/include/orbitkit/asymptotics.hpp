#pragma once

#include "orbitkit/polynomial.hpp"
#include "orbitkit/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orbitkit {

// Polynomial text syntax with exact rational coefficients:
//
//   poly   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := integer [ '/' integer ]  |  variable [ '^' integer ]
//
// e.g. "t^2" or "3/2*t*u + u^3".  Variable names bind to indices through the
// `variables` list; anything unrecognized raises std::invalid_argument with
// the offending position.
Poly parse_poly(const std::string& text, const std::vector<std::string>& variables);

// Polynomial map R^m -> R^n, one exact rational polynomial per output
// coordinate.  Evaluation at rational points is exact.
struct PolyMap {
  std::size_t domain_dim = 0;
  std::size_t range_dim = 0;
  std::vector<Poly> coordinates;

  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;
  std::vector<double> evaluate(const std::vector<double>& point) const;
};

PolyMap make_poly_map(const std::vector<std::string>& coordinate_text,
                      const std::vector<std::string>& variables);

struct OscillatoryReport {
  std::complex<double> value;   // int_u^v exp(i p(t)) dt
  double quadrature_error = 0;  // accumulated panel error estimate
  long panels = 0;
  double vdc_bound = 0;         // 2^(k+1) / |k! c|^(1/k), k = deg p, c = leading coefficient
  bool respected = false;       // |value| <= vdc_bound + tol
};

// Adaptive Gauss-Kronrod evaluation of int_u^v exp(i p(t)) dt to absolute
// accuracy tol, paired with the derivative-test bound that depends only on
// the degree and leading coefficient of the phase.  The phase must be a
// nonconstant univariate polynomial.  Throws std::runtime_error when the
// panel budget is exhausted before the tolerance is met.
OscillatoryReport oscillatory_vdc(const Poly& phase, double u, double v, double tol = 1e-9);

struct BohrScanReport {
  std::vector<double> a_values;
  std::vector<double> magnitudes;  // |I_a|, I_a = int_{[0,1]^m} exp(i<phi, P(a x)>) dx
  bool decays = false;
  std::string reason;            // explanation when decay is not certified
  double envelope_constant = 0;  // fitted C with |I_a| <= C a^(-1/k) on the tail
  int envelope_degree = 0;       // k = largest single-variable degree of <phi, P>
};

// Dilation scan of the character integral I_a over the given increasing grid.
// Decay is certified by an envelope fit: C is chosen on the first half of the
// grid and the second half must stay below C a^(-1/k).  A constant pairing
// <phi, P> makes the character trivial on the image; the scan then reports
// |I_a| = 1 with reason "trivial character".
BohrScanReport bohr_decay_scan(const PolyMap& map, const std::vector<double>& phi,
                               const std::vector<double>& a_values, double tol = 1e-9);

// CSV rendering of a scan: header "a,magnitude", one row per grid point,
// shortest round-trip decimal formatting, LF line endings.
std::string scan_csv(const BohrScanReport& report);

// Matrix J of the standard symplectic form on R^(2n): sigma(u, v) = u^T J v.
Eigen::MatrixXd standard_symplectic_matrix(std::size_t dimension);

// Quadratic moment (1/2) sigma(w, Zw) of the momentum map for the linear
// symplectic action.  Z must be infinitesimally symplectic, i.e.
// sigma(Zu, v) + sigma(u, Zv) = 0 (entrywise tolerance 1e-12).
double sp_moment(const Eigen::VectorXd& w, const Eigen::MatrixXd& generator);

// Principal-axis coefficients of the quadratic form w -> (1/2) sigma(w, Zw).
struct QuadraticForm {
  std::size_t dimension = 0;  // 2n
  std::vector<double> zeta;   // coefficients in principal axes, ascending
};

// For Z in sp(2n) the matrix J Z is symmetric and (1/2) sigma(w, Zw) =
// w^T (J Z / 2) w, so the zeta_j are the eigenvalues of (J Z) / 2.
QuadraticForm principal_form(const Eigen::MatrixXd& generator);

struct GibbsReport {
  std::complex<double> mc_estimate;
  std::complex<double> closed_form;  // prod_j (1 - 2 i T zeta_j)^(-1/2), principal branch
  double sigma_hat = 0;              // standard error of the Monte Carlo mean
};

// Fourier transform of the Gaussian average: expectation of exp(i q(w)) over
// w ~ N(0, T I), where q(w) = sum_j zeta_j w_j^2 in principal axes.  The
// closed product form uses the principal branch, which is continuous in T
// from the value 1 at T = 0 because 1 - 2iT zeta never leaves the right half
// plane.  Sampling is chunked into deterministic substreams; throws
// std::runtime_error if the estimate misses the closed form by more than
// three standard errors.
GibbsReport gibbs_fourier(const QuadraticForm& form, double temperature, long samples,
                          std::uint64_t seed);

} // namespace orbitkit
