#include <doctest.h>

#include "orbitkit/asymptotics.hpp"
#include "orbitkit/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

using namespace orbitkit;
using complexd = std::complex<double>;

namespace {

const std::vector<std::string> kT = {"t"};
const std::vector<std::string> kTU = {"t", "u"};

// High-precision references for int_u^v exp(i p(t)) dt, computed with two
// independent composite Gauss-Legendre resolutions (order 20 at ~2 rad/panel
// and order 24 at ~1.3 rad/panel, agreement ~2e-12) and, for quadratic
// phases, confirmed against the Fresnel-function closed form.
const complexd kQuadratic100(0.6251292347636025, 0.6314179218669337);  // t^2 on [0, 100]
const complexd kCubic50(0.7734413418364, 0.4465797294754);             // t^3 on [0, 50]
const complexd kMixed100(0.1931203470099492, 0.2697462505944859);      // 5t^2 + t on [0, 100]
const complexd kQuartic30(1.0484211510601, -0.0981244386016);          // t^4 - t on [0, 30]

// |int_0^a exp(i s^2) ds| = a |I_a| for the parabola scan, from the Fresnel
// closed form.
const double kParabolaMass10 = 0.837868251721;
const double kParabolaMass100 = 0.888524142728;
const double kParabolaMass1000 = 0.885772016362;
const double kHalfRootPi = 0.8862269254527580;

// |int_[0,1]^2 exp(i lambda t u) dt du|, from the 1-d reduction
// int_0^1 (exp(i lambda t) - 1)/(i lambda t) dt evaluated by two independent
// quadratures.
const double kPlaneMass9 = 0.3542654306669;
const double kPlaneMass100 = 0.0541766226563;
const double kPlaneMass316 = 0.0206282211087;

Eigen::MatrixXd rotation_generator() {
  Eigen::MatrixXd z(2, 2);
  z << 0, -1, 1, 0;
  return z;
}

// Z with (1/2) sigma(w, Zw) = sum_j d_j w_j^2: solve (J Z)/2 = diag(d).
Eigen::MatrixXd diagonal_generator(const std::vector<double>& diag) {
  const auto dim = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i, i) = 2.0 * diag[static_cast<std::size_t>(i)];
  return -standard_symplectic_matrix(diag.size()) * d;
}

// Orthogonal symplectic matrix: a unitary on C^n embedded in R^(2n).
Eigen::MatrixXd embedded_unitary(std::size_t n, SplitMix64& rng) {
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index r = 0; r < g.rows(); ++r)
    for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = rng.complex_gaussian();
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd real(2 * dim, 2 * dim);
  real.topLeftCorner(dim, dim) = q.real();
  real.topRightCorner(dim, dim) = -q.imag();
  real.bottomLeftCorner(dim, dim) = q.imag();
  real.bottomRightCorner(dim, dim) = q.real();
  return real;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& z) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(z.rows(), z.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < 60; ++k) {
    term = (term * z / static_cast<double>(k)).eval();
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  return sum;
}

} // namespace

TEST_CASE("polynomial text parses rationals, powers, and products") {
  const Poly square = parse_poly("t^2", kT);
  CHECK(square.degree_in(0) == 2);
  CHECK(square.evaluate({Rational(3)}) == Rational(9));

  const Poly mixed = parse_poly("3/2*t*u + u^3", kTU);
  CHECK(mixed.evaluate({Rational(2), Rational(3)}) == Rational(36));
  CHECK(mixed.evaluate({Rational(1, 2), Rational(1, 3)}) == Rational(31, 108));
  CHECK(mixed.degree_in(0) == 1);
  CHECK(mixed.degree_in(1) == 3);

  CHECK(parse_poly("-t + 1/3", kT).evaluate({Rational(1, 3)}) == Rational(0));
  CHECK(parse_poly("  2 * t ^ 3  - t ", kT).evaluate({Rational(2)}) == Rational(14));
  CHECK(parse_poly("t^0", kT) == Poly::constant(1, Rational(1)));
  CHECK(parse_poly("5", kT).is_constant());
  CHECK(parse_poly("1 - 1", kT).is_zero());

  CHECK_THROWS_AS(parse_poly("", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("q", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("2t", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t^", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t^-1", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("3/", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t**2", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t/2", kT), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t", {"t", "t"}), std::invalid_argument);
}

TEST_CASE("polynomial maps evaluate exactly at rational points") {
  const PolyMap parabola = make_poly_map({"t", "t^2"}, kT);
  CHECK(parabola.domain_dim == 1);
  CHECK(parabola.range_dim == 2);
  const std::vector<Rational> image = parabola.evaluate(std::vector<Rational>{Rational(3, 2)});
  REQUIRE(image.size() == 2);
  CHECK(image[0] == Rational(3, 2));
  CHECK(image[1] == Rational(9, 4));

  const std::vector<double> approx = parabola.evaluate(std::vector<double>{0.5});
  CHECK(approx[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(approx[1] == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(parabola.evaluate(std::vector<Rational>{Rational(1), Rational(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_poly_map({"t+q"}, kT), std::invalid_argument);
  CHECK_THROWS_AS(make_poly_map({}, kT), std::invalid_argument);
  CHECK_THROWS_AS(make_poly_map({"t"}, {}), std::invalid_argument);
}

TEST_CASE("linear phases integrate to the closed form") {
  for (const double c : {1.0, 1.5, -2.0}) {
    const Poly phase = parse_poly("t", kT) * Rational(static_cast<std::int64_t>(2 * c), 2);
    const OscillatoryReport report = oscillatory_vdc(phase, -1.0, 2.0);
    const complexd exact =
        (std::polar(1.0, 2.0 * c) - std::polar(1.0, -c)) / complexd(0.0, c);
    CHECK(std::abs(report.value - exact) <= 2e-9);
    CHECK(report.vdc_bound == doctest::Approx(4.0 / std::abs(c)).epsilon(1e-12));
    CHECK(report.respected);
  }
}

TEST_CASE("quadratic and higher phases match high-precision references") {
  struct Fixture {
    const char* text;
    double hi;
    complexd reference;
    double bound;
  };
  const Fixture fixtures[] = {
      {"t^2", 100.0, kQuadratic100, 8.0 / std::sqrt(2.0)},
      {"t^3", 50.0, kCubic50, 16.0 / std::cbrt(6.0)},
      {"5*t^2 + t", 100.0, kMixed100, 8.0 / std::sqrt(10.0)},
      {"t^4 - t", 30.0, kQuartic30, 32.0 / std::pow(24.0, 0.25)},
  };
  for (const Fixture& fixture : fixtures) {
    const std::string label = fixture.text;
    CAPTURE(label);
    const OscillatoryReport report = oscillatory_vdc(parse_poly(fixture.text, kT), 0.0, fixture.hi);
    CHECK(std::abs(report.value - fixture.reference) <= 3e-9);
    CHECK(report.quadrature_error <= 1e-9);
    CHECK(report.vdc_bound == doctest::Approx(fixture.bound).epsilon(1e-12));
    CHECK(report.respected);
  }
}

TEST_CASE("the derivative-test bound holds across the polynomial sweep") {
  struct Sweep {
    const char* text;
    std::vector<double> endpoints;
    double tail_slope;  // p'(a0) at the last endpoint a0, monotone beyond it
  };
  const Sweep sweeps[] = {
      {"t^2", {1.0, 10.0, 100.0, 1000.0}, 2000.0},
      {"t^3", {1.0, 10.0, 50.0}, 7500.0},
      {"5*t^2 + t", {1.0, 10.0, 100.0}, 1001.0},
      {"t^4 - t", {1.0, 5.6, 30.0}, 4.0 * 27000.0 - 1.0},
  };
  for (const Sweep& sweep : sweeps) {
    const std::string label = sweep.text;
    CAPTURE(label);
    const Poly phase = parse_poly(sweep.text, kT);
    double mass_at_a0 = 0;
    double bound = 0;
    for (const double a : sweep.endpoints) {
      const OscillatoryReport report = oscillatory_vdc(phase, 0.0, a);
      CHECK(report.respected);
      mass_at_a0 = std::abs(report.value);
      bound = report.vdc_bound;
    }
    // Beyond the last endpoint a0 the phase derivative is monotone and at
    // least tail_slope, so integrating by parts,
    // |int_{a0}^A exp(i p)| <= 2 / p'(a0) for every A >= a0.  Together with
    // the computed mass at a0 this certifies the bound on all of [a0, inf).
    CHECK(mass_at_a0 + 2.0 / sweep.tail_slope <= bound);
  }
}

TEST_CASE("degenerate oscillatory inputs are rejected") {
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("3", kT), 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("1 - 1", kT), 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("t*u", kTU), 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("t", kT), 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("t", kT), 0.0, 1.0, 0.0), std::invalid_argument);

  // zero-length interval: nothing to do, value exactly zero
  const OscillatoryReport empty = oscillatory_vdc(parse_poly("t^2", kT), 3.0, 3.0);
  CHECK(empty.value == complexd(0.0, 0.0));
  CHECK(empty.respected);
}

TEST_CASE("unpayable phase budgets raise quadrature errors") {
  // ~1e12 radians of phase cannot be resolved within the panel budget
  CHECK_THROWS_AS(oscillatory_vdc(parse_poly("t^4", kT), 0.0, 1000.0), std::runtime_error);
}

TEST_CASE("decay scans certify the parabola rate") {
  const PolyMap parabola = make_poly_map({"t", "t^2"}, kT);
  const std::vector<double> grid = {10.0, 31.622776601683793, 100.0, 316.22776601683796, 1000.0};
  const BohrScanReport report = bohr_decay_scan(parabola, {0.0, 1.0}, grid);

  REQUIRE(report.magnitudes.size() == grid.size());
  CHECK(report.decays);
  CHECK(report.reason.empty());
  CHECK(report.envelope_degree == 2);

  CHECK(report.magnitudes[0] * 10.0 == doctest::Approx(kParabolaMass10).epsilon(1e-8));
  CHECK(report.magnitudes[2] * 100.0 == doctest::Approx(kParabolaMass100).epsilon(1e-8));
  CHECK(report.magnitudes[4] * 1000.0 == doctest::Approx(kParabolaMass1000).epsilon(1e-8));
  CHECK(report.magnitudes[4] * 1000.0 == doctest::Approx(kHalfRootPi).epsilon(2e-3));

  // the renormalized masses a |I_a| stay bounded across the whole grid
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double scaled = report.magnitudes[i] * grid[i];
    CHECK(scaled > 0.8);
    CHECK(scaled < 0.95);
    if (i > 0) CHECK(report.magnitudes[i] < report.magnitudes[i - 1]);
  }
}

TEST_CASE("constant pairings report a trivial character") {
  const PolyMap parabola = make_poly_map({"t", "t^2"}, kT);
  const BohrScanReport zero_form = bohr_decay_scan(parabola, {0.0, 0.0}, {1.0, 10.0, 100.0});
  CHECK_FALSE(zero_form.decays);
  CHECK(zero_form.reason == "trivial character");
  for (const double m : zero_form.magnitudes) CHECK(m == 1.0);

  // the diagonal line: the form annihilates the direction of the image
  const PolyMap line = make_poly_map({"t", "t"}, kT);
  const BohrScanReport cancelled = bohr_decay_scan(line, {1.0, -1.0}, {1.0, 10.0});
  CHECK_FALSE(cancelled.decays);
  CHECK(cancelled.reason == "trivial character");
  CHECK(cancelled.magnitudes == std::vector<double>{1.0, 1.0});

  // constant nonzero phase offsets do not oscillate either
  const PolyMap offset = make_poly_map({"t", "2"}, kT);
  const BohrScanReport constant = bohr_decay_scan(offset, {0.0, 3.0}, {1.0, 10.0});
  CHECK_FALSE(constant.decays);
  CHECK(constant.reason == "trivial character");
}

TEST_CASE("two-dimensional scans decay for nondegenerate phases") {
  const PolyMap plane = make_poly_map({"t*u"}, kTU);
  const std::vector<double> grid = {3.0, 5.623413251903491, 10.0, 17.782794100389228};
  const BohrScanReport report = bohr_decay_scan(plane, {1.0}, grid);

  CHECK(report.envelope_degree == 1);
  CHECK(report.decays);
  CHECK(report.magnitudes[0] == doctest::Approx(kPlaneMass9).epsilon(5e-8));
  CHECK(report.magnitudes[2] == doctest::Approx(kPlaneMass100).epsilon(5e-8));
  CHECK(report.magnitudes[3] == doctest::Approx(kPlaneMass316).epsilon(5e-8));
}

TEST_CASE("scan inputs are validated") {
  const PolyMap parabola = make_poly_map({"t", "t^2"}, kT);
  CHECK_THROWS_AS(bohr_decay_scan(parabola, {1.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(bohr_decay_scan(parabola, {0.0, 1.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(bohr_decay_scan(parabola, {0.0, 1.0}, {2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(bohr_decay_scan(parabola, {0.0, 1.0}, {-1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(bohr_decay_scan(parabola, {0.0, 1.0}, {1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST_CASE("scan reports serialize as csv") {
  BohrScanReport report;
  report.a_values = {1.0, 10.0, 31.5};
  report.magnitudes = {1.0, 0.5, 0.001};
  CHECK(scan_csv(report) == "a,magnitude\n1,1\n10,0.5\n31.5,0.001\n");

  // shortest representations must round-trip exactly
  BohrScanReport precise;
  precise.a_values = {0.1, 1.0 / 3.0};
  precise.magnitudes = {1e-17, 123456789.25};
  const std::string csv = scan_csv(precise);
  std::size_t pos = csv.find('\n') + 1;
  for (const double expected : {0.1, 1e-17, 1.0 / 3.0, 123456789.25}) {
    const std::size_t end = csv.find_first_of(",\n", pos);
    CHECK(std::strtod(csv.c_str() + pos, nullptr) == expected);
    pos = end + 1;
  }
}

TEST_CASE("gibbs averages reproduce the closed product form") {
  // harmonic form: zeta = (1/2, 1/2) gives exactly 1 / (1 - iT)
  for (const double t : {0.3, 1.0, 10.0}) {
    const GibbsReport report = gibbs_fourier(QuadraticForm{2, {0.5, 0.5}}, t, 20000, 11);
    const complexd exact = 1.0 / complexd(1.0, -t);
    CHECK(std::abs(report.closed_form - exact) <= 1e-14);
    CHECK(std::abs(report.mc_estimate - report.closed_form) <= 3.0 * report.sigma_hat);
  }

  // zero form: every sample contributes exactly 1
  const GibbsReport flat = gibbs_fourier(QuadraticForm{4, {0.0, 0.0, 0.0, 0.0}}, 2.0, 1000, 7);
  CHECK(flat.mc_estimate == complexd(1.0, 0.0));
  CHECK(flat.closed_form == complexd(1.0, 0.0));
  CHECK(flat.sigma_hat == 0.0);

  // high temperature drives the transform toward the point mass at zero
  const GibbsReport cold = gibbs_fourier(QuadraticForm{2, {0.5, 0.5}}, 1000.0, 100000, 23);
  CHECK(std::abs(cold.closed_form) ==
        doctest::Approx(1.0 / std::sqrt(1.0 + 1e6)).epsilon(1e-12));
  CHECK(std::abs(cold.closed_form) < 2e-3);

  // identical seeds reproduce the estimate bit for bit
  const GibbsReport once = gibbs_fourier(QuadraticForm{2, {0.5, -0.25}}, 3.0, 5000, 99);
  const GibbsReport twice = gibbs_fourier(QuadraticForm{2, {0.5, -0.25}}, 3.0, 5000, 99);
  CHECK(once.mc_estimate == twice.mc_estimate);
  CHECK(once.sigma_hat == twice.sigma_hat);

  CHECK_THROWS_AS(gibbs_fourier(QuadraticForm{2, {0.5, 0.5}}, 1.0, 999, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gibbs_fourier(QuadraticForm{2, {0.5, 0.5}}, 0.0, 2000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gibbs_fourier(QuadraticForm{2, {0.5}}, 1.0, 2000, 1), std::invalid_argument);
  CHECK_THROWS_AS(gibbs_fourier(QuadraticForm{3, {0.5, 0.5, 0.5}}, 1.0, 2000, 1),
                  std::invalid_argument);
}

TEST_CASE("monte carlo stays within three standard errors on fixed fixtures") {
  struct Fixture {
    std::vector<double> zeta;
    double temperature;
    std::uint64_t seed;
  };
  const Fixture fixtures[] = {
      {{0.5, 0.5}, 0.05, 101},
      {{0.5, 0.5}, 1.0, 102},
      {{0.5, 0.5}, 1000.0, 103},
      {{-1.0, 2.0}, 0.3, 104},
      {{0.25, 0.25, -0.5, 1.5}, 0.7, 105},
      {{1.0, 1.0, 1.0, 1.0}, 5.0, 106},
      {{-0.125, 0.375, 0.625, -0.875}, 2.0, 107},
      {{3.0, -3.0}, 10.0, 108},
      {{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625}, 4.0, 109},
      {{2.0, 2.0, 2.0, 2.0, 2.0, 2.0}, 400.0, 110},
  };
  for (const Fixture& fixture : fixtures) {
    CAPTURE(fixture.seed);
    const QuadraticForm form{fixture.zeta.size(), fixture.zeta};
    const GibbsReport report = gibbs_fourier(form, fixture.temperature, 100000, fixture.seed);
    CHECK(std::abs(report.mc_estimate - report.closed_form) <= 3.0 * report.sigma_hat);
    CHECK(report.sigma_hat < 0.02);
    CHECK(report.sigma_hat > 0.0);
    CHECK(std::abs(report.closed_form) <= 1.0);
  }
}

TEST_CASE("principal coefficients diagonalize symplectic generators") {
  // rotation generator of the plane carries the harmonic form (q^2 + p^2)/2
  const QuadraticForm harmonic = principal_form(rotation_generator());
  REQUIRE(harmonic.zeta.size() == 2);
  CHECK(harmonic.zeta[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(harmonic.zeta[1] == doctest::Approx(0.5).epsilon(1e-14));

  const std::vector<double> target = {-1.0, 0.25, 0.5, 2.0};
  const Eigen::MatrixXd z = diagonal_generator(target);
  const QuadraticForm straight = principal_form(z);
  std::vector<double> sorted = target;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    CHECK(straight.zeta[i] == doctest::Approx(sorted[i]).epsilon(1e-12));

  // conjugating by an orthogonal symplectic matrix rotates the principal
  // axes without touching the coefficients
  SplitMix64 rng(2024);
  const Eigen::MatrixXd g = embedded_unitary(2, rng);
  const Eigen::MatrixXd j = standard_symplectic_matrix(4);
  REQUIRE((g.transpose() * g - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((g.transpose() * j * g - j).cwiseAbs().maxCoeff() < 1e-12);
  const QuadraticForm rotated = principal_form(g * z * g.transpose());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    CHECK(rotated.zeta[i] == doctest::Approx(sorted[i]).epsilon(1e-10));

  CHECK_THROWS_AS(principal_form(Eigen::MatrixXd::Identity(4, 4)), std::invalid_argument);
  CHECK_THROWS_AS(principal_form(Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("symplectic moments implement the half-sigma formula") {
  Eigen::VectorXd w(2);
  w << 1.0, 0.0;
  CHECK(sp_moment(w, rotation_generator()) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sp_moment(w, Eigen::MatrixXd::Zero(2, 2)) == 0.0);

  // moments of a diagonal form evaluate coordinatewise
  const std::vector<double> target = {-1.0, 0.25, 0.5, 2.0};
  const Eigen::MatrixXd z = diagonal_generator(target);
  SplitMix64 rng(5150);
  Eigen::VectorXd v(4);
  for (int i = 0; i < 4; ++i) v(i) = rng.gaussian();
  double expected = 0;
  for (int i = 0; i < 4; ++i) expected += target[static_cast<std::size_t>(i)] * v(i) * v(i);
  CHECK(sp_moment(v, z) == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(sp_moment(w, Eigen::MatrixXd::Identity(2, 2)), std::invalid_argument);
  Eigen::VectorXd wrong(3);
  wrong << 1, 2, 3;
  CHECK_THROWS_AS(sp_moment(wrong, rotation_generator()), std::invalid_argument);
}

TEST_CASE("moments transform equivariantly under the symplectic group") {
  SplitMix64 rng(777);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd s(4, 4), s2(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) {
        s(r, c) = s(c, r) = rng.gaussian() * 0.4;
        s2(r, c) = s2(c, r) = rng.gaussian() * 0.4;
      }
    const Eigen::MatrixXd j = standard_symplectic_matrix(4);
    const Eigen::MatrixXd z = -j * s;   // J Z symmetric <=> Z infinitesimally symplectic
    const Eigen::MatrixXd g = matrix_exponential(-j * s2);
    REQUIRE((g.transpose() * j * g - j).cwiseAbs().maxCoeff() < 1e-10);

    Eigen::VectorXd v(4);
    for (int i = 0; i < 4; ++i) v(i) = rng.gaussian();
    const double moved = sp_moment(g * v, z);
    const double pulled = sp_moment(v, Eigen::MatrixXd(g.inverse() * z * g));
    CHECK(moved == doctest::Approx(pulled).epsilon(1e-10));
  }
}

TEST_CASE("principal axes carry the moments that feed the gibbs form") {
  SplitMix64 rng(31337);
  Eigen::MatrixXd s(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = r; c < 6; ++c) s(r, c) = s(c, r) = rng.gaussian();
  const Eigen::MatrixXd j = standard_symplectic_matrix(6);
  const Eigen::MatrixXd z = -j * s;
  const QuadraticForm form = principal_form(z);

  // the eigenvectors of (J Z)/2 are the principal axes; the moment of each
  // axis vector must be the matching coefficient handed to the Gibbs average
  Eigen::MatrixXd half_form = 0.5 * j * z;
  half_form = 0.5 * (half_form + half_form.transpose().eval());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(half_form);
  for (int i = 0; i < 6; ++i) {
    const double moment = sp_moment(solver.eigenvectors().col(i), z);
    CHECK(moment == doctest::Approx(form.zeta[static_cast<std::size_t>(i)]).epsilon(1e-10));
  }

  const GibbsReport report = gibbs_fourier(form, 0.5, 50000, 424242);
  CHECK(std::abs(report.mc_estimate - report.closed_form) <= 3.0 * report.sigma_hat);
}
