#include "orbitkit/asymptotics.hpp"

#include "orbitkit/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace orbitkit {

namespace {

// ---------------------------------------------------------------------------
// polynomial text syntax

struct PolyLexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("poly parse error at position " + std::to_string(pos) + ": " +
                                what);
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    long long value = 0;
    const auto result = std::from_chars(text.data() + start, text.data() + pos, value);
    if (result.ec != std::errc()) fail("integer out of range");
    return value;
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size()) {
      const unsigned char c = static_cast<unsigned char>(text[pos]);
      const bool head = std::isalpha(c) || c == '_';
      if (!(head || (pos > start && std::isdigit(c)))) break;
      ++pos;
    }
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }
};

Poly parse_factor(PolyLexer& lx, const std::vector<std::string>& variables) {
  const char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    const long long num = lx.integer();
    long long den = 1;
    if (lx.eat('/')) {
      den = lx.integer();
      if (den == 0) lx.fail("zero denominator");
    }
    return Poly::constant(variables.size(), Rational(num, den));
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    const std::string name = lx.identifier();
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) lx.fail("unknown variable '" + name + "'");
    const Poly var = Poly::variable(variables.size(), static_cast<std::size_t>(it - variables.begin()));
    if (!lx.eat('^')) return var;
    const long long e = lx.integer();
    if (e > 64) lx.fail("exponent out of range");
    Poly power = Poly::constant(variables.size(), Rational(1));
    for (long long i = 0; i < e; ++i) power = power * var;
    return power;
  }
  lx.fail("expected a number or a variable");
}

Poly parse_term(PolyLexer& lx, const std::vector<std::string>& variables) {
  Poly product = parse_factor(lx, variables);
  while (lx.eat('*')) product = product * parse_factor(lx, variables);
  return product;
}

// ---------------------------------------------------------------------------
// adaptive Gauss-Kronrod quadrature
//
// 15-point Kronrod extension of 7-point Gauss; nodes are symmetric, the last
// entry is the midpoint.  The embedded pair gives a per-panel error estimate
// |K15 - G7|; panels are refined globally worst-first.

constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

constexpr long kPanelBudget = 1000000;

struct Panel {
  double lo = 0, hi = 0;
  std::complex<double> value;
  double error = 0;
};

bool lighter_error(const Panel& a, const Panel& b) { return a.error < b.error; }

template <class F>
Panel evaluate_panel(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const std::complex<double> center = f(mid);
  std::complex<double> kronrod = kKronrodWeights[7] * center;
  std::complex<double> gauss = kGaussWeights[3] * center;
  for (int i = 0; i < 7; ++i) {
    const std::complex<double> pair = f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

// Polynomial phase recentered onto each panel.  Evaluating exp(i p(t))
// directly loses ~eps*|p| of phase per sample once |p| grows past 1e6, and
// because the embedded pair weights the same noisy samples differently that
// rounding noise floors the error estimate near eps * |p| * (hi - lo).
// Shifting the polynomial to the panel midpoint in extended precision keeps
// the locally integrated phase small; the constant term is reduced mod 2pi
// and applied as a unit rotation afterwards, which leaves |K15 - G7| and the
// panel magnitude untouched.
struct ShiftedPhase {
  std::vector<long double> coef;  // ascending powers, degree >= 1

  Panel evaluate(double lo, double hi) const {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::vector<long double> local(coef);
    const std::size_t n = local.size() - 1;
    for (std::size_t j = 0; j < n; ++j)  // Ruffini-Horner Taylor shift
      for (std::size_t i = n; i-- > j;) local[i] += static_cast<long double>(mid) * local[i + 1];
    const long double offset =
        std::remainder(local[0], 2.0L * std::numbers::pi_v<long double>);
    std::vector<double> slope(n);
    for (std::size_t i = 0; i < n; ++i) slope[i] = static_cast<double>(local[i + 1]);
    const auto f = [&](double d) {
      double psi = 0;
      for (std::size_t i = slope.size(); i-- > 0;) psi = psi * d + slope[i];
      return std::polar(1.0, psi * d);
    };
    Panel panel = evaluate_panel(f, -half, half);
    panel.lo = lo;
    panel.hi = hi;
    panel.value *= std::polar(1.0, static_cast<double>(offset));
    return panel;
  }
};

struct QuadratureOutcome {
  std::complex<double> value;
  double error = 0;
  long panels = 0;
  bool converged = false;
};

// Oscillatory integrands need panel counts proportional to the total phase
// swept, so the initial grid is sized from the caller's phase-variation
// estimate and refinement only polishes it.  `make(a, b)` produces the
// evaluated panel for [a, b].
template <class MakePanel>
QuadratureOutcome integrate_adaptive(MakePanel&& make, double lo, double hi, double tol,
                                     double phase_span) {
  QuadratureOutcome out;
  if (!(hi > lo)) {
    out.converged = true;
    return out;
  }
  // ~1.6 radians of phase per panel keeps the 15-point rule in its
  // superconvergent regime, so the pre-split alone usually meets tolerance
  // and bisection only has to clean up endpoint effects.
  long initial = 1;
  if (phase_span > 4.0)
    initial = std::min(static_cast<long>(phase_span / 1.6) + 1, 3 * kPanelBudget / 4);

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(std::min(kPanelBudget, 2 * initial + 64)));
  double total_error = 0;
  for (long i = 0; i < initial; ++i) {
    const double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(initial);
    const double b =
        (i + 1 == initial) ? hi : lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(initial);
    panels.push_back(make(a, b));
    total_error += panels.back().error;
  }
  std::make_heap(panels.begin(), panels.end(), lighter_error);

  long steps = 0;
  while (static_cast<long>(panels.size()) < kPanelBudget) {
    if (total_error <= tol) {
      total_error = 0;  // incremental bookkeeping drifts; confirm with a fresh sum
      for (const Panel& p : panels) total_error += p.error;
      if (total_error <= tol) break;
    }
    std::pop_heap(panels.begin(), panels.end(), lighter_error);
    const Panel worst = panels.back();
    panels.pop_back();
    total_error -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    for (const Panel& child : {make(worst.lo, mid), make(mid, worst.hi)}) {
      total_error += child.error;
      panels.push_back(child);
      std::push_heap(panels.begin(), panels.end(), lighter_error);
    }
    if ((++steps & 0xffff) == 0) {
      total_error = 0;
      for (const Panel& p : panels) total_error += p.error;
    }
  }

  std::complex<double> sum = 0, carry = 0;
  double error = 0;
  for (const Panel& p : panels) {
    error += p.error;
    const std::complex<double> y = p.value - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  out.value = sum;
  out.error = error;
  out.panels = static_cast<long>(panels.size());
  out.converged = error <= tol;
  return out;
}

double horner(const std::vector<double>& ascending, double t) {
  double value = 0;
  for (std::size_t i = ascending.size(); i-- > 0;) value = value * t + ascending[i];
  return value;
}

// Total variation of a phase function sampled on a fine grid.  Polynomial
// phases are piecewise monotone with few turning points, so the sampled sum
// of |increments| is an accurate estimate of the true variation.
template <class P>
double sampled_variation(P&& phase, double lo, double hi, int steps) {
  double variation = 0;
  double prev = phase(lo);
  for (int i = 1; i <= steps; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
    const double cur = phase(t);
    variation += std::abs(cur - prev);
    prev = cur;
  }
  return variation;
}

// Dilated pairing <phi, P(a x)> flattened to monomials with the dilation
// factor folded into the coefficients.
struct DilatedPhase {
  std::size_t nvars = 0;
  std::vector<std::pair<std::vector<int>, double>> terms;

  double operator()(const std::vector<double>& x) const {
    double sum = 0;
    for (const auto& [expo, coef] : terms) {
      double prod = coef;
      for (std::size_t v = 0; v < nvars; ++v)
        for (int k = 0; k < expo[v]; ++k) prod *= x[v];
      sum += prod;
    }
    return sum;
  }
};

// Iterated adaptive integration of exp(i phase) over the unit cube, innermost
// variable first.  Coordinates below `level` are scratch space owned by the
// recursion; the phase variation along each axis is probed with the inner
// coordinates pinned at a few representative values.
std::complex<double> integrate_cube(const DilatedPhase& phase, std::vector<double>& point,
                                    std::size_t level, double tol) {
  if (level == 0) {
    const auto slice = [&](double t) {
      point[0] = t;
      return phase(point);
    };
    const double span = sampled_variation(slice, 0.0, 1.0, 2048);
    const auto f = [&](double t) {
      point[0] = t;
      return std::polar(1.0, phase(point));
    };
    const auto make = [&](double a, double b) { return evaluate_panel(f, a, b); };
    const QuadratureOutcome q = integrate_adaptive(make, 0.0, 1.0, tol, span);
    if (!q.converged)
      throw std::runtime_error("bohr_decay_scan: quadrature exhausted its panel budget");
    return q.value;
  }
  double span = 0;
  for (const double probe : {0.0, 0.5, 1.0}) {
    for (std::size_t i = 0; i < level; ++i) point[i] = probe;
    const auto slice = [&](double t) {
      point[level] = t;
      return phase(point);
    };
    span = std::max(span, sampled_variation(slice, 0.0, 1.0, 2048));
  }
  const auto f = [&](double t) {
    point[level] = t;
    return integrate_cube(phase, point, level - 1, tol);
  };
  const auto make = [&](double a, double b) { return evaluate_panel(f, a, b); };
  const QuadratureOutcome q = integrate_adaptive(make, 0.0, 1.0, tol, span);
  if (!q.converged)
    throw std::runtime_error("bohr_decay_scan: quadrature exhausted its panel budget");
  return q.value;
}

std::string shortest_decimal(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

void require_sp(const Eigen::MatrixXd& generator, const Eigen::MatrixXd& j, const char* who) {
  const Eigen::MatrixXd defect = generator.transpose() * j + j * generator;
  if (defect.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument(std::string(who) + ": generator is not infinitesimally symplectic");
}

void require_even_square(const Eigen::MatrixXd& generator, const char* who) {
  if (generator.rows() != generator.cols() || generator.rows() == 0 || generator.rows() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": generator must be square of even dimension");
}

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty())
      throw std::invalid_argument("parse_poly: empty variable name");
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw std::invalid_argument("parse_poly: duplicate variable name '" + variables[i] + "'");
  }
  PolyLexer lx{text};
  if (lx.peek() == '\0') lx.fail("empty polynomial");
  Poly sum(variables.size());
  bool leading = true;
  while (true) {
    int sign = 1;
    if (lx.eat('-'))
      sign = -1;
    else if (!lx.eat('+') && !leading)
      lx.fail("expected '+' or '-'");
    leading = false;
    const Poly term = parse_term(lx, variables);
    sum = sign > 0 ? sum + term : sum - term;
    if (lx.peek() == '\0') return sum;
  }
}

std::vector<Rational> PolyMap::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != domain_dim)
    throw std::invalid_argument("PolyMap::evaluate: arity mismatch");
  std::vector<Rational> image;
  image.reserve(coordinates.size());
  for (const Poly& coordinate : coordinates) image.push_back(coordinate.evaluate(point));
  return image;
}

std::vector<double> PolyMap::evaluate(const std::vector<double>& point) const {
  if (point.size() != domain_dim)
    throw std::invalid_argument("PolyMap::evaluate: arity mismatch");
  std::vector<double> image;
  image.reserve(coordinates.size());
  for (const Poly& coordinate : coordinates) image.push_back(coordinate.evaluate(point));
  return image;
}

PolyMap make_poly_map(const std::vector<std::string>& coordinate_text,
                      const std::vector<std::string>& variables) {
  if (variables.empty()) throw std::invalid_argument("make_poly_map: no variables");
  if (coordinate_text.empty()) throw std::invalid_argument("make_poly_map: no coordinates");
  PolyMap map;
  map.domain_dim = variables.size();
  map.range_dim = coordinate_text.size();
  map.coordinates.reserve(coordinate_text.size());
  for (const std::string& text : coordinate_text)
    map.coordinates.push_back(parse_poly(text, variables));
  return map;
}

OscillatoryReport oscillatory_vdc(const Poly& phase, double u, double v, double tol) {
  if (phase.nvars() != 1)
    throw std::invalid_argument("oscillatory_vdc: phase must be a univariate polynomial");
  const int degree = phase.degree_in(0);
  if (degree < 1) throw std::invalid_argument("oscillatory_vdc: phase polynomial is constant");
  if (!(tol > 0)) throw std::invalid_argument("oscillatory_vdc: tolerance must be positive");
  if (!(u <= v)) throw std::invalid_argument("oscillatory_vdc: interval must satisfy u <= v");

  std::vector<double> coef(static_cast<std::size_t>(degree) + 1, 0.0);
  ShiftedPhase shifted{std::vector<long double>(static_cast<std::size_t>(degree) + 1, 0.0L)};
  for (const auto& [mono, c] : phase.terms()) {
    const auto power = static_cast<std::size_t>(mono[0]);
    coef[power] = c.to_double();
    shifted.coef[power] =
        static_cast<long double>(c.num()) / static_cast<long double>(c.den());
  }

  double k_factorial = 1;
  for (int i = 2; i <= degree; ++i) k_factorial *= i;

  OscillatoryReport report;
  report.vdc_bound = std::pow(2.0, degree + 1) /
                     std::pow(std::abs(k_factorial * coef.back()), 1.0 / degree);

  const double span = sampled_variation([&](double t) { return horner(coef, t); }, u, v, 4096);
  const QuadratureOutcome q = integrate_adaptive(
      [&](double a, double b) { return shifted.evaluate(a, b); }, u, v, tol, span);
  if (!q.converged)
    throw std::runtime_error("oscillatory_vdc: error estimate " + std::to_string(q.error) +
                             " still above tolerance after " + std::to_string(q.panels) +
                             " panels");
  report.value = q.value;
  report.quadrature_error = q.error;
  report.panels = q.panels;
  report.respected = std::abs(q.value) <= report.vdc_bound + tol;
  return report;
}

BohrScanReport bohr_decay_scan(const PolyMap& map, const std::vector<double>& phi,
                               const std::vector<double>& a_values, double tol) {
  if (map.coordinates.size() != map.range_dim || map.range_dim == 0 || map.domain_dim == 0)
    throw std::invalid_argument("bohr_decay_scan: malformed polynomial map");
  for (const Poly& coordinate : map.coordinates)
    if (coordinate.nvars() != map.domain_dim)
      throw std::invalid_argument("bohr_decay_scan: coordinate arity mismatch");
  if (phi.size() != map.range_dim)
    throw std::invalid_argument("bohr_decay_scan: phi must have one entry per output coordinate");
  if (a_values.empty()) throw std::invalid_argument("bohr_decay_scan: empty dilation grid");
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    if (!(a_values[i] > 0))
      throw std::invalid_argument("bohr_decay_scan: dilations must be positive");
    if (i > 0 && !(a_values[i] > a_values[i - 1]))
      throw std::invalid_argument("bohr_decay_scan: dilations must be strictly increasing");
  }
  if (!(tol > 0)) throw std::invalid_argument("bohr_decay_scan: tolerance must be positive");

  // pair the linear form with the map and flatten to monomials
  std::map<std::vector<int>, double> combined;
  for (std::size_t i = 0; i < map.range_dim; ++i)
    for (const auto& [mono, c] : map.coordinates[i].terms()) combined[mono] += phi[i] * c.to_double();

  BohrScanReport report;
  report.a_values = a_values;

  int degree = 0;
  std::vector<std::pair<std::vector<int>, double>> active;
  for (const auto& [mono, coef] : combined) {
    if (coef == 0.0) continue;
    const int top = *std::max_element(mono.begin(), mono.end());
    if (top == 0) continue;  // constant offset only shifts the phase
    degree = std::max(degree, top);
    active.emplace_back(mono, coef);
  }
  if (degree == 0) {
    report.magnitudes.assign(a_values.size(), 1.0);
    report.decays = false;
    report.reason = "trivial character";
    return report;
  }
  report.envelope_degree = degree;

  for (const double a : a_values) {
    DilatedPhase phase;
    phase.nvars = map.domain_dim;
    phase.terms = active;
    for (auto& [mono, coef] : phase.terms) {
      int total = 0;
      for (const int e : mono) total += e;
      coef *= std::pow(a, total);
    }
    std::vector<double> point(map.domain_dim, 0.0);
    const std::complex<double> value =
        integrate_cube(phase, point, map.domain_dim - 1, tol / static_cast<double>(map.domain_dim));
    report.magnitudes.push_back(std::abs(value));
  }

  const std::size_t n = a_values.size();
  if (n < 2) {
    report.decays = false;
    report.reason = "grid too short";
    return report;
  }
  const std::size_t fitted = n / 2;
  const double inv_degree = 1.0 / static_cast<double>(degree);
  double envelope = 0;
  for (std::size_t i = 0; i < fitted; ++i)
    envelope = std::max(envelope, report.magnitudes[i] * std::pow(a_values[i], inv_degree));
  report.envelope_constant = envelope;

  bool certified = report.magnitudes.back() < report.magnitudes.front();
  for (std::size_t i = fitted; i < n; ++i)
    certified = certified &&
                report.magnitudes[i] <= envelope * std::pow(a_values[i], -inv_degree) * (1 + 1e-6);
  report.decays = certified;
  if (!certified) report.reason = "no decaying envelope";
  return report;
}

std::string scan_csv(const BohrScanReport& report) {
  std::string out = "a,magnitude\n";
  for (std::size_t i = 0; i < report.a_values.size(); ++i) {
    out += shortest_decimal(report.a_values[i]);
    out += ',';
    out += shortest_decimal(report.magnitudes[i]);
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd standard_symplectic_matrix(std::size_t dimension) {
  if (dimension == 0 || dimension % 2 != 0)
    throw std::invalid_argument("standard_symplectic_matrix: dimension must be positive and even");
  const auto n = static_cast<Eigen::Index>(dimension / 2);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

double sp_moment(const Eigen::VectorXd& w, const Eigen::MatrixXd& generator) {
  require_even_square(generator, "sp_moment");
  if (w.size() != generator.rows())
    throw std::invalid_argument("sp_moment: vector and generator dimensions differ");
  const Eigen::MatrixXd j = standard_symplectic_matrix(static_cast<std::size_t>(generator.rows()));
  require_sp(generator, j, "sp_moment");
  return 0.5 * w.dot(j * (generator * w));
}

QuadraticForm principal_form(const Eigen::MatrixXd& generator) {
  require_even_square(generator, "principal_form");
  const Eigen::MatrixXd j = standard_symplectic_matrix(static_cast<std::size_t>(generator.rows()));
  require_sp(generator, j, "principal_form");
  Eigen::MatrixXd half_form = 0.5 * j * generator;
  half_form = 0.5 * (half_form + half_form.transpose().eval());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(half_form);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("principal_form: eigensolver failed");
  QuadraticForm form;
  form.dimension = static_cast<std::size_t>(generator.rows());
  form.zeta.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + generator.rows());
  return form;
}

GibbsReport gibbs_fourier(const QuadraticForm& form, double temperature, long samples,
                          std::uint64_t seed) {
  if (form.dimension == 0 || form.dimension % 2 != 0)
    throw std::invalid_argument("gibbs_fourier: form dimension must be positive and even");
  if (form.zeta.size() != form.dimension)
    throw std::invalid_argument("gibbs_fourier: need one principal coefficient per dimension");
  if (!(temperature > 0)) throw std::invalid_argument("gibbs_fourier: temperature must be positive");
  if (samples < 1000) throw std::invalid_argument("gibbs_fourier: at least 1000 samples required");

  GibbsReport report;
  std::complex<double> closed = 1;
  for (const double zeta : form.zeta)
    closed *= std::exp(-0.5 * std::log(std::complex<double>(1.0, -2.0 * temperature * zeta)));
  report.closed_form = closed;

  const double scale = std::sqrt(temperature);
  SplitMix64 master(seed);
  double sum_re = 0, sum_im = 0, sum_sq_re = 0, sum_sq_im = 0;
  constexpr long kChunk = 4096;
  for (long start = 0; start < samples; start += kChunk) {
    SplitMix64 rng = master.split();
    const long stop = std::min(samples, start + kChunk);
    for (long i = start; i < stop; ++i) {
      double q = 0;
      for (const double zeta : form.zeta) {
        const double w = scale * rng.gaussian();
        q += zeta * w * w;
      }
      const double re = std::cos(q), im = std::sin(q);
      sum_re += re;
      sum_im += im;
      sum_sq_re += re * re;
      sum_sq_im += im * im;
    }
  }
  const double n = static_cast<double>(samples);
  const std::complex<double> mean(sum_re / n, sum_im / n);
  const double var_re = std::max(0.0, (sum_sq_re - n * mean.real() * mean.real()) / (n - 1));
  const double var_im = std::max(0.0, (sum_sq_im - n * mean.imag() * mean.imag()) / (n - 1));
  report.mc_estimate = mean;
  report.sigma_hat = std::sqrt((var_re + var_im) / n);
  if (std::abs(mean - closed) > 3.0 * report.sigma_hat)
    throw std::runtime_error(
        "gibbs_fourier: Monte Carlo estimate missed the closed form by more than three standard "
        "errors");
  return report;
}

} // namespace orbitkit
