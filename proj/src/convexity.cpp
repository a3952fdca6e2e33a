#include "orbitkit/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace orbitkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Row indices where the 0/1 vertex vector is 1.
std::vector<Eigen::Index> support_of(const WeightVector& w, std::size_t k) {
  std::vector<Eigen::Index> s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) s.push_back(static_cast<Eigen::Index>(i));
    else if (w[i] != 0)
      throw std::invalid_argument("kostant_ascent: vertex entries must be 0 or 1");
  }
  if (s.size() != k)
    throw std::invalid_argument("kostant_ascent: vertex support does not match the rank");
  return s;
}

Eigen::MatrixXcd submatrix_rows(const Eigen::MatrixXcd& v,
                                const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXcd m(rows.size(), v.cols());
  for (std::size_t a = 0; a < rows.size(); ++a) m.row(a) = v.row(rows[a]);
  return m;
}

std::vector<std::vector<Eigen::Index>> supports_of(const std::vector<WeightVector>& vertices,
                                                   std::size_t k) {
  if (vertices.empty())
    throw std::invalid_argument("kostant_ascent: empty vertex list");
  const std::size_t n = vertices.front().size();
  std::vector<std::vector<Eigen::Index>> out;
  for (const auto& w : vertices) {
    if (w.size() != n)
      throw std::invalid_argument("kostant_ascent: vertex length mismatch");
    out.push_back(support_of(w, k));
  }
  return out;
}

double objective_impl(const Eigen::MatrixXcd& v,
                      const std::vector<std::vector<Eigen::Index>>& supports,
                      const std::vector<double>& coeffs) {
  double f = 0;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const std::complex<double> det = submatrix_rows(v, supports[j]).determinant();
    f += coeffs[j] * std::log(std::norm(det));
  }
  const double gram = (v.adjoint() * v).determinant().real();
  return f - std::log(gram);
}

Eigen::MatrixXcd gradient_impl(const Eigen::MatrixXcd& v,
                               const std::vector<std::vector<Eigen::Index>>& supports,
                               const std::vector<double>& coeffs) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(v.rows(), v.cols());
  for (std::size_t j = 0; j < supports.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const Eigen::MatrixXcd minv_adj = submatrix_rows(v, supports[j]).inverse().adjoint();
    for (std::size_t a = 0; a < supports[j].size(); ++a)
      g.row(supports[j][a]) += 2.0 * coeffs[j] * minv_adj.row(a);
  }
  g -= 2.0 * v * (v.adjoint() * v).inverse();
  return g;
}

} // namespace

Eigen::MatrixXcd haar_unitary(std::size_t n, SplitMix64& rng) {
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> d = r(i, i);
    q.col(i) *= std::abs(d) == 0 ? 1.0 : d / std::abs(d);
  }
  return q;
}

std::vector<double> conjugated_diagonal(const Eigen::MatrixXcd& u,
                                        const std::vector<double>& spectrum) {
  const std::size_t n = spectrum.size();
  if (static_cast<std::size_t>(u.rows()) != n || static_cast<std::size_t>(u.cols()) != n)
    throw std::invalid_argument("conjugated_diagonal: size mismatch");
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i] += std::norm(u(i, j)) * spectrum[j];
  return d;
}

SampleReport kostant_sample(const std::vector<double>& spectrum, std::size_t count,
                            std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("kostant_sample: count must be positive");
  SplitMix64 root(seed);
  std::size_t passed = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double max_slack = -std::numeric_limits<double>::infinity();
  double max_dev = 0;
  for (std::size_t s = 0; s < count; ++s) {
    SplitMix64 rng = root.split(); // one substream per sample
    const auto u = haar_unitary(spectrum.size(), rng);
    const auto d = conjugated_diagonal(u, spectrum);
    const auto slack = majorization_slack(d, spectrum);
    min_slack = std::min(min_slack, slack.min_slack);
    max_slack = std::max(max_slack, slack.min_slack);
    max_dev = std::max(max_dev, std::abs(slack.total_dev));
    if (slack.min_slack >= -1e-10 && std::abs(slack.total_dev) <= 1e-10) ++passed;
  }
  return {count, static_cast<double>(passed) / static_cast<double>(count), min_slack,
          max_slack, max_dev};
}

ProjectorPoint make_projector_point(const Eigen::MatrixXcd& m, std::size_t k) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("make_projector_point: matrix is not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("make_projector_point: matrix is not Hermitian");
  if ((m * m - m).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("make_projector_point: matrix is not idempotent");
  if (std::abs(m.trace() - std::complex<double>(static_cast<double>(k))) > 1e-10)
    throw std::invalid_argument("make_projector_point: trace does not match the rank");
  return {m};
}

std::vector<double> vertex_masses(const Eigen::MatrixXcd& v,
                                  const std::vector<WeightVector>& vertices) {
  const std::size_t k = static_cast<std::size_t>(v.cols());
  const auto supports = supports_of(vertices, k);
  const double gram = (v.adjoint() * v).determinant().real();
  std::vector<double> rho;
  for (const auto& s : supports)
    rho.push_back(std::norm(submatrix_rows(v, s).determinant()) / gram);
  return rho;
}

double frame_objective(const Eigen::MatrixXcd& v,
                       const std::vector<WeightVector>& vertices,
                       const std::vector<double>& coeffs) {
  return objective_impl(v, supports_of(vertices, static_cast<std::size_t>(v.cols())), coeffs);
}

Eigen::MatrixXcd frame_gradient(const Eigen::MatrixXcd& v,
                                const std::vector<WeightVector>& vertices,
                                const std::vector<double>& coeffs) {
  return gradient_impl(v, supports_of(vertices, static_cast<std::size_t>(v.cols())), coeffs);
}

AscentReport kostant_ascent(const std::vector<WeightVector>& vertices,
                            const std::vector<double>& coeffs, std::size_t k,
                            double tol, std::size_t max_iter) {
  if (coeffs.size() != vertices.size())
    throw std::invalid_argument("kostant_ascent: one coefficient per vertex required");
  double csum = 0;
  for (double c : coeffs) {
    if (c < 0) throw std::invalid_argument("kostant_ascent: negative coefficient");
    csum += c;
  }
  if (std::abs(csum - 1.0) > 1e-12)
    throw std::invalid_argument("kostant_ascent: coefficients must sum to 1");
  const auto supports = supports_of(vertices, k);
  const std::size_t n = vertices.front().size();
  if (k == 0 || k > n) throw std::invalid_argument("kostant_ascent: bad rank");

  std::vector<double> target(n, 0.0);
  for (std::size_t j = 0; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) target[i] += coeffs[j] * vertices[j][i];

  // Fourier frame: every k-rowed minor is a (generalized) Vandermonde
  // determinant in distinct roots of unity, hence nonzero, so the starting
  // point avoids the zero set of the objective for any vertex family.
  Eigen::MatrixXcd v(n, k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const double arg = 2.0 * kPi * static_cast<double>(a * b) / static_cast<double>(n);
      v(a, b) = std::complex<double>(std::cos(arg), std::sin(arg)) / std::sqrt(double(n));
    }

  auto moment_of = [&](const Eigen::MatrixXcd& f) {
    std::vector<double> m(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m[i] = f.row(i).squaredNorm();
    return m;
  };
  auto residual_of = [&](const std::vector<double>& m) {
    double r = 0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(m[i] - target[i]));
    return r;
  };
  auto renormalize = [](const Eigen::MatrixXcd& f) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(f);
    return Eigen::MatrixXcd(qr.householderQ() * Eigen::MatrixXcd::Identity(f.rows(), f.cols()));
  };

  double fcur = objective_impl(v, supports, coeffs);
  Eigen::MatrixXcd best_v = v;
  double best_res = residual_of(moment_of(v));
  std::size_t iters = 0;
  double step = 1.0;
  bool converged = best_res <= tol;

  while (!converged && iters < max_iter) {
    ++iters;
    const Eigen::MatrixXcd g = gradient_impl(v, supports, coeffs);
    const double gnorm2 = g.squaredNorm();
    if (gnorm2 == 0) break;
    double t = step;
    double fnew = -std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd cand;
    while (t > 1e-18) {
      cand = renormalize(v + t * g);
      fnew = objective_impl(cand, supports, coeffs);
      if (fnew >= fcur + 1e-4 * t * gnorm2) break;
      t /= 2;
    }
    if (t <= 1e-18) break; // line search stalled
    v = cand;
    fcur = fnew;
    step = t * 2;
    const double res = residual_of(moment_of(v));
    if (res < best_res) {
      best_res = res;
      best_v = v;
    }
    converged = res <= tol;
  }

  const auto moment = moment_of(best_v);
  double rho = 0;
  {
    const auto masses = vertex_masses(best_v, vertices);
    double lr = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) lr += coeffs[j] * std::log(masses[j]);
    rho = std::exp(lr);
  }
  return {make_projector_point(best_v * best_v.adjoint(), k),
          moment,
          best_res,
          rho,
          converged,
          iters};
}

} // namespace orbitkit
