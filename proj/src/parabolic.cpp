#include "orbitkit/parabolic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace orbitkit {

namespace {

constexpr double kClusterTol = 1e-8; // eigenvalue clustering / sign decisions
constexpr double kCheckTol = 1e-9;   // reconstruction and commutation budget

[[noreturn]] void defect(const char* what) {
  throw std::runtime_error(std::string("jordan_parabolic: ") + what);
}

} // namespace

Eigen::VectorXd flatten_matrix(const Eigen::MatrixXd& m) {
  Eigen::VectorXd v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

Eigen::MatrixXd unflatten_matrix(const Eigen::VectorXd& v, std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

FloatSubspace FloatSubspace::from_rows(const Eigen::MatrixXd& rows, double rank_tol) {
  FloatSubspace out(static_cast<std::size_t>(rows.cols()));
  if (rows.rows() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeThinV);
  double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > rank_tol * std::max(top, 1.0)) ++rank;
  out.basis_ = svd.matrixV().leftCols(rank).transpose();
  return out;
}

bool FloatSubspace::contains(const Eigen::VectorXd& v, double tol) const {
  if (static_cast<std::size_t>(v.size()) != ambient_)
    throw std::invalid_argument("FloatSubspace::contains: dimension mismatch");
  Eigen::VectorXd residual = v - basis_.transpose() * (basis_ * v);
  return residual.norm() <= tol * std::max(1.0, v.norm());
}

ParabolicDatum jordan_parabolic(const Eigen::MatrixXd& x) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw std::invalid_argument("jordan_parabolic: x must be a nonempty square matrix");
  const Eigen::Index n = x.rows();

  Eigen::EigenSolver<Eigen::MatrixXd> es(x);
  if (es.info() != Eigen::Success) defect("eigenvalue iteration failed");
  Eigen::VectorXcd raw = es.eigenvalues();

  // Cluster eigenvalues so that a defective eigenvalue split by roundoff is
  // treated as one value with its full algebraic multiplicity.
  std::vector<std::complex<double>> reps;
  std::vector<int> mult;
  for (Eigen::Index i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      if (std::abs(raw(i) - reps[c]) <= kClusterTol) {
        reps[c] = (reps[c] * double(mult[c]) + raw(i)) / double(mult[c] + 1);
        ++mult[c];
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(raw(i));
      mult.push_back(1);
    }
  }

  // Generalized eigenspaces as kernels of (x - lambda)^m, via SVD.
  Eigen::MatrixXcd xc = x.cast<std::complex<double>>();
  Eigen::MatrixXcd V(n, n);
  Eigen::VectorXcd lambda(n);
  Eigen::Index col = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Eigen::MatrixXcd shifted = xc - reps[c] * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < mult[c]; ++k) power = power * shifted;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(power, Eigen::ComputeFullV);
    double top = svd.singularValues()(0);
    Eigen::Index kernel = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (svd.singularValues()(i) <= kClusterTol * std::max(top, 1.0)) ++kernel;
    if (kernel != mult[c]) defect("generalized eigenspace dimension mismatch");
    if (col + kernel > n) defect("eigenspace overlap");
    V.middleCols(col, kernel) = svd.matrixV().rightCols(kernel);
    for (Eigen::Index k = 0; k < kernel; ++k) lambda(col + k) = reps[c];
    col += kernel;
  }
  if (col != n) defect("generalized eigenspaces do not fill the space");

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(V);
  if (!lu.isInvertible()) defect("generalized eigenvector matrix is singular");
  Eigen::MatrixXcd Vinv = lu.inverse();

  Eigen::MatrixXcd h_c = V * lambda.real().cast<std::complex<double>>().asDiagonal() * Vinv;
  Eigen::MatrixXcd e_c =
      V * (std::complex<double>(0, 1) * lambda.imag().cast<std::complex<double>>()).asDiagonal() *
      Vinv;
  if (h_c.imag().norm() > kCheckTol || e_c.imag().norm() > kCheckTol)
    defect("semisimple parts are not real");

  ParabolicDatum out{Eigen::MatrixXd(), Eigen::MatrixXd(), Eigen::MatrixXd(),
                     FloatSubspace(std::size_t(n * n)), FloatSubspace(std::size_t(n * n)),
                     Eigen::VectorXd()};
  out.x_h = h_c.real();
  out.x_e = e_c.real();
  out.x_n = x - out.x_h - out.x_e;

  auto comm = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a * b - b * a).norm();
  };
  if ((x - out.x_h - out.x_e - out.x_n).norm() > kCheckTol) defect("parts do not sum to x");
  if (comm(out.x_h, out.x_e) > kCheckTol || comm(out.x_h, out.x_n) > kCheckTol ||
      comm(out.x_e, out.x_n) > kCheckTol)
    defect("Jordan parts do not commute");

  // V's columns are eigenvectors of x_h (eigenvalue Re lambda_i), so the
  // matrices V E_ij V^{-1} diagonalize ad(x_h) with eigenvalues d_i - d_j;
  // real and imaginary parts span the same real eigenspace sums.
  Eigen::MatrixXd n_rows(2 * n * n, n * n);
  Eigen::MatrixXd p_rows(2 * n * n, n * n);
  Eigen::Index n_count = 0, p_count = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double gap = lambda(i).real() - lambda(j).real();
      if (gap <= -kClusterTol) continue;
      Eigen::MatrixXcd eij = V.col(i) * Vinv.row(j);
      Eigen::VectorXd re = flatten_matrix(eij.real());
      Eigen::VectorXd im = flatten_matrix(eij.imag());
      p_rows.row(p_count++) = re;
      p_rows.row(p_count++) = im;
      if (gap >= kClusterTol) {
        n_rows.row(n_count++) = re;
        n_rows.row(n_count++) = im;
      }
    }
  }
  out.n_space = FloatSubspace::from_rows(n_rows.topRows(n_count));
  out.p_space = FloatSubspace::from_rows(p_rows.topRows(p_count));

  out.y = Eigen::VectorXd(out.p_space.dim());
  for (std::size_t r = 0; r < out.p_space.dim(); ++r) {
    Eigen::MatrixXd b = unflatten_matrix(out.p_space.basis().row(r), std::size_t(n));
    out.y(static_cast<Eigen::Index>(r)) = (x * b).trace();
  }
  for (std::size_t r = 0; r < out.n_space.dim(); ++r) {
    Eigen::MatrixXd b = unflatten_matrix(out.n_space.basis().row(r), std::size_t(n));
    if (std::abs((x * b).trace()) > kCheckTol) defect("trace pairing does not vanish on n");
  }
  return out;
}

} // namespace orbitkit
