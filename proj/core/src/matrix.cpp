#include "soficlab/matrix.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <sstream>
#include <stdexcept>

namespace soficlab {

namespace {

void require_square(const ComplexMatrix& x, const char* what) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
}

}  // namespace

std::complex<double> normalized_trace(const ComplexMatrix& x) {
  require_square(x, "normalized_trace");
  return x.trace() / static_cast<double>(x.rows());
}

double hs_norm(const ComplexMatrix& x) {
  require_square(x, "hs_norm");
  // tau(x*x) = (1/n) sum |x_ij|^2 = |x|_F^2 / n.
  return x.norm() / std::sqrt(static_cast<double>(x.rows()));
}

double hs_length(const ComplexMatrix& x) {
  require_square(x, "hs_length");
  ComplexMatrix d = x - ComplexMatrix::Identity(x.rows(), x.cols());
  return 0.5 * hs_norm(d);
}

double hs_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("hs_distance: dimension mismatch");
  return 0.5 * hs_norm(x - y);
}

HsMetrics hs_metrics(const ComplexMatrix& x) {
  return HsMetrics{normalized_trace(x), hs_norm(x), hs_length(x)};
}

double unitarity_defect(const ComplexMatrix& x) {
  require_square(x, "unitarity_defect");
  ComplexMatrix id = ComplexMatrix::Identity(x.rows(), x.cols());
  double a = hs_norm(x.adjoint() * x - id);
  double b = hs_norm(x * x.adjoint() - id);
  return std::max(a, b);
}

ComplexMatrix permutation_matrix(const Permutation& s) {
  const std::uint32_t n = s.degree();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (std::uint32_t i = 0; i < n; ++i) p(s(i), i) = 1.0;
  return p;
}

ComplexMatrix tensor_power_unitary(const ComplexMatrix& u, unsigned k, std::uint64_t dim_cap) {
  require_square(u, "tensor_power_unitary");
  if (k == 0) throw std::invalid_argument("tensor power requires k >= 1");
  if (!is_unitary(u)) throw std::domain_error("tensor_power_unitary: input not unitary");
  const std::uint64_t n = static_cast<std::uint64_t>(u.rows());
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > dim_cap / n) throw std::overflow_error("tensor power dimension exceeds cap");
    total *= n;
  }
  ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
  for (unsigned i = 0; i < k; ++i) {
    ComplexMatrix next(acc.rows() * u.rows(), acc.cols() * u.cols());
    for (Eigen::Index r = 0; r < acc.rows(); ++r)
      for (Eigen::Index c = 0; c < acc.cols(); ++c)
        next.block(r * u.rows(), c * u.cols(), u.rows(), u.cols()) = acc(r, c) * u;
    acc = std::move(next);
  }
  return acc;
}

ComplexMatrix corner_pad(const ComplexMatrix& u) {
  require_square(u, "corner_pad");
  if (!is_unitary(u)) throw std::domain_error("corner_pad: input not unitary");
  const Eigen::Index n = u.rows();
  ComplexMatrix out = ComplexMatrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = u;
  out.bottomRightCorner(n, n) = ComplexMatrix::Identity(n, n);
  return out;
}

PolarResult polar_repair(const ComplexMatrix& a) {
  require_square(a, "polar_repair");
  constexpr double kStepTol = 1e-13;
  constexpr int kMaxIters = 60;
  constexpr double kSingularTol = 1e-8;

  {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    double smin = svd.singularValues().minCoeff();
    if (smin <= kSingularTol) {
      std::ostringstream msg;
      msg << "polar_repair: input is numerically singular (smallest singular value "
          << smin << " <= " << kSingularTol << ")";
      throw std::domain_error(msg.str());
    }
  }

  PolarResult res;
  ComplexMatrix x = a;
  double step = 0.0;
  int it = 0;
  for (; it < kMaxIters; ++it) {
    Eigen::PartialPivLU<ComplexMatrix> lu(x.adjoint());
    ComplexMatrix next = 0.5 * (x + lu.inverse());
    step = hs_norm(next - x);
    x = std::move(next);
    if (step < kStepTol) break;
  }
  res.unitary = std::move(x);
  res.iterations = it + 1;
  res.last_step = step;
  res.unitarity_residual = hs_norm(res.unitary.adjoint() * res.unitary -
                                   ComplexMatrix::Identity(a.rows(), a.cols()));
  if (step >= kStepTol || res.unitarity_residual > 1e-10) {
    std::ostringstream msg;
    msg << "polar_repair: iteration did not converge (last step " << step
        << ", unitarity residual " << res.unitarity_residual << " after "
        << res.iterations << " iterations)";
    throw std::domain_error(msg.str());
  }
  return res;
}

double operator_norm(const ComplexMatrix& x, double tol, int max_iters) {
  require_square(x, "operator_norm");
  const Eigen::Index n = x.rows();
  ComplexMatrix gram = x.adjoint() * x;
  // Power iteration on the Gram matrix; deterministic start vector.
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) += std::complex<double>(0.0, 1.0 / (1.0 + i));
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXcd w = gram * v;
    double norm = w.norm();
    if (norm == 0.0) return 0.0;
    w /= norm;
    double next = std::real(w.dot(gram * w));
    if (std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
    v = std::move(w);
  }
  return std::sqrt(std::max(0.0, lambda));
}

double operator_norm_length(const ComplexMatrix& x, double tol, int max_iters) {
  require_square(x, "operator_norm_length");
  ComplexMatrix d = ComplexMatrix::Identity(x.rows(), x.cols()) - x;
  return 0.5 * operator_norm(d, tol, max_iters);
}

}  // namespace soficlab
