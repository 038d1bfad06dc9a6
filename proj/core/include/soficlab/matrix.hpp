#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "soficlab/permutation.hpp"

namespace soficlab {

using ComplexMatrix = Eigen::MatrixXcd;

/// Tolerance below which a matrix counts as unitary:
/// max{|x*x - I|_2, |x x* - I|_2} <= kUnitaryTol.
inline constexpr double kUnitaryTol = 1e-9;

inline constexpr std::uint64_t kDefaultDimCap = 4096;

struct HsMetrics {
  std::complex<double> trace;  // normalized: (sum of diagonal)/n
  double hs_norm;              // |x|_2 = sqrt(tau(x*x))
  double hs_length;            // l(x) = |x - 1|_2 / 2
};

/// Normalized trace tau(x) = (1/n) sum_i x_ii.
std::complex<double> normalized_trace(const ComplexMatrix& x);

/// Normalized Hilbert-Schmidt norm |x|_2 = tau(x*x)^(1/2).
double hs_norm(const ComplexMatrix& x);

/// Hilbert-Schmidt length l(x) = |x - 1|_2 / 2. For unitary u this satisfies
/// l(u)^2 = (1 - Re tau(u)) / 2.
double hs_length(const ComplexMatrix& x);

/// Bi-invariant distance d(x,y) = |x - y|_2 / 2 (equals l(x y^-1) for unitaries).
double hs_distance(const ComplexMatrix& x, const ComplexMatrix& y);

/// All three quantities at once. Throws on non-square input.
HsMetrics hs_metrics(const ComplexMatrix& x);

/// The unitarity defect max{|x*x - I|_2, |x x* - I|_2} (the relation R(x)).
double unitarity_defect(const ComplexMatrix& x);

inline bool is_unitary(const ComplexMatrix& x, double tol = kUnitaryTol) {
  return x.rows() == x.cols() && unitarity_defect(x) <= tol;
}

/// Permutation matrix P_s with P_s e_i = e_{s(i)}. Satisfies
/// tau(P_s) = 1 - hamming_length(s) and l_U(P_s)^2 = hamming_length(s)/2.
ComplexMatrix permutation_matrix(const Permutation& s);

/// Kronecker k-th power u^(x)k of dimension n^k; tau(u^(x)k) = tau(u)^k.
ComplexMatrix tensor_power_unitary(const ComplexMatrix& u, unsigned k,
                                   std::uint64_t dim_cap = kDefaultDimCap);

/// diag(u, I_n): doubles the dimension, pulls |tau| strictly below 1 for u != I.
ComplexMatrix corner_pad(const ComplexMatrix& u);

struct PolarResult {
  ComplexMatrix unitary;
  int iterations = 0;
  double last_step = 0.0;       // |X_{k+1} - X_k|_2 at exit
  double unitarity_residual = 0.0;
};

/// Polar factor of an invertible matrix by the Newton iteration
/// X <- (X + (X*)^-1)/2, run until |X_{k+1} - X_k|_2 < 1e-13 or 60 steps.
/// The result is the Hilbert-Schmidt-nearest unitary to `a`.
/// Throws std::domain_error when `a` is (numerically) singular or the
/// iteration fails to produce a unitary within tolerance; the message
/// carries the residuals.
PolarResult polar_repair(const ComplexMatrix& a);

/// Operator norm |x| by power iteration on x*x (largest singular value).
double operator_norm(const ComplexMatrix& x, double tol = 1e-9, int max_iters = 500);

/// Operator-norm length l(x) = |1 - x| / 2 used by the commutator-contractive
/// checks on matrix-backed groups.
double operator_norm_length(const ComplexMatrix& x, double tol = 1e-9, int max_iters = 500);

}  // namespace soficlab
