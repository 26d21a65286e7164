#ifndef PARA_FOCK_HPP
#define PARA_FOCK_HPP

#include <Eigen/SparseCore>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "para/statistics.hpp"

namespace para::fock {

struct DimensionLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated tensor-product Fock space for order-p Green components: one
/// sector per (Green index, mode). Parabose sectors hold occupations
/// 0..bose_cutoff, parafermi sectors 0..1.
struct FockConfig {
  Statistics stat = Statistics::ParaBose;
  int p = 1;
  int modes = 1;
  int bose_cutoff = 4;
  std::size_t max_dimension = std::size_t(1) << 16;

  int local_dim() const { return stat == Statistics::ParaFermi ? 2 : bose_cutoff + 1; }
  int sites() const { return p * modes; }
  std::size_t dimension() const;
  void validate() const;
};

using Complex = std::complex<double>;
using SparseComplex = Eigen::SparseMatrix<Complex>;
using Vector = Eigen::VectorXcd;

/// Linear operator on the truncated Fock basis. Ladder operators are one
/// entry per column, so the storage is sparse; dense() is available for
/// small spaces.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(SparseComplex m) : m_(std::move(m)) {}

  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()); }
  const SparseComplex& sparse() const { return m_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(m_); }

  OperatorMatrix adjoint() const { return OperatorMatrix(SparseComplex(m_.adjoint())); }
  Vector apply(const Vector& v) const { return m_ * v; }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    return OperatorMatrix(SparseComplex(a.m_ * b.m_));
  }
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    return OperatorMatrix(SparseComplex(a.m_ + b.m_));
  }
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    return OperatorMatrix(SparseComplex(a.m_ - b.m_));
  }
  OperatorMatrix scaled(Complex c) const { return OperatorMatrix(SparseComplex(c * m_)); }

 private:
  SparseComplex m_;
};

/// Green-component lowering operator b^(alpha)_k. Parabose components carry
/// Klein sign factors (-1)^{N_beta} over the sectors beta < alpha so that
/// different sectors anticommute; parafermi components are Jordan-Wigner
/// ordered within their sector and plainly embedded across sectors so that
/// different sectors commute.
OperatorMatrix green_annihilator(const FockConfig& cfg, int alpha, int k);
OperatorMatrix green_creator(const FockConfig& cfg, int alpha, int k);

/// Composite a_k = sum over alpha of b^(alpha)_k and its adjoint.
struct CompositePair {
  OperatorMatrix annihilator;
  OperatorMatrix creator;
};
CompositePair composite_ops(const FockConfig& cfg, int k);

/// Vacuum expectation of an operator string applied left to right as
/// written: vev({a_1, adag_1}) is <0| a_1 a+_1 |0>.
struct OpSpec {
  bool creator = false;
  int mode = 1;
};
Complex vev(const FockConfig& cfg, const std::vector<OpSpec>& string);

struct TrilinearReport {
  double max_trilinear_residual = 0.0;
  double max_number_residual = 0.0;
};
/// Residuals of [[a+_k, a_l]_pm, a+_m]_- = 2 delta_{lm} a+_k and of
/// [n_k, a+_l]_- = delta_{kl} a+_l, restricted to columns whose sector
/// occupations stay strictly below the cutoff before and after application.
TrilinearReport check_trilinear(const FockConfig& cfg);
double max_residual_on_safe_columns(const FockConfig& cfg, const OperatorMatrix& residual,
                                    int raise_margin);

struct RescaleReport {
  int p = 1;
  double lambda_measured = 0.0;       // scalar in [[c+_k, c_l]_pm, c+_m]_- = lambda d_lm c+_k
  double proportionality_residual = 0.0;
  double lambda_paper = 0.0;          // 2p, as printed in the source material
  double lambda_rescaled = 0.0;       // 2/p, what the a -> a/sqrt(p) rescaling gives
  std::string summary() const;
};
/// Measures the trilinear scalar for the unit-normalized operators
/// c = a / sqrt(p). The report records the measurement next to both candidate
/// values and asserts neither.
RescaleReport check_rescaled_normalization(const FockConfig& cfg);

/// Basis helpers shared with the tests.
std::vector<int> decode_state(const FockConfig& cfg, std::size_t index);
bool occupations_within(const FockConfig& cfg, std::size_t index, int headroom);

}  // namespace para::fock

#endif
