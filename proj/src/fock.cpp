#include "para/fock.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace para::fock {

std::size_t FockConfig::dimension() const {
  std::size_t dim = 1;
  for (int s = 0; s < sites(); ++s) {
    if (dim > max_dimension / static_cast<std::size_t>(local_dim()))
      throw DimensionLimitError("Fock dimension exceeds limit of " +
                                std::to_string(max_dimension));
    dim *= static_cast<std::size_t>(local_dim());
  }
  return dim;
}

void FockConfig::validate() const {
  if (p < 1) throw std::invalid_argument("FockConfig: p must be >= 1");
  if (modes < 1) throw std::invalid_argument("FockConfig: modes must be >= 1");
  if (stat == Statistics::ParaBose && bose_cutoff < 1)
    throw std::invalid_argument("FockConfig: bose cutoff must be >= 1");
  dimension();  // throws past the limit
}

namespace {

// site layout: sector-major, index (alpha-1)*modes + (k-1); basis index is
// little-endian in site occupations
int site_of(const FockConfig& cfg, int alpha, int k) {
  if (alpha < 1 || alpha > cfg.p) throw std::out_of_range("Green index out of range");
  if (k < 1 || k > cfg.modes) throw std::out_of_range("mode index out of range");
  return (alpha - 1) * cfg.modes + (k - 1);
}

std::size_t stride_of(const FockConfig& cfg, int site) {
  std::size_t s = 1;
  for (int i = 0; i < site; ++i) s *= static_cast<std::size_t>(cfg.local_dim());
  return s;
}

int occupation(const FockConfig& cfg, std::size_t index, int site) {
  return static_cast<int>(index / stride_of(cfg, site) %
                          static_cast<std::size_t>(cfg.local_dim()));
}

}  // namespace

std::vector<int> decode_state(const FockConfig& cfg, std::size_t index) {
  std::vector<int> occ(static_cast<std::size_t>(cfg.sites()));
  for (int s = 0; s < cfg.sites(); ++s) occ[static_cast<std::size_t>(s)] = occupation(cfg, index, s);
  return occ;
}

bool occupations_within(const FockConfig& cfg, std::size_t index, int headroom) {
  if (cfg.stat == Statistics::ParaFermi) return true;
  for (int s = 0; s < cfg.sites(); ++s)
    if (occupation(cfg, index, s) > cfg.bose_cutoff - headroom) return false;
  return true;
}

OperatorMatrix green_annihilator(const FockConfig& cfg, int alpha, int k) {
  cfg.validate();
  const int site = site_of(cfg, alpha, k);
  const std::size_t dim = cfg.dimension();
  const std::size_t stride = stride_of(cfg, site);

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int n = occupation(cfg, col, site);
    if (n == 0) continue;
    double amp;
    if (cfg.stat == Statistics::ParaFermi) {
      // Jordan-Wigner string over earlier modes of the same sector
      int jw = 0;
      for (int j = 1; j < k; ++j) jw += occupation(cfg, col, site_of(cfg, alpha, j));
      amp = jw % 2 == 0 ? 1.0 : -1.0;
    } else {
      // Klein signs over all sectors below alpha
      int klein = 0;
      for (int beta = 1; beta < alpha; ++beta)
        for (int j = 1; j <= cfg.modes; ++j) klein += occupation(cfg, col, site_of(cfg, beta, j));
      amp = (klein % 2 == 0 ? 1.0 : -1.0) * std::sqrt(static_cast<double>(n));
    }
    const std::size_t row = col - stride;
    entries.emplace_back(static_cast<int>(row), static_cast<int>(col), Complex(amp, 0.0));
  }
  SparseComplex m(static_cast<int>(dim), static_cast<int>(dim));
  m.setFromTriplets(entries.begin(), entries.end());
  return OperatorMatrix(std::move(m));
}

OperatorMatrix green_creator(const FockConfig& cfg, int alpha, int k) {
  return green_annihilator(cfg, alpha, k).adjoint();
}

CompositePair composite_ops(const FockConfig& cfg, int k) {
  cfg.validate();
  OperatorMatrix a = green_annihilator(cfg, 1, k);
  for (int alpha = 2; alpha <= cfg.p; ++alpha) a = a + green_annihilator(cfg, alpha, k);
  return {a, a.adjoint()};
}

Complex vev(const FockConfig& cfg, const std::vector<OpSpec>& string) {
  cfg.validate();
  const std::size_t dim = cfg.dimension();
  std::vector<CompositePair> ops;
  ops.reserve(static_cast<std::size_t>(cfg.modes));
  for (int k = 1; k <= cfg.modes; ++k) ops.push_back(composite_ops(cfg, k));

  Vector v = Vector::Zero(static_cast<int>(dim));
  v(0) = Complex(1.0, 0.0);
  for (auto it = string.rbegin(); it != string.rend(); ++it) {
    if (it->mode < 1 || it->mode > cfg.modes) throw std::out_of_range("mode index out of range");
    const CompositePair& pair = ops[static_cast<std::size_t>(it->mode - 1)];
    v = (it->creator ? pair.creator : pair.annihilator).apply(v);
  }
  return v(0);
}

double max_residual_on_safe_columns(const FockConfig& cfg, const OperatorMatrix& residual,
                                    int raise_margin) {
  const SparseComplex& m = residual.sparse();
  double worst = 0.0;
  for (int col = 0; col < m.outerSize(); ++col) {
    if (!occupations_within(cfg, static_cast<std::size_t>(col), raise_margin)) continue;
    for (SparseComplex::InnerIterator it(m, col); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

namespace {

OperatorMatrix bracket(const OperatorMatrix& a, const OperatorMatrix& b, int sign) {
  OperatorMatrix ab = a * b;
  OperatorMatrix ba = b * a;
  return sign > 0 ? ab + ba : ab - ba;
}

}  // namespace

TrilinearReport check_trilinear(const FockConfig& cfg) {
  cfg.validate();
  const int inner_sign = cfg.stat == Statistics::ParaBose ? +1 : -1;
  std::vector<CompositePair> ops;
  for (int k = 1; k <= cfg.modes; ++k) ops.push_back(composite_ops(cfg, k));

  TrilinearReport report;
  for (int k = 1; k <= cfg.modes; ++k)
    for (int l = 1; l <= cfg.modes; ++l)
      for (int m = 1; m <= cfg.modes; ++m) {
        OperatorMatrix inner = bracket(ops[k - 1].creator, ops[l - 1].annihilator, inner_sign);
        OperatorMatrix tri = bracket(inner, ops[m - 1].creator, -1);
        if (l == m) tri = tri - ops[k - 1].creator.scaled(Complex(2.0, 0.0));
        report.max_trilinear_residual =
            std::max(report.max_trilinear_residual, max_residual_on_safe_columns(cfg, tri, 2));
      }

  for (int k = 1; k <= cfg.modes; ++k)
    for (int l = 1; l <= cfg.modes; ++l) {
      OperatorMatrix nk = bracket(ops[k - 1].creator, ops[k - 1].annihilator, inner_sign)
                              .scaled(Complex(0.5, 0.0));
      OperatorMatrix res = bracket(nk, ops[l - 1].creator, -1);
      if (k == l) res = res - ops[l - 1].creator;
      report.max_number_residual =
          std::max(report.max_number_residual, max_residual_on_safe_columns(cfg, res, 2));
    }
  return report;
}

std::string RescaleReport::summary() const {
  std::ostringstream os;
  os << "p=" << p << ": measured lambda=" << lambda_measured << " (stated 2p=" << lambda_paper
     << ", rescaling a -> a/sqrt(p) gives 2/p=" << lambda_rescaled
     << "), proportionality residual=" << proportionality_residual;
  return os.str();
}

RescaleReport check_rescaled_normalization(const FockConfig& cfg) {
  cfg.validate();
  const int inner_sign = cfg.stat == Statistics::ParaBose ? +1 : -1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.p));

  RescaleReport report;
  report.p = cfg.p;
  report.lambda_paper = 2.0 * cfg.p;
  report.lambda_rescaled = 2.0 / cfg.p;

  CompositePair pair = composite_ops(cfg, 1);
  OperatorMatrix c = pair.annihilator.scaled(Complex(scale, 0.0));
  OperatorMatrix cdag = pair.creator.scaled(Complex(scale, 0.0));
  OperatorMatrix tri = bracket(bracket(cdag, c, inner_sign), cdag, -1);

  // lambda from the action on the vacuum: tri|0> = lambda c+|0>
  const std::size_t dim = cfg.dimension();
  Vector vac = Vector::Zero(static_cast<int>(dim));
  vac(0) = Complex(1.0, 0.0);
  Vector lhs = tri.apply(vac);
  Vector ref = cdag.apply(vac);
  const Complex lambda = ref.dot(lhs) / ref.dot(ref);
  report.lambda_measured = lambda.real();
  report.proportionality_residual =
      max_residual_on_safe_columns(cfg, tri - cdag.scaled(lambda), 2);
  return report;
}

}  // namespace para::fock
