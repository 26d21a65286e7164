#ifndef PARA_TESTS_ORACLE_HELPERS_HPP
#define PARA_TESTS_ORACLE_HELPERS_HPP

// Independent reference computations for the test suites. Everything here
// deliberately avoids the library's partition-sum code path: coefficients
// are rebuilt from raw Green-index assignments, interpolation, or
// permutation parity.

#include <random>
#include <stdexcept>
#include <vector>

#include "para/integers.hpp"
#include "para/matching.hpp"
#include "para/ppoly.hpp"
#include "para/product.hpp"

namespace para::testing {

/// Exact Lagrange interpolation through (x_i, y_i); throws when the data is
/// not polynomial with integer coefficients.
inline PPolynomial lagrange_interpolate(const std::vector<Integer>& xs,
                                        const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> acc(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // numerator polynomial prod_{j != i} (x - x_j), coefficients ascending
    std::vector<Rational> num{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(num.size() + 1, Rational(0));
      for (std::size_t k = 0; k < num.size(); ++k) {
        next[k + 1] += num[k];
        next[k] -= num[k] * Rational(xs[j]);
      }
      num = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < num.size(); ++k) acc[k] += num[k] * Rational(ys[i]) / denom;
  }
  std::vector<Integer> coeffs;
  for (const auto& r : acc) {
    if (r.denominator() != 1) throw std::runtime_error("non-integer interpolation result");
    coeffs.push_back(r.numerator());
  }
  return PPolynomial(std::move(coeffs));
}

/// Sign of the permutation that maps 1..2m to the flattened matching
/// (i1 j1 i2 j2 ...) with pairs sorted by first element. Equals
/// (-1)^{number of crossings} for perfect matchings.
inline int permutation_parity(const Matching& m) {
  std::vector<int> flat;
  for (auto [i, j] : m.pairs) {
    flat.push_back(i);
    flat.push_back(j);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < flat.size(); ++a)
    for (std::size_t b = a + 1; b < flat.size(); ++b)
      if (flat[a] > flat[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Random field tables and products for the engine-equivalence checks.
struct RandomProductOptions {
  int max_fields = 3;
  int max_insertions = 8;
  bool force_even = true;
};

inline ProductSpec random_product(std::mt19937& rng, const RandomProductOptions& opt = {}) {
  std::uniform_int_distribution<int> field_count(1, opt.max_fields);
  std::uniform_int_distribution<int> coin(0, 1);

  ProductSpec prod;
  const int nf = field_count(rng);
  for (int f = 0; f < nf; ++f) {
    FieldSpec spec;
    spec.name = std::string(1, static_cast<char>('a' + f));
    spec.stat = coin(rng) ? Statistics::ParaFermi : Statistics::ParaBose;
    spec.charge = coin(rng) ? Charge::Charged : Charge::Neutral;
    prod.fields.push_back(std::move(spec));
  }

  int n = std::uniform_int_distribution<int>(2, opt.max_insertions)(rng);
  if (opt.force_even && n % 2 != 0) --n;

  // bias toward contractable products: keep adjoint counts roughly balanced
  std::vector<int> balance(static_cast<std::size_t>(nf), 0);  // non-adjoint minus adjoint
  for (int i = 0; i < n; ++i) {
    Insertion ins;
    ins.field = std::uniform_int_distribution<int>(0, nf - 1)(rng);
    const FieldSpec& f = prod.fields[static_cast<std::size_t>(ins.field)];
    const bool paired = f.charge == Charge::Charged || f.stat == Statistics::ParaFermi;
    if (paired) {
      int& bal = balance[static_cast<std::size_t>(ins.field)];
      if (bal > 0) {
        ins.adjoint = true;
        --bal;
      } else if (bal < 0) {
        ins.adjoint = false;
        ++bal;
      } else {
        ins.adjoint = coin(rng) != 0;
        bal += ins.adjoint ? -1 : 1;
      }
    }
    ins.label = "x" + std::to_string(i + 1);
    prod.insertions.push_back(std::move(ins));
  }
  return prod;
}

}  // namespace para::testing

#endif
