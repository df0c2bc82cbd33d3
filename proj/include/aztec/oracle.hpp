#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "aztec/rng.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& x, int e);
// Parses "3", "-2/7" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& s);

// Dense polynomial in t with rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& coeff, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct ExactWeights {
  std::vector<Rational> c;
  std::vector<Rational> b;
  Rational t{1};

  static ExactWeights uniform(int rank, const Rational& t);
  WeightConfig to_float() const;
};

// All domino tilings of the rank-N diamond, N <= 4, in a fixed order.
std::vector<Tiling> enumerate_tilings(int rank);
// All k-tilings, capped at 2^22 states.
std::vector<KTiling> enumerate_ktilings(int rank, int colors);

Rational exact_weight(const KTiling& kt, const ExactWeights& w);
Rational exact_Z(int rank, int colors, const ExactWeights& w);
// Sum over k-tilings of the c, b weights times t^interactions, as a polynomial in t.
Polynomial exact_Z_polynomial(int rank, int colors, const std::vector<Rational>& c,
                              const std::vector<Rational>& b);

// prod_{l<k} prod_{1<=i<=j<=N} (1 + c_i b_{N-j+1} t^l)
Rational product_formula(int rank, int colors, const ExactWeights& w);
Polynomial product_formula_polynomial(int rank, int colors, const std::vector<Rational>& c,
                                      const std::vector<Rational>& b);

struct ExactDistribution {
  int rank = 0;
  int colors = 0;
  Rational t{1};
  std::vector<KTiling> states;
  std::vector<Rational> weights;
  Rational Z{0};
  std::unordered_map<std::string, std::size_t> index;

  double probability(std::size_t i) const;
};

ExactDistribution exact_distribution(int rank, int colors, const ExactWeights& w);

// Exact law of the shuffling sampler started from rank 0, by summing over every
// sequence of fills. Keys are canonical_key().
std::map<std::string, Rational> exact_shuffle_law(int rank, int colors, const ExactWeights& w,
                                                  DiagonalConvention conv);

struct SamplerReport {
  int samples = 0;
  double tv = 0;
  double chi2 = 0;
  int dof = 0;
  double p_value = 0;
  int off_support = 0;  // samples outside the support of the exact law
};

using Sampler = std::function<KTiling(const RngStream&)>;

// Draws `samples` k-tilings, sample s from RngStream(seed).derive(s), and compares
// the histogram against the exact law.
SamplerReport validate_sampler(const Sampler& sampler, const ExactDistribution& exact, int samples,
                               std::uint64_t seed, int threads = 1);

// Total variation between the empirical joint law of colors 0 and 1 and the
// product of their empirical marginals.
double factorization_tv(const std::vector<KTiling>& samples);

}  // namespace aztec
