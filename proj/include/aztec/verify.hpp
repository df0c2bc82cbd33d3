#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "aztec/oracle.hpp"
#include "aztec/shuffle.hpp"

namespace aztec {

// {"suite", "pass", "checks": [{"name", "pass", ...}], "first_failure"}
class SuiteReport {
 public:
  explicit SuiteReport(std::string suite);
  void add(nlohmann::json check);
  bool pass() const { return pass_; }
  const nlohmann::json& report() const { return doc_; }

 private:
  nlohmann::json doc_;
  bool pass_ = true;
};

// c = (2, 3, 5, 17, 23, ...), b = (7, 11, 13, 19, 29, ...)
ExactWeights distinct_weights(int rank, const Rational& t);

struct ProductFormulaParams {
  int max_rank = 3;
  int colors = 2;
  std::vector<Rational> t_values = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7)};
};
// Enumerated Z against the product formula, as polynomials in t and at each t,
// for uniform and distinct weights. With two colors also against (2(1+t))^(N(N+1)/2).
SuiteReport verify_product_formula(const ProductFormulaParams& p);

struct ConventionParams {
  int max_rank = 2;
  int colors = 2;
  Rational t{1, 2};
};
// Exact law of the shuffle under each creation-diagonal convention against the
// enumerated law with distinct weights. Passes iff exactly one convention matches.
SuiteReport verify_convention(const ConventionParams& p);

struct SamplerParams {
  int rank = 2;
  int colors = 2;
  std::vector<Rational> t_values = {Rational(1, 2), Rational(1), Rational(2)};
  int samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  double max_tv = 0.01;
  double min_p = 1e-4;
};
// Shuffle and particle samplers against the enumerated law.
SuiteReport verify_sampler(const SamplerParams& p);

struct CouplingParams {
  int rank = 10;
  int colors = 3;
  int steps = 10;
  std::uint64_t seed = 0;
  int trials = 50;
  double t = 0.6;
};
// From a shuffled state of rank (rank - steps), run `steps` shuffle steps and
// particle updates on shared randomness and compare after every step.
SuiteReport verify_coupling(const CouplingParams& p);

struct SpiderParams {
  int trials = 100;
  std::uint64_t seed = 1;
  int max_enumerated_rank = 2;
  int sampled_rank = 8;
  int samples = 1000;
};
// The 36 local relations over random positive rationals, then the diagonal
// count on enumerated and sampled 2-tilings.
SuiteReport verify_spider(const SpiderParams& p);

struct BijectionParams {
  int max_rank = 3;
  int colors = 2;
  int sampled_rank = 8;
  int sampled_colors = 3;
  int samples = 1000;
  std::uint64_t seed = 1;
};
// Round trips through particle arrays, with interlacing and bounds checked on
// every intermediate state of the sampled runs.
SuiteReport verify_bijection(const BijectionParams& p);

}  // namespace aztec
