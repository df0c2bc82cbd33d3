#include "aztec/verify.hpp"

#include <random>

#include "aztec/dynamics.hpp"
#include "aztec/errors.hpp"
#include "aztec/partitions.hpp"
#include "aztec/spider.hpp"

namespace aztec {

using nlohmann::json;

SuiteReport::SuiteReport(std::string suite)
    : doc_{{"suite", std::move(suite)}, {"pass", true}, {"checks", json::array()}, {"first_failure", nullptr}} {}

void SuiteReport::add(json check) {
  bool ok = check.at("pass").get<bool>();
  if (!ok && pass_) doc_["first_failure"] = check;
  pass_ = pass_ && ok;
  doc_["pass"] = pass_;
  doc_["checks"].push_back(std::move(check));
}

ExactWeights distinct_weights(int rank, const Rational& t) {
  static const int cs[] = {2, 3, 5, 17, 23, 31, 41, 47, 59, 67};
  static const int bs[] = {7, 11, 13, 19, 29, 37, 43, 53, 61, 71};
  if (rank > 10) throw ConfigError("distinct weights are tabulated up to rank 10");
  ExactWeights w;
  for (int i = 0; i < rank; ++i) {
    w.c.emplace_back(cs[i]);
    w.b.emplace_back(bs[i]);
  }
  w.t = t;
  return w;
}

namespace {

std::string weights_label(bool distinct) { return distinct ? "distinct" : "uniform"; }

Rational closed_form_two_colors(int rank, const Rational& t) {
  return rational_pow(2 * (1 + t), rank * (rank + 1) / 2);
}

}  // namespace

SuiteReport verify_product_formula(const ProductFormulaParams& p) {
  if (p.max_rank < 1 || p.colors < 1) throw ConfigError("rank and colors must be positive");
  SuiteReport r("product-formula");
  for (int N = 1; N <= p.max_rank; ++N) {
    for (bool distinct : {false, true}) {
      ExactWeights w = distinct ? distinct_weights(N, Rational(1)) : ExactWeights::uniform(N, Rational(1));
      Polynomial lhs = exact_Z_polynomial(N, p.colors, w.c, w.b);
      Polynomial rhs = product_formula_polynomial(N, p.colors, w.c, w.b);
      r.add({{"name", "polynomial"},
             {"rank", N},
             {"colors", p.colors},
             {"weights", weights_label(distinct)},
             {"pass", lhs == rhs},
             {"enumerated", lhs.str()},
             {"formula", rhs.str()}});
      for (const Rational& t : p.t_values) {
        w.t = t;
        Rational z = exact_Z(N, p.colors, w);
        Rational f = product_formula(N, p.colors, w);
        r.add({{"name", "value"},
               {"rank", N},
               {"colors", p.colors},
               {"weights", weights_label(distinct)},
               {"t", t.str()},
               {"pass", z == f},
               {"enumerated", z.str()},
               {"formula", f.str()}});
        if (p.colors == 2 && !distinct) {
          Rational cf = closed_form_two_colors(N, t);
          r.add({{"name", "two-color closed form"},
                 {"rank", N},
                 {"t", t.str()},
                 {"pass", z == cf},
                 {"enumerated", z.str()},
                 {"closed_form", cf.str()}});
        }
      }
    }
  }
  return r;
}

SuiteReport verify_convention(const ConventionParams& p) {
  SuiteReport r("convention");
  int matching = 0;
  json outcomes = json::object();
  for (auto [conv, name] : {std::pair{DiagonalConvention::odd_lower_left, "odd"},
                            std::pair{DiagonalConvention::even_lower_left, "even"}}) {
    bool all = true;
    std::string reason;
    for (int N = 1; N <= p.max_rank && all; ++N) {
      ExactWeights w = distinct_weights(N, p.t);
      ExactDistribution exact = exact_distribution(N, p.colors, w);
      try {
        auto law = exact_shuffle_law(N, p.colors, w, conv);
        for (std::size_t i = 0; i < exact.states.size() && all; ++i) {
          auto it = law.find(canonical_key(exact.states[i]));
          Rational got = it == law.end() ? Rational(0) : it->second;
          if (got != exact.weights[i] / exact.Z) {
            all = false;
            reason = "law differs at rank " + std::to_string(N);
          }
        }
        for (const auto& [key, prob] : law)
          if (prob != 0 && !exact.index.count(key)) {
            all = false;
            reason = "law charges a non-tiling at rank " + std::to_string(N);
          }
      } catch (const ConfigError& e) {
        all = false;
        reason = e.what();
      }
    }
    matching += all;
    outcomes[name] = {{"matches", all}, {"reason", reason}};
  }
  r.add({{"name", "exactly one convention matches"}, {"pass", matching == 1}, {"conventions", outcomes}});
  return r;
}

SuiteReport verify_sampler(const SamplerParams& p) {
  SuiteReport r("sampler");
  for (const Rational& t : p.t_values) {
    ExactWeights ew = ExactWeights::uniform(p.rank, t);
    ExactDistribution exact = exact_distribution(p.rank, p.colors, ew);
    WeightConfig w = ew.to_float();
    Sampler shuffle = [&](const RngStream& rng) { return sample_ktiling(p.rank, p.colors, w, rng); };
    Sampler dynamics = [&](const RngStream& rng) {
      return array_to_ktiling(sample_dynamics(p.rank, p.colors, w, rng));
    };
    for (auto [name, sampler] : {std::pair{"shuffle", shuffle}, std::pair{"dynamics", dynamics}}) {
      SamplerReport s = validate_sampler(sampler, exact, p.samples, p.seed, p.threads);
      r.add({{"name", name},
             {"t", t.str()},
             {"samples", s.samples},
             {"tv", s.tv},
             {"chi2", s.chi2},
             {"dof", s.dof},
             {"p_value", s.p_value},
             {"off_support", s.off_support},
             {"pass", s.tv < p.max_tv && s.p_value > p.min_p && s.off_support == 0}});
    }
  }
  return r;
}

SuiteReport verify_coupling(const CouplingParams& p) {
  if (p.steps < 1 || p.steps > p.rank) throw ConfigError("need 1 <= steps <= rank");
  SuiteReport r("coupling");
  WeightConfig w = WeightConfig::uniform(p.rank, p.t);
  int agreeing = 0;
  for (int trial = 0; trial < p.trials; ++trial) {
    RngStream rng(p.seed + static_cast<std::uint64_t>(trial));
    KTiling kt = sample_ktiling(p.rank - p.steps, p.colors, w, rng);
    ColoredParticleArray a = ktiling_to_array(kt);
    int first_bad = -1;
    for (int s = 0; s < p.steps && first_bad < 0; ++s) {
      kt = shuffle_step(kt, w, rng);
      a = parallel_update(a, w, rng);
      if (!(ktiling_to_array(kt) == a)) first_bad = kt.rank();
    }
    if (first_bad < 0) {
      ++agreeing;
    } else {
      r.add({{"name", "trial"}, {"seed", rng.seed()}, {"pass", false}, {"diverged_at_rank", first_bad}});
    }
  }
  r.add({{"name", "bit-identical states"},
         {"rank", p.rank},
         {"colors", p.colors},
         {"steps", p.steps},
         {"trials", p.trials},
         {"agreeing", agreeing},
         {"pass", agreeing == p.trials}});
  return r;
}

SuiteReport verify_spider(const SpiderParams& p) {
  SuiteReport r("spider");
  std::mt19937_64 gen(p.seed);
  std::uniform_int_distribution<int> num(1, 60), den(1, 12);
  auto draw = [&] { return Rational(num(gen), den(gen)); };
  std::map<std::pair<Boundary, Boundary>, int> passes;
  std::map<std::pair<Boundary, Boundary>, BoundaryClass> classes;
  json first_bad = nullptr;
  for (int trial = 0; trial < p.trials; ++trial) {
    CellWeights w{draw(), draw(), draw(), draw()};
    Rational t = draw();
    for (const SpiderCheck& c : verify_spider_relations(w, t).checks) {
      passes[{c.blue, c.red}] += c.pass;
      classes[{c.blue, c.red}] = c.cls;
      if (!c.pass && first_bad.is_null())
        first_bad = {{"a", w.a.str()}, {"b", w.b.str()}, {"c", w.c.str()}, {"d", w.d.str()}, {"t", t.str()}};
    }
  }
  for (const auto& [pair, n] : passes) {
    const char* cls = classes[pair] == BoundaryClass::C ? "C" : classes[pair] == BoundaryClass::D ? "D" : "-";
    json check{{"name", "local relation"},
               {"blue", boundary_name(pair.first)},
               {"red", boundary_name(pair.second)},
               {"class", cls},
               {"passed_trials", n},
               {"trials", p.trials},
               {"pass", n == p.trials}};
    if (n != p.trials) check["example"] = first_bad;
    r.add(std::move(check));
  }

  int enumerated = 0, bad = 0;
  for (int N = 0; N <= p.max_enumerated_rank; ++N)
    for (const KTiling& kt : enumerate_ktilings(N, 2)) {
      ++enumerated;
      bad += !diagonal_count_check(kt);
    }
  r.add({{"name", "diagonal count on enumerated 2-tilings"},
         {"max_rank", p.max_enumerated_rank},
         {"tilings", enumerated},
         {"failures", bad},
         {"pass", bad == 0}});

  bad = 0;
  RngStream base(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    double t = (s % 3 == 0) ? 0.3 : (s % 3 == 1) ? 1.0 : 4.0;
    KTiling kt =
        sample_ktiling(p.sampled_rank, 2, WeightConfig::uniform(p.sampled_rank, t), base.derive(std::uint64_t(s)));
    bad += !diagonal_count_check(kt);
  }
  r.add({{"name", "diagonal count on sampled 2-tilings"},
         {"rank", p.sampled_rank},
         {"samples", p.samples},
         {"failures", bad},
         {"pass", bad == 0}});
  return r;
}

SuiteReport verify_bijection(const BijectionParams& p) {
  SuiteReport r("bijection");
  for (int k = 1; k <= p.colors; ++k) {
    int count = 0, bad = 0;
    for (int N = 0; N <= p.max_rank; ++N)
      for (const KTiling& kt : enumerate_ktilings(N, k)) {
        ++count;
        ColoredParticleArray a = ktiling_to_array(kt);
        bool ok = a.satisfies_interlacing() && a.satisfies_bounds() && array_to_ktiling(a) == kt;
        for (const Tiling& t : kt.tilings()) ok = ok && sequence_to_tiling(tiling_to_sequence(t)) == t;
        bad += !ok;
      }
    r.add({{"name", "round trip on enumerated k-tilings"},
           {"colors", k},
           {"max_rank", p.max_rank},
           {"tilings", count},
           {"failures", bad},
           {"pass", bad == 0}});
  }

  int bad = 0, states = 0;
  RngStream base(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    double t = (s % 3 == 0) ? 0.2 : (s % 3 == 1) ? 1.0 : 5.0;
    KTiling kt = sample_ktiling(p.sampled_rank, p.sampled_colors, WeightConfig::uniform(p.sampled_rank, t),
                                base.derive(std::uint64_t(s)), {}, [&](int, const KTiling& step) {
                                  ++states;
                                  ColoredParticleArray a = ktiling_to_array(step);
                                  bad += !(a.satisfies_interlacing() && a.satisfies_bounds() &&
                                           array_to_ktiling(a) == step);
                                });
    for (const Tiling& t : kt.tilings()) bad += !(sequence_to_tiling(tiling_to_sequence(t)) == t);
  }
  r.add({{"name", "round trip and interlacing along sampled runs"},
         {"rank", p.sampled_rank},
         {"colors", p.sampled_colors},
         {"samples", p.samples},
         {"states_checked", states},
         {"failures", bad},
         {"pass", bad == 0}});
  return r;
}

}  // namespace aztec
