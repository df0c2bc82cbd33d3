#include "aztec/oracle.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <thread>

#include "aztec/errors.hpp"

namespace aztec {

Rational rational_pow(const Rational& x, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

namespace {

// Decimal digits with optional sign and point. cpp_int alone would read "025" as octal.
Rational parse_decimal(const std::string& s) {
  bool negative = !s.empty() && s[0] == '-';
  std::string body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  auto dot = body.find('.');
  std::string digits = dot == std::string::npos ? body : body.substr(0, dot) + body.substr(dot + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError("not a rational number: '" + s + "'");
  auto first = digits.find_first_not_of('0');
  boost::multiprecision::cpp_int num(first == std::string::npos ? "0" : digits.substr(first));
  unsigned scale = dot == std::string::npos ? 0 : static_cast<unsigned>(body.size() - dot - 1);
  Rational r(num, boost::multiprecision::pow(boost::multiprecision::cpp_int(10), scale));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rational num = parse_decimal(s.substr(0, slash));
  Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw ConfigError("not a rational number: '" + s + "'");
  return num / den;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& coeff, int degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i > 0) s += "*t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

ExactWeights ExactWeights::uniform(int rank, const Rational& t) {
  return {std::vector<Rational>(rank, Rational(1)), std::vector<Rational>(rank, Rational(1)), t};
}

WeightConfig ExactWeights::to_float() const {
  WeightConfig w;
  for (const auto& x : c) w.c.push_back(static_cast<double>(x));
  for (const auto& x : b) w.b.push_back(static_cast<double>(x));
  w.t = static_cast<double>(t);
  return w;
}

namespace {

void extend(int rank, const FaceBox& box, std::vector<Role>& roles, std::size_t from,
            std::vector<Tiling>& out) {
  std::size_t i = from;
  while (i < roles.size() && roles[i] != Role::empty) ++i;
  if (i == roles.size()) {
    out.push_back(Tiling::from_roles(rank, roles));
    return;
  }
  Face f = box.face(i);
  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    Face g = o == Orientation::horizontal ? f.east() : f.north();
    if (!box.contains(g) || roles[box.index(g)] != Role::empty) continue;
    bool h = o == Orientation::horizontal;
    roles[i] = h ? Role::h_left : Role::v_bottom;
    roles[box.index(g)] = h ? Role::h_right : Role::v_top;
    extend(rank, box, roles, i + 1, out);
    roles[i] = Role::empty;
    roles[box.index(g)] = Role::empty;
  }
}

}  // namespace

std::vector<Tiling> enumerate_tilings(int rank) {
  if (rank < 0 || rank > 4) throw ConfigError("enumeration supports ranks 0..4");
  FaceBox box(rank);
  std::vector<Role> roles(box.size(), Role::outside);
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (in_diamond(box.face(i), rank)) roles[i] = Role::empty;
  std::vector<Tiling> out;
  extend(rank, box, roles, 0, out);
  return out;
}

std::vector<KTiling> enumerate_ktilings(int rank, int colors) {
  if (colors < 1) throw ConfigError("need at least one color");
  auto base = enumerate_tilings(rank);
  double total = std::pow(static_cast<double>(base.size()), colors);
  if (total > static_cast<double>(1 << 22)) throw ConfigError("too many k-tilings to enumerate");
  std::vector<KTiling> out;
  std::vector<std::size_t> idx(colors, 0);
  while (true) {
    std::vector<Tiling> ts;
    for (std::size_t i : idx) ts.push_back(base[i]);
    out.emplace_back(std::move(ts));
    int l = colors - 1;
    while (l >= 0 && ++idx[l] == base.size()) idx[l--] = 0;
    if (l < 0) break;
  }
  return out;
}

Rational exact_weight(const KTiling& kt, const ExactWeights& w) {
  Rational r(1);
  for (const Tiling& t : kt.tilings()) r *= tiling_weight_as(t, w.c, w.b);
  return r * rational_pow(w.t, total_interactions(kt));
}

Rational exact_Z(int rank, int colors, const ExactWeights& w) {
  Rational z(0);
  for (const KTiling& kt : enumerate_ktilings(rank, colors)) z += exact_weight(kt, w);
  return z;
}

Polynomial exact_Z_polynomial(int rank, int colors, const std::vector<Rational>& c,
                              const std::vector<Rational>& b) {
  std::vector<Rational> coeffs;
  for (const KTiling& kt : enumerate_ktilings(rank, colors)) {
    Rational w(1);
    for (const Tiling& t : kt.tilings()) w *= tiling_weight_as(t, c, b);
    auto e = static_cast<std::size_t>(total_interactions(kt));
    if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
    coeffs[e] += w;
  }
  return Polynomial(std::move(coeffs));
}

Rational product_formula(int rank, int colors, const ExactWeights& w) {
  return product_formula_polynomial(rank, colors, w.c, w.b)(w.t);
}

Polynomial product_formula_polynomial(int rank, int colors, const std::vector<Rational>& c,
                                      const std::vector<Rational>& b) {
  Polynomial p(std::vector<Rational>{Rational(1)});
  for (int l = 0; l < colors; ++l)
    for (int i = 1; i <= rank; ++i)
      for (int j = i; j <= rank; ++j)
        p = p * (Polynomial(std::vector<Rational>{Rational(1)}) +=
                 Polynomial::monomial(c.at(i - 1) * b.at(rank - j), l));
  return p;
}

double ExactDistribution::probability(std::size_t i) const {
  return static_cast<double>(Rational(weights.at(i) / Z));
}

ExactDistribution exact_distribution(int rank, int colors, const ExactWeights& w) {
  ExactDistribution d;
  d.rank = rank;
  d.colors = colors;
  d.t = w.t;
  d.states = enumerate_ktilings(rank, colors);
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    d.weights.push_back(exact_weight(d.states[i], w));
    d.Z += d.weights.back();
    d.index.emplace(canonical_key(d.states[i]), i);
  }
  return d;
}

namespace {

void branch_fills(ShuffleFrame& frame, int l, std::size_t b, const Rational& prob,
                  const ExactWeights& w, DiagonalConvention conv, std::map<std::string, Rational>& out,
                  std::vector<KTiling>& states) {
  while (l < frame.colors() && b == frame.blocks(l).size()) {
    ++l;
    b = 0;
  }
  if (l == frame.colors()) {
    KTiling kt = frame.finish();
    auto [it, inserted] = out.emplace(canonical_key(kt), prob);
    if (inserted) states.push_back(std::move(kt));
    else it->second += prob;
    return;
  }
  int rank = frame.new_rank();
  int i = creation_weight_index(frame.blocks(l)[b].ll, rank, conv);
  Rational x = w.c.at(i - 1) * w.b.at(rank - i) * rational_pow(w.t, frame.creation_exponent(l, b));
  Rational ph = x / (1 + x);
  for (Fill f : {Fill::horizontal_pair, Fill::vertical_pair}) {
    Rational p = f == Fill::horizontal_pair ? ph : 1 - ph;
    if (p == 0) continue;
    ShuffleFrame next = frame;
    next.fill(l, b, f);
    branch_fills(next, l, b + 1, prob * p, w, conv, out, states);
  }
}

}  // namespace

std::map<std::string, Rational> exact_shuffle_law(int rank, int colors, const ExactWeights& w,
                                                  DiagonalConvention conv) {
  std::vector<std::pair<KTiling, Rational>> law{{empty_ktiling(colors), Rational(1)}};
  std::map<std::string, Rational> keyed;
  for (int r = 0; r < rank; ++r) {
    std::map<std::string, Rational> next;
    std::vector<KTiling> states;
    for (const auto& [kt, p] : law) {
      ShuffleFrame frame(kt);
      branch_fills(frame, 0, 0, p, w, conv, next, states);
    }
    law.clear();
    for (KTiling& kt : states) {
      const Rational& p = next.at(canonical_key(kt));
      law.emplace_back(std::move(kt), p);
    }
    keyed = std::move(next);
  }
  if (rank == 0) keyed.emplace(canonical_key(empty_ktiling(colors)), Rational(1));
  return keyed;
}

SamplerReport validate_sampler(const Sampler& sampler, const ExactDistribution& exact, int samples,
                               std::uint64_t seed, int threads) {
  if (samples < 1) throw ConfigError("need at least one sample");
  threads = std::max(1, threads);
  RngStream base(seed);
  std::vector<std::vector<std::uint64_t>> counts(threads, std::vector<std::uint64_t>(exact.states.size(), 0));
  std::vector<int> off(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int id) {
    try {
      for (int s = id; s < samples; s += threads) {
        KTiling kt = sampler(base.derive(static_cast<std::uint64_t>(s)));
        auto it = exact.index.find(canonical_key(kt));
        if (it == exact.index.end() || exact.weights[it->second] == 0) ++off[id];
        else ++counts[id][it->second];
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SamplerReport r;
  r.samples = samples;
  std::vector<std::uint64_t> total(exact.states.size(), 0);
  for (int id = 0; id < threads; ++id) {
    r.off_support += off[id];
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += counts[id][i];
  }
  double n = samples;
  double tv = r.off_support / n;
  int support = 0;
  for (std::size_t i = 0; i < total.size(); ++i) {
    double p = exact.probability(i);
    tv += std::abs(total[i] / n - p);
    if (p > 0) {
      ++support;
      double e = p * n;
      r.chi2 += (total[i] - e) * (total[i] - e) / e;
    }
  }
  r.tv = tv / 2;
  r.dof = std::max(1, support - 1);
  if (r.off_support > 0) {
    r.chi2 = std::numeric_limits<double>::infinity();
    r.p_value = 0;
  } else {
    r.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(r.dof), r.chi2));
  }
  return r;
}

double factorization_tv(const std::vector<KTiling>& samples) {
  if (samples.empty() || samples.front().colors() < 2) throw ConfigError("need samples with two colors");
  std::map<std::string, double> a, b;
  std::map<std::pair<std::string, std::string>, double> joint;
  double n = samples.size();
  for (const KTiling& kt : samples) {
    auto ka = canonical_key(KTiling({kt.color(0)}));
    auto kb = canonical_key(KTiling({kt.color(1)}));
    a[ka] += 1 / n;
    b[kb] += 1 / n;
    joint[{ka, kb}] += 1 / n;
  }
  double tv = 0;
  for (const auto& [ka, pa] : a) {
    for (const auto& [kb, pb] : b) {
      auto it = joint.find({ka, kb});
      tv += std::abs((it == joint.end() ? 0.0 : it->second) - pa * pb);
    }
  }
  return tv / 2;
}

}  // namespace aztec
