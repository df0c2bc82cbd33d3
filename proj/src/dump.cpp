#include "aztec/dump.hpp"

#include <algorithm>

#include "aztec/errors.hpp"

namespace aztec {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) throw MalformedInput(std::string("missing integer '") + key + "'");
  return it->get<int>();
}

const json& get_array(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) throw MalformedInput(std::string("missing array '") + key + "'");
  return *it;
}

std::vector<HalfInt> levels_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("particle level is not a list");
  std::vector<HalfInt> out;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw MalformedInput("particle position is not an integer");
    int twice = e.get<int>();
    if (twice % 2 == 0) throw MalformedInput("doubled particle position must be odd");
    out.push_back(HalfInt::from_twice(twice));
  }
  return out;
}

json levels_to_json(const std::vector<std::vector<HalfInt>>& levels) {
  json out = json::array();
  for (const auto& level : levels) {
    json row = json::array();
    for (HalfInt h : level) row.push_back(h.twice());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json ktiling_to_json(const KTiling& kt) {
  json tilings = json::array();
  for (const Tiling& t : kt.tilings()) {
    auto ds = t.dominoes();
    std::sort(ds.begin(), ds.end(), [](const Domino& a, const Domino& b) { return a.anchor < b.anchor; });
    json list = json::array();
    for (const Domino& d : ds)
      list.push_back({{"u", d.anchor.u}, {"v", d.anchor.v}, {"o", d.orientation == Orientation::horizontal ? "h" : "v"}});
    tilings.push_back(std::move(list));
  }
  return {{"rank", kt.rank()}, {"colors", kt.colors()}, {"tilings", std::move(tilings)}};
}

KTiling ktiling_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("dump is not a JSON object");
  int rank = get_int(j, "rank");
  int colors = get_int(j, "colors");
  if (rank < 0) throw MalformedInput("negative rank");
  const json& tilings = get_array(j, "tilings");
  if (colors < 1 || static_cast<int>(tilings.size()) != colors)
    throw MalformedInput("color count does not match the tiling list");
  std::vector<Tiling> out;
  for (const json& list : tilings) {
    if (!list.is_array()) throw MalformedInput("tiling is not a list");
    std::vector<Domino> ds;
    for (const json& e : list) {
      if (!e.is_object()) throw MalformedInput("domino is not an object");
      auto o = e.find("o");
      if (o == e.end() || !o->is_string() || (*o != "h" && *o != "v"))
        throw MalformedInput("domino orientation must be \"h\" or \"v\"");
      ds.push_back({{get_int(e, "u"), get_int(e, "v")}, *o == "h" ? Orientation::horizontal : Orientation::vertical});
    }
    Tiling t(rank, ds);
    if (!validate(t)) throw MalformedInput("dominoes do not tile the diamond");
    out.push_back(std::move(t));
  }
  return KTiling(std::move(out));
}

std::string write_dump(const KTiling& kt) { return ktiling_to_json(kt).dump() + "\n"; }

KTiling read_dump(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedInput("dump is not valid JSON");
  return ktiling_from_json(j);
}

json distribution_to_json(const ExactDistribution& dist) {
  json entries = json::array();
  for (std::size_t i = 0; i < dist.states.size(); ++i)
    entries.push_back({{"tiling", ktiling_to_json(dist.states[i])},
                       {"weight_num", numerator(dist.weights[i]).str()},
                       {"weight_den", denominator(dist.weights[i]).str()}});
  return {{"rank", dist.rank},
          {"colors", dist.colors},
          {"t", dist.t.str()},
          {"entries", std::move(entries)},
          {"Z_num", numerator(dist.Z).str()},
          {"Z_den", denominator(dist.Z).str()}};
}

json array_to_json(const ColoredParticleArray& a) {
  json colors = json::array();
  for (const ParticleLevels& c : a.colors) colors.push_back({{"x", levels_to_json(c.x)}, {"y", levels_to_json(c.y)}});
  return {{"rank", a.rank}, {"colors", std::move(colors)}};
}

ColoredParticleArray array_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("particle array is not a JSON object");
  ColoredParticleArray a;
  a.rank = get_int(j, "rank");
  for (const json& c : get_array(j, "colors")) {
    if (!c.is_object()) throw MalformedInput("color entry is not an object");
    ParticleLevels p;
    for (const json& level : get_array(c, "x")) p.x.push_back(levels_from_json(level));
    for (const json& level : get_array(c, "y")) p.y.push_back(levels_from_json(level));
    a.colors.push_back(std::move(p));
  }
  if (!a.has_valid_shape()) throw MalformedInput("particle array has the wrong shape");
  return a;
}

}  // namespace aztec
