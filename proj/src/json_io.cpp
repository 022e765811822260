#include "legsat/json_io.hpp"

namespace legsat {

Json braid_to_json(const BraidWord &w) {
  Json j;
  j["n"] = w.strands;
  auto arr = Json::array();
  for (const auto &l : w.letters) arr.push_back(l.sign * l.index);
  j["word"] = std::move(arr);
  return j;
}

BraidWord braid_from_json(const Json &j) {
  return make_braid(j.at("n").get<int>(),
                    j.at("word").get<std::vector<int>>());
}

Json legword_to_json(const LegWord &w) {
  Json j;
  j["n"] = w.strands;
  j["orient"] = w.orientation;
  j["closed"] = w.closed;
  auto arr = Json::array();
  for (const auto &b : w.blocks) arr.push_back(block_token(b));
  j["blocks"] = std::move(arr);
  return j;
}

LegWord legword_from_json(const Json &j) {
  LegWord w;
  w.strands = j.at("n").get<int>();
  w.orientation = j.at("orient").get<std::vector<int>>();
  w.closed = j.at("closed").get<bool>();
  for (const auto &tok : j.at("blocks"))
    w.blocks.push_back(block_from_token(tok.get<std::string>()));
  validate(w);
  return w;
}

Json pattern_to_json(const PatternSpec &spec) {
  Json j;
  switch (spec.family) {
    case PatternSpec::Family::braid:
      j["family"] = "braid";
      j["n"] = spec.word.strands;
      {
        auto arr = Json::array();
        for (const auto &l : spec.word.letters)
          arr.push_back(l.sign * l.index);
        j["word"] = std::move(arr);
      }
      break;
    case PatternSpec::Family::two_braid:
      j["family"] = "two_braid";
      j["m"] = spec.m;
      break;
    case PatternSpec::Family::cable:
      j["family"] = "cable";
      j["p"] = spec.p;
      j["q"] = spec.q;
      break;
    case PatternSpec::Family::whitehead:
      j["family"] = "whitehead";
      j["m"] = spec.m;
      break;
  }
  return j;
}

PatternSpec pattern_from_json(const Json &j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "braid")
    return braid_pattern(make_braid(j.at("n").get<int>(),
                                    j.at("word").get<std::vector<int>>()));
  if (family == "two_braid") return two_braid_pattern(j.at("m").get<long long>());
  if (family == "cable")
    return cable_pattern(j.at("p").get<long long>(), j.at("q").get<long long>());
  if (family == "whitehead") return whitehead_pattern(j.at("m").get<long long>());
  throw UnsupportedFamily("unknown pattern family: " + family);
}

Json profile_to_json(const KnotProfile &p) {
  Json j;
  j["name"] = p.name;
  j["t_bar"] = p.t_bar;
  j["peak_rots"] = p.peak_rots;
  Json flags;
  flags["legendrian_simple"] = p.flags.legendrian_simple;
  flags["uniformly_thick"] = p.flags.uniformly_thick;
  flags["self_mirror"] = p.flags.self_mirror;
  flags["no_unoriented_symmetry"] = p.flags.no_unoriented_symmetry;
  flags["oriented_symmetry"] = p.flags.oriented_symmetry;
  j["flags"] = std::move(flags);
  return j;
}

KnotProfile profile_from_json(const Json &j) {
  KnotProfile p;
  p.name = j.value("name", std::string{});
  p.t_bar = j.at("t_bar").get<long long>();
  p.peak_rots = j.at("peak_rots").get<std::vector<long long>>();
  if (j.contains("flags")) {
    const auto &f = j.at("flags");
    p.flags.legendrian_simple = f.value("legendrian_simple", false);
    p.flags.uniformly_thick = f.value("uniformly_thick", false);
    p.flags.self_mirror = f.value("self_mirror", false);
    p.flags.no_unoriented_symmetry = f.value("no_unoriented_symmetry", false);
    p.flags.oriented_symmetry = f.value("oriented_symmetry", false);
  }
  validate(p);
  return p;
}

Json range_to_json(const MountainRange &r) {
  Json j;
  const bool transverse = r.kind == MountainRange::Kind::transverse;
  j["kind"] = transverse ? "transverse" : "legendrian";
  j[transverse ? "max_sl" : "max_tb"] = r.max_tb;
  auto arr = Json::array();
  for (const auto &[key, count] : r.entries) {
    Json e;
    if (transverse) {
      e["sl"] = key.first;
    } else {
      e["tb"] = key.first;
      e["rot"] = key.second;
    }
    e["count"] = count;
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j;
}

MountainRange range_from_json(const Json &j) {
  MountainRange r;
  const std::string kind = j.at("kind").get<std::string>();
  r.kind = kind == "transverse" ? MountainRange::Kind::transverse
                                : MountainRange::Kind::legendrian;
  r.max_tb = j.at(kind == "transverse" ? "max_sl" : "max_tb").get<long long>();
  for (const auto &e : j.at("entries")) {
    const long long count = e.at("count").get<long long>();
    if (r.kind == MountainRange::Kind::transverse)
      r.entries[{e.at("sl").get<long long>(), 0}] = count;
    else
      r.entries[{e.at("tb").get<long long>(), e.at("rot").get<long long>()}] =
          count;
  }
  return r;
}

Json census_to_json(long long m, const std::vector<WordClass> &classes) {
  Json j;
  j["m"] = m;
  auto arr = Json::array();
  for (const auto &cls : classes) {
    Json e;
    e["canonical"] = word_tokens(cls.canonical);
    e["size"] = cls.size;
    e["tag"] = cls.tag;
    arr.push_back(std::move(e));
  }
  j["classes"] = std::move(arr);
  return j;
}

}  // namespace legsat
