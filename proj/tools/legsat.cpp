// Command-line front end: invariants of Legendrian words, satellite
// invariants, mountain ranges, closed-form classifications, brute-force
// oracles, and grid rendering.  All numeric output is exact integers.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "legsat/atlas.hpp"
#include "legsat/json_io.hpp"
#include "legsat/rewrite.hpp"

namespace {

using namespace legsat;

std::string slurp(const std::string &path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

KnotProfile load_profile(const std::string &path) {
  return profile_from_json(Json::parse(slurp(path)));
}

// "+a,-b" -> (a, b)
std::pair<int, int> parse_stab(const std::string &s) {
  int pos = 0, neg = 0;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || (item[0] != '+' && item[0] != '-'))
      throw CLI::ValidationError("--stab expects e.g. +1,-0");
    const int v = std::stoi(item.substr(1));
    (item[0] == '+' ? pos : neg) = v;
  }
  return {pos, neg};
}

std::pair<long long, long long> parse_pair(const std::string &s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected two comma-separated integers");
  return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

void print_range(const MountainRange &range, bool as_json) {
  if (as_json)
    std::cout << range_to_json(range).dump() << '\n';
  else
    std::cout << render(range);
}

long long whitehead_expected(long long m, int pos, int neg) {
  const long long a = -m;
  if (pos == 0 && neg == 0)
    return a % 2 == 0 ? (a / 2 + 1) * (a / 2 + 1) : a + 1;
  if (a % 2 != 0) return 1;
  return (pos > 0 && neg > 0) ? 1 : a / 2 + 1;
}

int oracle_summary(std::size_t got, long long expected,
                   const std::vector<WordClass> &classes, bool as_json,
                   long long m) {
  const bool pass = static_cast<long long>(got) == expected;
  if (as_json) {
    Json j = census_to_json(m, classes);
    j["expected"] = expected;
    j["pass"] = pass;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto &cls : classes) {
      std::cout << "  " << word_tokens(cls.canonical)
                << " size=" << cls.size << " tag=[";
      for (std::size_t i = 0; i < cls.tag.size(); ++i)
        std::cout << (i ? "," : "") << cls.tag[i];
      std::cout << "]\n";
    }
    std::cout << "classes: " << got << " expected: " << expected << ' '
              << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Legendrian patterns and satellites in the solid torus"};
  app.require_subcommand(1);

  // --- invariants ---
  auto *cmd_inv = app.add_subcommand(
      "invariants", "relative classical invariants of a Legendrian word");
  std::string legword_json;
  bool inv_json = false;
  cmd_inv->add_option("--legword", legword_json, "LegWord as JSON")
      ->required();
  cmd_inv->add_flag("--json", inv_json, "machine-readable output");

  // --- satellite ---
  auto *cmd_sat = app.add_subcommand(
      "satellite", "classical invariants of a Legendrian satellite");
  std::string pat_json, companion_str;
  cmd_sat
      ->add_option("--pattern", pat_json,
                   "pattern invariants as JSON "
                   "{\"winding\":..,\"reltb\":..,\"relrot\":..}")
      ->required();
  cmd_sat->add_option("--companion", companion_str, "companion tb,rot")
      ->required();
  bool sat_json = false;
  cmd_sat->add_flag("--json", sat_json, "machine-readable output");

  // --- range ---
  auto *cmd_range = app.add_subcommand("range", "satellite mountain ranges");
  cmd_range->require_subcommand(1);
  std::string profile_path;
  long long opt_m = 0, opt_p = 0, opt_q = 1;
  int depth = 6;
  bool transverse = false, as_json = false;

  auto *rng_whd = cmd_range->add_subcommand("whitehead-double",
                                            "Whitehead double ranges");
  rng_whd->add_option("--profile", profile_path, "companion profile JSON file")
      ->required();
  rng_whd->add_option("-m", opt_m, "half twists")->required();
  rng_whd->add_option("--depth", depth, "rows below the peak");
  rng_whd->add_flag("--transverse", transverse, "self-linking range");
  rng_whd->add_flag("--json", as_json, "machine-readable output");

  auto *rng_2b = cmd_range->add_subcommand("two-braid", "2-braid satellites");
  rng_2b->add_option("--profile", profile_path)->required();
  rng_2b->add_option("-m", opt_m, "half twists (odd)")->required();
  rng_2b->add_option("--depth", depth);
  rng_2b->add_flag("--json", as_json);

  auto *rng_cab = cmd_range->add_subcommand("cable", "cable satellites");
  rng_cab->add_option("--profile", profile_path)->required();
  rng_cab->add_option("-p", opt_p)->required();
  rng_cab->add_option("-q", opt_q)->required();
  rng_cab->add_option("--depth", depth);
  rng_cab->add_flag("--json", as_json);

  // --- classify ---
  auto *cmd_cls = app.add_subcommand(
      "classify", "closed-form Legendrian pattern classifications");
  cmd_cls->require_subcommand(1);
  std::string stab_str;
  auto *cls_whd = cmd_cls->add_subcommand("whitehead", "Whitehead patterns");
  cls_whd->add_option("-m", opt_m, "half twists")->required();
  cls_whd->add_option("--stab", stab_str, "stabilizations, e.g. +1,-0");
  cls_whd->add_flag("--json", as_json);
  auto *cls_2b = cmd_cls->add_subcommand("two-braid", "2-braid patterns");
  cls_2b->add_option("-m", opt_m, "half twists (odd)")->required();
  cls_2b->add_flag("--json", as_json);

  // --- oracle ---
  auto *cmd_orc = app.add_subcommand(
      "oracle", "brute-force class censuses checked against closed forms");
  cmd_orc->require_subcommand(1);
  std::string braid_json;
  bool closed = false;
  auto *orc_whd = cmd_orc->add_subcommand("whitehead", "Whitehead patterns");
  orc_whd->add_option("-m", opt_m, "half twists (negative)")->required();
  orc_whd->add_option("--stab", stab_str, "stabilizations, e.g. +1,-0");
  orc_whd->add_flag("--json", as_json);
  auto *orc_2b = cmd_orc->add_subcommand("two-braid", "2-braid patterns");
  orc_2b->add_option("-m", opt_m, "half twists (negative odd)")->required();
  orc_2b->add_flag("--json", as_json);
  auto *orc_pos = cmd_orc->add_subcommand("positive", "positive braid words");
  orc_pos->add_option("-w", braid_json, "braid word as JSON")->required();
  orc_pos->add_flag("--closed", closed, "compare closed-up words");
  orc_pos->add_flag("--json", as_json);

  // --- render ---
  auto *cmd_ren = app.add_subcommand("render", "render a range file");
  std::string range_path;
  bool ren_json = false;
  cmd_ren->add_option("--range", range_path, "range JSON file ('-' is stdin)")
      ->required();
  cmd_ren->add_flag("--json", ren_json, "re-emit normalized range JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_inv) {
      const LegWord w = legword_from_json(Json::parse(legword_json));
      const auto [t, r] = word_invariants(w);
      if (inv_json)
        std::cout << Json{{"reltb", t}, {"relrot", r}}.dump() << '\n';
      else
        std::cout << "reltb=" << t << " relrot=" << r << '\n';
      return 0;
    }

    if (*cmd_sat) {
      const Json j = Json::parse(pat_json);
      PatternInvariants pat{j.at("winding").get<long long>(),
                            j.at("reltb").get<long long>(),
                            j.at("relrot").get<long long>()};
      const auto [ctb, crot] = parse_pair(companion_str);
      const auto [t, r] = satellite_classical(pat, {ctb, crot});
      if (sat_json)
        std::cout << Json{{"tb", t}, {"rot", r}, {"sl", self_linking(t, r)}}
                         .dump()
                  << '\n';
      else
        std::cout << "tb=" << t << " rot=" << r << " sl=" << self_linking(t, r)
                  << '\n';
      return 0;
    }

    if (*rng_whd) {
      const auto profile = load_profile(profile_path);
      print_range(transverse
                      ? transverse_whitehead_double(profile, opt_m, depth)
                      : range_whitehead_double(profile, opt_m, depth),
                  as_json);
      return 0;
    }
    if (*rng_2b) {
      print_range(
          range_two_braid_satellite(load_profile(profile_path), opt_m, depth),
          as_json);
      return 0;
    }
    if (*rng_cab) {
      print_range(range_cable(load_profile(profile_path), opt_p, opt_q, depth),
                  as_json);
      return 0;
    }

    if (*cls_whd) {
      const auto [pos, neg] =
          stab_str.empty() ? std::pair<int, int>{0, 0} : parse_stab(stab_str);
      const long long m = opt_m;
      Json out = Json::array();
      auto emit = [&](Json e) {
        if (as_json) {
          out.push_back(std::move(e));
        } else {
          bool first = true;
          for (auto it = e.begin(); it != e.end(); ++it) {
            std::cout << (first ? "" : " ") << it.key() << '=' << it.value();
            first = false;
          }
          std::cout << '\n';
        }
      };
      const long long a = -m;
      if (pos == 0 && neg == 0) {
        if (m >= 0 && m % 2 == 0)
          for (int label : {0, 1})
            emit({{"label", label}, {"reltb", 1 - m}, {"relrot", 0}});
        else if (m > 0)
          for (int rr : {1, -1})
            emit({{"reltb", -m - 3}, {"relrot", rr}});
        else if (m % 2 == 0)
          for (long long zp = 0; zp <= a / 2; ++zp)
            for (long long zm = 0; zm <= a / 2; ++zm)
              emit({{"z+", zp}, {"z-", zm}, {"reltb", 1}, {"relrot", 0}});
        else
          for (long long z = 0; z <= a; ++z)
            emit({{"z", z}, {"reltb", -3}, {"relrot", 0}});
      } else {
        if (m >= 0)
          throw DomainError("stabilized classification needs m < 0");
        const long long peak = m % 2 == 0 ? 1 : -3;
        const long long t = peak - pos - neg, r = pos - neg;
        if (m % 2 != 0 || (pos > 0 && neg > 0)) {
          emit({{"reltb", t}, {"relrot", r}});
        } else if (pos > 0) {
          for (long long zm = 0; zm <= a / 2; ++zm)
            emit({{"z-", zm}, {"reltb", t}, {"relrot", r}});
        } else {
          for (long long zp = 0; zp <= a / 2; ++zp)
            emit({{"z+", zp}, {"reltb", t}, {"relrot", r}});
        }
      }
      if (as_json) std::cout << out.dump() << '\n';
      return 0;
    }
    if (*cls_2b) {
      const long long m = opt_m;
      if (m % 2 == 0) throw EvenM("2-braid classification needs odd m");
      Json out = Json::array();
      if (m > 0) {
        out.push_back({{"reltb", m}, {"relrot", 0}});
      } else {
        for (long long z = 0; z <= -m; ++z)
          out.push_back({{"z", z}, {"reltb", 2 * m}, {"relrot", 2 * z + m}});
      }
      if (as_json) {
        std::cout << out.dump() << '\n';
      } else {
        for (const auto &e : out) {
          bool first = true;
          for (auto it = e.begin(); it != e.end(); ++it) {
            std::cout << (first ? "" : " ") << it.key() << '=' << it.value();
            first = false;
          }
          std::cout << '\n';
        }
      }
      return 0;
    }

    if (*orc_whd) {
      const auto [pos, neg] =
          stab_str.empty() ? std::pair<int, int>{0, 0} : parse_stab(stab_str);
      const auto classes = (pos == 0 && neg == 0)
                               ? whitehead_classes(opt_m)
                               : stabilized_classes(opt_m, pos, neg);
      return oracle_summary(classes.size(), whitehead_expected(opt_m, pos, neg),
                            classes, as_json, opt_m);
    }
    if (*orc_2b) {
      const auto classes = two_braid_classes(opt_m);
      return oracle_summary(classes.size(), -opt_m + 1, classes, as_json,
                            opt_m);
    }
    if (*orc_pos) {
      const BraidWord w = braid_from_json(Json::parse(braid_json));
      const long long got = positive_leg_classes(w, closed);
      const bool pass = got == 1;
      if (as_json) {
        Json j{{"classes", got}, {"expected", 1}, {"pass", pass}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "classes: " << got << " expected: 1 "
                  << (pass ? "PASS" : "FAIL") << '\n';
      }
      return pass ? 0 : 1;
    }

    if (*cmd_ren) {
      const auto range = range_from_json(Json::parse(slurp(range_path)));
      if (ren_json)
        std::cout << range_to_json(range).dump() << '\n';
      else
        std::cout << render(range);
      return 0;
    }
  } catch (const Json::exception &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
