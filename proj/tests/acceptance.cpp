// Acceptance suite: one pass/fail line per criterion, all exact integer
// comparisons.  Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "legsat/atlas.hpp"
#include "legsat/json_io.hpp"
#include "legsat/rewrite.hpp"

using namespace legsat;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::ostringstream notes;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}
  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      notes << "\n    failed: " << what;
    }
  }
  template <typename T, typename U>
  void expect_eq(const T &got, const U &want, const std::string &what) {
    if (!(got == static_cast<T>(want))) {
      ok = false;
      notes << "\n    " << what << ": got " << got << ", want " << want;
    }
  }
  ~Criterion() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)"
              << notes.str() << '\n';
    if (!ok) ++failures;
  }
};

long long range_at(const MountainRange &r, long long t, long long rot) {
  const auto it = r.entries.find({t, rot});
  return it == r.entries.end() ? 0 : it->second;
}

std::vector<std::vector<long long>> rows_of(const MountainRange &r,
                                            int rows) {
  std::vector<std::vector<long long>> out;
  for (long long t = r.max_tb; t > r.max_tb - rows; --t) {
    std::vector<long long> row;
    for (long long rot = -(r.max_tb - t) - 2; rot <= r.max_tb - t + 2; ++rot) {
      const long long c = range_at(r, t, rot);
      if (c > 0) row.push_back(c);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string fmt_rows(const std::vector<std::vector<long long>> &rows) {
  std::ostringstream os;
  for (const auto &row : rows) {
    os << '[';
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << row[i];
    os << ']';
  }
  return os.str();
}

void criterion_figures() {
  Criterion c("1. paper-figure reproduction (exact)");
  const auto profile = torus_13_3_profile();
  using Rows = std::vector<std::vector<long long>>;

  const Rows even_shape{{8},         {4, 4},       {4, 2, 4},
                        {4, 2, 2, 4}, {4, 2, 1, 2, 4}, {4, 2, 1, 1, 2, 4}};
  for (long long m : {-78, -72}) {
    const auto got = rows_of(range_whitehead_double(profile, m, 6), 6);
    c.expect_eq(fmt_rows(got), fmt_rows(even_shape),
                "flat-twist range, m=" + std::to_string(m));
  }

  const Rows odd_above{{4, 4},          {4, 4, 4},       {4, 2, 2, 4},
                       {4, 2, 2, 2, 4}, {4, 2, 1, 1, 2, 4},
                       {4, 2, 1, 1, 1, 2, 4}};
  c.expect_eq(fmt_rows(rows_of(range_whitehead_double(profile, -77, 6), 6)),
              fmt_rows(odd_above), "twin-peak range, m=-77");

  const Rows deep_even{{12},          {6, 6},          {6, 2, 6},
                       {6, 2, 2, 6},  {6, 2, 1, 2, 6}, {6, 2, 1, 1, 2, 6}};
  c.expect_eq(fmt_rows(rows_of(range_whitehead_double(profile, -80, 6), 6)),
              fmt_rows(deep_even), "deep even range, m=-80");

  const auto r81 = range_whitehead_double(profile, -81, 5);
  c.expect_eq(range_at(r81, -3, 0), 12, "m=-81 top entry a");
  c.expect_eq(range_at(r81, -4, 1), 2, "m=-81 edge entry b");
  c.expect_eq(range_at(r81, -4, -1), 2, "m=-81 edge entry b (mirror)");
  const Rows deep_odd{{12}, {2, 2}, {2, 2, 2}, {2, 1, 1, 2}, {2, 1, 1, 1, 2}};
  c.expect_eq(fmt_rows(rows_of(r81, 5)), fmt_rows(deep_odd),
              "deep odd range, m=-81");
}

void criterion_whitehead_oracle() {
  Criterion c("2. oracle vs closed form, Whitehead patterns (exact)");
  for (long long m : {-1, -3, -5})
    c.expect_eq(static_cast<long long>(whitehead_classes(m).size()), -m + 1,
                "class count, m=" + std::to_string(m));
  for (long long m : {-2, -4, -6}) {
    const long long side = -m / 2 + 1;
    c.expect_eq(static_cast<long long>(whitehead_classes(m).size()),
                side * side, "class count, m=" + std::to_string(m));
  }
  for (long long m : {-2, -4, -6}) {
    const long long side = -m / 2 + 1;
    c.expect_eq(static_cast<long long>(stabilized_classes(m, 1, 0).size()),
                side, "positive stabilization, m=" + std::to_string(m));
    c.expect_eq(static_cast<long long>(stabilized_classes(m, 0, 2).size()),
                side, "negative stabilization, m=" + std::to_string(m));
    c.expect_eq(static_cast<long long>(stabilized_classes(m, 1, 1).size()),
                1LL, "mixed stabilization, m=" + std::to_string(m));
  }
  for (long long m : {-1, -3, -5}) {
    for (const auto &[p, n] :
         {std::pair<int, int>{1, 0}, {0, 1}, {2, 1}}) {
      c.expect_eq(static_cast<long long>(stabilized_classes(m, p, n).size()),
                  1LL, "odd twists collapse, m=" + std::to_string(m));
    }
  }
}

void criterion_two_braid_oracle() {
  Criterion c("3. oracle vs closed form, 2-braid patterns (exact)");
  for (long long m : {-1, -3, -5, -7}) {
    const auto classes = two_braid_classes(m);
    c.expect_eq(static_cast<long long>(classes.size()), -m + 1,
                "class count, m=" + std::to_string(m));
    std::multiset<long long> rots;
    for (const auto &cls : classes) {
      LegWord w;
      w.strands = 2;
      w.orientation = {1, 1};
      w.closed = true;
      for (char letter : cls.canonical)
        w.blocks.push_back(letter == letters::Zp ? zb() : sb());
      const auto [t, r] = word_invariants(w);
      c.expect_eq(t, 2 * m, "reltb of a class, m=" + std::to_string(m));
      rots.insert(r);
    }
    std::multiset<long long> expected;
    for (long long r = m; r <= -m; r += 2) expected.insert(r);
    c.expect(rots == expected,
             "rotation multiset, m=" + std::to_string(m));
  }
}

void criterion_positive_braids() {
  Criterion c("4. positive-braid uniqueness (exact)");
  for (int strands : {2, 3}) {
    for (int len = 1; len <= 6; ++len) {
      // Enumerate every positive word and partition by the smooth braid it
      // carries (open: monoid class; closed: cyclic monoid class).
      std::vector<BraidWord> words;
      std::vector<int> digits(len, 1);
      while (true) {
        words.push_back(make_braid(strands, digits));
        int pos = len - 1;
        while (pos >= 0 && digits[pos] == strands - 1) digits[pos--] = 1;
        if (pos < 0) break;
        ++digits[pos];
      }
      auto key_of = [](const BraidWord &w) {
        std::string k;
        for (const auto &l : w.letters) k.push_back(static_cast<char>(l.index));
        return k;
      };
      for (bool closed : {false, true}) {
        std::map<std::string, BraidWord> braid_classes;
        for (const auto &w : words) {
          const auto cls = positive_class(w, closed, 4000000);
          braid_classes.emplace(key_of(cls.front()), cls.front());
        }
        for (const auto &[key, rep] : braid_classes) {
          const long long n = positive_leg_classes(rep, closed);
          if (n != 1) {
            c.expect_eq(n, 1LL,
                        std::string("unique class, ") +
                            (closed ? "closed" : "open") + " B" +
                            std::to_string(strands) + " len " +
                            std::to_string(len));
          }
        }
      }
    }
  }
}

void criterion_satellite_formula() {
  Criterion c("5. satellite formula equivalence (property, exact)");
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long long> small(0, 8), wrap(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    DiagramStats pat;
    pat.u = small(rng);
    pat.d = small(rng);
    if ((pat.u + pat.d) % 2 != 0) ++pat.d;  // closed fronts have even cusps
    pat.c = pat.u + pat.d;
    pat.xp = small(rng);
    pat.xm = small(rng);
    pat.wp = wrap(rng);
    pat.wm = wrap(rng);
    DiagramStats comp;
    comp.u = small(rng);
    comp.d = comp.u;
    comp.c = comp.u + comp.d;
    comp.xp = small(rng);
    comp.xm = small(rng);
    comp.wp = 1;
    const auto whole = compose_stats(pat, comp);
    const auto [t, r] = satellite_classical(
        {pat.wp - pat.wm, stats_reltb(pat), stats_relrot(pat)},
        {stats_reltb(comp), stats_relrot(comp)});
    if (stats_reltb(whole) != t || stats_relrot(whole) != r) {
      c.expect(false, "formula/diagram mismatch at trial " +
                          std::to_string(trial));
      break;
    }
  }

  // The two-strand pattern inserted into the maximal right-handed trefoil.
  DiagramStats trefoil{2, 2, 4, 3, 0, 1, 0};  // tb = 1, rot = 0
  DiagramStats pattern = word_stats(
      [] {
        LegWord w;
        w.strands = 2;
        w.orientation = {1, 1};
        w.blocks = {xb(0), xb(0), xb(0)};
        return w;
      }());
  const auto whole = compose_stats(pattern, trefoil);
  c.expect_eq(stats_reltb(whole), 7LL, "trefoil satellite tb");
  c.expect_eq(stats_relrot(whole), 0LL, "trefoil satellite rot");
  const auto [t, r] =
      satellite_classical({2, 3, 0}, {stats_reltb(trefoil), 0});
  c.expect_eq(t, 7LL, "trefoil satellite tb via formula");
  c.expect_eq(r, 0LL, "trefoil satellite rot via formula");
}

void criterion_engine_vs_closed_form() {
  Criterion c("6. engine/closed-form cross-validation (exact)");
  const auto profile = torus_13_3_profile();
  for (long long m = -84; m <= -70; ++m) {
    const auto range = range_whitehead_double(profile, m, 10);
    const auto table = pattern_table(whitehead_pattern(m - 2 * profile.t_bar));
    for (long long t = range.max_tb; t > range.max_tb - 10; --t) {
      for (long long r = -(range.max_tb - t) - 2; r <= range.max_tb - t + 2;
           ++r) {
        const long long engine = count_general(profile, table, 0, t, r);
        const long long closed = range_at(range, t, r);
        if (engine != closed) {
          c.expect_eq(engine, closed,
                      "m=" + std::to_string(m) + " at (" + std::to_string(t) +
                          "," + std::to_string(r) + ")");
        }
      }
    }
  }
}

void criterion_transverse() {
  Criterion c("7. transverse coherence (exact)");
  const auto profile = torus_13_3_profile();

  const auto r80 = transverse_whitehead_double(profile, -80, 6);
  c.expect_eq(range_at(r80, 1, 0), 6LL, "m=-80 sl=1");
  c.expect_eq(range_at(r80, -1, 0), 2LL, "m=-80 sl=-1");

  // Transverse counts are the stable Legendrian counts along the
  // negative-stabilization rays.
  for (long long m = -84; m <= -70; ++m) {
    const auto trans = transverse_whitehead_double(profile, m, 6);
    const auto leg = range_whitehead_double(profile, m, 40);
    for (long long a = 0; a < 6; ++a) {
      const long long deep = 30;
      const long long t = leg.max_tb - a - deep;
      const long long r =
          a - deep - ((m % 2 != 0 && m > 2 * profile.t_bar) ? 1 : 0);
      const long long tc = range_at(trans, trans.max_tb - 2 * a, 0);
      if (tc != range_at(leg, t, r)) {
        c.expect_eq(tc, range_at(leg, t, r),
                    "ray limit, m=" + std::to_string(m) +
                        " a=" + std::to_string(a));
      }
    }
  }

  // Direct evaluation of the four self-linking count formulas.
  const ValleyData v = valleys(profile);
  auto nd = [&](long long d) {
    return (d >= 1 && d <= v.max_depth)
               ? v.histogram[static_cast<std::size_t>(d)]
               : 0;
  };
  const long long half = (v.count + 2) / 2;
  for (long long m = -84; m <= -70; ++m) {
    const auto trans = transverse_whitehead_double(profile, m, 4);
    const bool even = m % 2 == 0;
    const long long two_tbar = 2 * profile.t_bar;
    long long max_sl = 0;
    if (even)
      max_sl = m >= two_tbar ? two_tbar - m + 1 : 1;
    else
      max_sl = m > two_tbar ? two_tbar - m - 2 : -3;
    c.expect_eq(trans.max_tb, max_sl, "max sl, m=" + std::to_string(m));
    for (long long a = 0; a < 4; ++a) {
      long long want = half;
      if (m >= two_tbar) {
        for (long long d = 1; d <= a; ++d) want -= nd(d);
      } else if (!even) {
        const long long lp = (two_tbar - m - 1) / 2;
        for (long long d = 1; d <= lp; ++d) want -= nd(d);
        for (long long d = lp + 1; d <= lp + a; ++d) want -= nd(d);
      } else {
        const long long L = (two_tbar - m) / 2;
        if (a == 0) {
          want = half * (L + 1);
          for (long long d = 1; d <= L; ++d) want -= nd(d) * (L - d + 1);
        } else {
          for (long long d = 1; d <= L; ++d) want -= nd(d);
          for (long long d = L + 1; d <= L + a - 1; ++d) want -= nd(d);
        }
      }
      c.expect_eq(range_at(trans, max_sl - 2 * a, 0), want,
                  "m=" + std::to_string(m) + " level " + std::to_string(a));
    }
  }
}

void criterion_whitehead_conventions() {
  Criterion c("8. Whitehead-convention pinning (exact)");
  using OL = OrientedLetter;
  for (int m : {0, 2, 4, 6, 8}) {
    for (int orient : {1, -1}) {
      const auto inv = whitehead_invariants(m, {}, orient);
      c.expect(inv == std::pair<long long, long long>{1 - m, 0},
               "flat clasp, m=" + std::to_string(m));
    }
  }
  for (int m : {1, 3, 5, 7}) {
    c.expect(whitehead_invariants(m, {}, 1) ==
                 std::pair<long long, long long>{-m - 3, 1},
             "odd clasp, m=" + std::to_string(m));
    c.expect(whitehead_invariants(m, {}, -1) ==
                 std::pair<long long, long long>{-m - 3, -1},
             "odd clasp mirrored, m=" + std::to_string(m));
  }
  for (int m = -6; m < 0; ++m) {
    const int len = -m;
    for (int start = 0; start < 2; ++start) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<OL> box;
        int sign = start == 0 ? 1 : -1;
        for (int i = 0; i < len; ++i) {
          const bool z = (mask >> i) & 1;
          box.push_back(z ? (sign > 0 ? OL::Zp : OL::Zm)
                          : (sign > 0 ? OL::Sp : OL::Sm));
          sign = -sign;
        }
        const auto inv = whitehead_invariants(m, box);
        const auto want = len % 2 == 0
                              ? std::pair<long long, long long>{1, 0}
                              : std::pair<long long, long long>{-3, 0};
        if (inv != want) {
          c.expect(false, "box word conventions, m=" + std::to_string(m));
        }
      }
    }
  }
}

}  // namespace

int main() {
  criterion_figures();
  criterion_whitehead_oracle();
  criterion_two_braid_oracle();
  criterion_positive_braids();
  criterion_satellite_formula();
  criterion_engine_vs_closed_form();
  criterion_transverse();
  criterion_whitehead_conventions();
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
