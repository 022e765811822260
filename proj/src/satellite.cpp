#include "legsat/satellite.hpp"

#include <numeric>

namespace legsat {

PatternSpec braid_pattern(const BraidWord &w) {
  if (closure_components(w) != 1)
    throw DomainError("braid pattern closure must be a knot");
  PatternSpec s;
  s.family = PatternSpec::Family::braid;
  s.word = w;
  return s;
}

PatternSpec two_braid_pattern(long long m) {
  if (m % 2 == 0) throw EvenM("2-braid pattern needs an odd twist count");
  PatternSpec s;
  s.family = PatternSpec::Family::two_braid;
  s.m = m;
  return s;
}

PatternSpec cable_pattern(long long p, long long q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q < 1) throw DomainError("cable pattern needs q != 0");
  if (std::gcd(p, q) != 1)
    throw DomainError("cable pattern needs gcd(p,q) = 1");
  PatternSpec s;
  s.family = PatternSpec::Family::cable;
  s.p = p;
  s.q = q;
  return s;
}

PatternSpec whitehead_pattern(long long m) {
  PatternSpec s;
  s.family = PatternSpec::Family::whitehead;
  s.m = m;
  return s;
}

long long winding(const PatternSpec &spec) {
  switch (spec.family) {
    case PatternSpec::Family::braid:
      return spec.word.strands;
    case PatternSpec::Family::two_braid:
      return 2;
    case PatternSpec::Family::cable:
      return spec.q;
    case PatternSpec::Family::whitehead:
      return 0;
  }
  return 0;
}

std::pair<long long, long long> satellite_classical(
    const PatternInvariants &pat, const CompanionInvariants &comp) {
  const long long n = pat.winding;
  return {n * n * comp.tb + pat.reltb, n * comp.rot + pat.relrot};
}

DiagramStats compose_stats(const DiagramStats &pat,
                           const DiagramStats &comp) {
  if (comp.wp != 1 || comp.wm != 0)
    throw MultiComponentCompanion(
        "companion census must describe one strand traversed forward");
  const long long wp = pat.wp, wm = pat.wm;
  auto choose2 = [](long long x) { return x * (x - 1) / 2; };
  DiagramStats out;
  out.u = wp * comp.u + wm * comp.d + pat.u;
  out.d = wp * comp.d + wm * comp.u + pat.d;
  out.c = (wp + wm) * comp.c + pat.c;
  out.xp = (wp * wm) * comp.c + (wp * wp + wm * wm) * comp.xp +
           (2 * wp * wm) * comp.xm + pat.xp;
  out.xm = (choose2(wp) + choose2(wm)) * comp.c + (2 * wp * wm) * comp.xp +
           (wp * wp + wm * wm) * comp.xm + pat.xm;
  out.wp = wp * comp.wp + wm * comp.wm;
  out.wm = wp * comp.wm + wm * comp.wp;
  return out;
}

long long self_linking(long long tb, long long rot) { return tb - rot; }

long long transverse_satellite_sl(long long n, long long tb, long long rot,
                                  long long relsl) {
  return (n * n * tb - n * rot) - relsl;
}

PatternSpec twist_pattern(const PatternSpec &spec, long long k) {
  PatternSpec out = spec;
  switch (spec.family) {
    case PatternSpec::Family::braid:
      out.word = concat(spec.word,
                        full_twist(spec.word.strands, static_cast<int>(k)));
      break;
    case PatternSpec::Family::two_braid:
    case PatternSpec::Family::whitehead:
      out.m = spec.m + 2 * k;
      break;
    case PatternSpec::Family::cable:
      out.p = spec.p + k * spec.q;
      break;
  }
  return out;
}

long long pattern_max_reltb(const PatternSpec &spec) {
  switch (spec.family) {
    case PatternSpec::Family::braid:
      if (!is_positive(spec.word))
        throw NonPositiveBraid(
            "no closed form for the maximal reltb of a non-positive braid");
      return static_cast<long long>(spec.word.letters.size());
    case PatternSpec::Family::two_braid:
      return spec.m > 0 ? spec.m : 2 * spec.m;
    case PatternSpec::Family::cable:
      // q >= 1, so the sign of the slope is the sign of p.
      return spec.p > 0 ? spec.p * spec.q - spec.p : spec.p * spec.q;
    case PatternSpec::Family::whitehead: {
      const long long m = spec.m;
      if (m >= 0) return m % 2 == 0 ? 1 - m : -m - 3;
      return m % 2 == 0 ? 1 : -3;
    }
  }
  throw DomainError("unknown pattern family");
}

long long max_tb_satellite(const KnotProfile &profile,
                           const PatternSpec &spec) {
  validate(profile);
  if (!profile.flags.uniformly_thick)
    throw HypothesisNotDeclared("uniformly_thick flag not declared");
  const long long n = winding(spec);
  return n * n * profile.t_bar +
         pattern_max_reltb(twist_pattern(spec, -profile.t_bar));
}

}  // namespace legsat
