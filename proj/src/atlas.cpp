#include "legsat/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace legsat {

namespace {

long long ceil_half(long long a) { return (a + 1) / 2; }  // a >= 0

bool in_cone(long long peak_t, long long peak_r, long long t, long long r) {
  const long long dt = peak_t - t;
  if (dt < 0) return false;
  const long long dr = std::llabs(r - peak_r);
  return dr <= dt && (dt - dr) % 2 == 0;
}

void require_flags(const KnotProfile &p, bool winding_zero) {
  validate(p);
  if (!p.flags.legendrian_simple)
    throw HypothesisNotDeclared("legendrian_simple flag not declared");
  if (!p.flags.uniformly_thick)
    throw HypothesisNotDeclared("uniformly_thick flag not declared");
  if (!p.flags.no_unoriented_symmetry)
    throw HypothesisNotDeclared("no_unoriented_symmetry flag not declared");
  if (winding_zero) {
    if (!p.flags.self_mirror)
      throw HypothesisNotDeclared("self_mirror flag not declared");
    if (!p.flags.oriented_symmetry)
      throw HypothesisNotDeclared("oriented_symmetry flag not declared");
  }
}

}  // namespace

ValleyData valleys(const KnotProfile &profile) {
  validate(profile);
  ValleyData v;
  const auto &rots = profile.peak_rots;
  for (std::size_t i = 1; i < rots.size(); ++i) {
    const long long gap = rots[i] - rots[i - 1];
    if (gap % 2 != 0)
      throw ParityViolation("adjacent peak rotations differ by an odd amount");
    v.depths.push_back(gap / 2);
  }
  v.count = static_cast<long long>(v.depths.size());
  v.max_depth = v.depths.empty()
                    ? 0
                    : *std::max_element(v.depths.begin(), v.depths.end());
  v.histogram.assign(static_cast<std::size_t>(v.max_depth) + 1, 0);
  for (std::size_t i = 0; i < v.depths.size(); ++i) {
    const long long rot = (rots[i] + rots[i + 1]) / 2;
    if (rot < 0) ++v.histogram[static_cast<std::size_t>(v.depths[i])];
  }
  return v;
}

// ---- Whitehead family class counts in the solid torus -----------------

namespace {

// Number of Legendrian classes of the Whitehead family with parameter M at
// relative invariants (t, r).
long long wh_count(long long M, long long t, long long r) {
  if (M >= 0 && M % 2 == 0) {
    const long long peak = 1 - M;
    if (!in_cone(peak, 0, t, r)) return 0;
    return t == peak ? 2 : 1;
  }
  if (M > 0) {  // odd: two peaks merging one stabilization down
    const long long peak = -M - 3;
    return (in_cone(peak, 1, t, r) || in_cone(peak, -1, t, r)) ? 1 : 0;
  }
  if (M % 2 == 0) {  // M < 0 even
    const long long L = -M / 2;
    if (!in_cone(1, 0, t, r)) return 0;
    const long long dt = 1 - t;
    const long long a1 = (dt + r) / 2, a2 = (dt - r) / 2;
    if (a1 == 0 && a2 == 0) return (L + 1) * (L + 1);
    if (a1 == 0 || a2 == 0) return L + 1;
    return 1;
  }
  // M < 0 odd
  if (!in_cone(-3, 0, t, r)) return 0;
  return t == -3 ? -M + 1 : 1;
}

// Strictly inside the cone(s) of the family: reachable from a peak with at
// least one stabilization of each sign.
bool wh_strict_interior(long long M, long long t, long long r) {
  if (M % 2 == 0) {
    const long long peak = (M >= 0) ? 1 - M : 1;
    return in_cone(peak - 2, 0, t, r);
  }
  const long long peak = (M > 0) ? -M - 3 : -3;
  if (M > 0)
    return in_cone(peak - 2, 1, t, r) || in_cone(peak - 2, -1, t, r);
  return in_cone(peak - 2, 0, t, r);
}

// Size of the image, inside the family M, of the (t,r)-classes of the
// family twisted d more times.  The maps are injective as long as the
// source family still has non-positive twisting; once the source turns
// positive its classes land in already-identified stabilized classes, and
// only the strictly interior part of its shadow contributes a new one.
long long wh_sigma_image(long long M, long long d, long long t, long long r) {
  const long long source = M + 2 * d;
  if (source <= 0) return wh_count(source, t, r);
  if (M >= 0) return wh_count(source, t, r) > 0 ? 1 : 0;
  return wh_strict_interior(source, t, r) ? 1 : 0;
}

long long wh_f_quotient(long long M, long long t, long long r) {
  const long long count = wh_count(M, t, r);
  if (count == 0) return 0;
  if (r != 0) return count;
  if (M < 0 && M % 2 == 0 && t == 1) {
    const long long L = -M / 2;
    return ((L + 1) * (L + 1) + 1) / 2;
  }
  if (M < 0 && M % 2 != 0 && t == -3) return (-M + 1) / 2;
  return 1;
}

// ---- Two-braid and cable family class counts ---------------------------

long long tb2_count(long long M, long long t, long long r) {
  if (M % 2 == 0) throw EvenM("2-braid family parameter must be odd");
  if (M > 0) return in_cone(M, 0, t, r) ? 1 : 0;
  // peaks at (2M, rho), rho = -|M|, -|M|+2, ..., |M|
  const long long dt = 2 * M - t;
  if (dt < 0) return 0;
  if (std::llabs(r) > -M + dt) return 0;
  if ((r - M - dt) % 2 != 0) return 0;
  return 1;
}

std::vector<long long> cable_peak_rots(long long p, long long q) {
  // p < 0, q >= 2: the maximal classes sit at the rotations below.
  const long long n = -p / q;  // floor(-p/q); q never divides p here
  std::vector<long long> rots;
  for (long long k = -n; k <= n; k += 2) {
    const long long v = p + q * (n + k);
    rots.push_back(v);
    rots.push_back(-v);
  }
  std::sort(rots.begin(), rots.end());
  rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
  return rots;
}

long long cable_count(long long p, long long q, long long t, long long r) {
  if (p > 0) return in_cone(p * q - p, 0, t, r) ? 1 : 0;
  if (p == 0 || q == 1) return in_cone(p * q, 0, t, r) ? 1 : 0;
  for (const long long rho : cable_peak_rots(p, q))
    if (in_cone(p * q, rho, t, r)) return 1;
  return 0;
}

}  // namespace

ClassTable pattern_table(const PatternSpec &spec) {
  ClassTable table;
  switch (spec.family) {
    case PatternSpec::Family::whitehead: {
      const long long M = spec.m;
      table.count = [M](long long t, long long r) { return wh_count(M, t, r); };
      table.sigma_image = [M](long long d, long long t, long long r) {
        return wh_sigma_image(M, d, t, r);
      };
      table.zeta_image = table.sigma_image;
      table.f_quotient = [M](long long t, long long r) {
        return wh_f_quotient(M, t, r);
      };
      break;
    }
    case PatternSpec::Family::two_braid: {
      const long long M = spec.m;
      table.count = [M](long long t, long long r) { return tb2_count(M, t, r); };
      table.sigma_image = [M](long long d, long long t, long long r) {
        return tb2_count(M + 2 * d, t, r);
      };
      table.zeta_image = table.sigma_image;
      table.f_quotient = table.count;
      break;
    }
    case PatternSpec::Family::cable: {
      const long long p = spec.p, q = spec.q;
      table.count = [p, q](long long t, long long r) {
        return cable_count(p, q, t, r);
      };
      table.sigma_image = [p, q](long long d, long long t, long long r) {
        return cable_count(p + d * q, q, t, r);
      };
      table.zeta_image = table.sigma_image;
      table.f_quotient = table.count;
      break;
    }
    case PatternSpec::Family::braid:
      throw UnsupportedFamily("no closed-form class table for braid patterns");
  }
  return table;
}

long long count_general(const KnotProfile &profile, const ClassTable &table,
                        long long winding, long long t, long long r) {
  require_flags(profile, winding == 0);
  const ValleyData v = valleys(profile);
  const long long k = v.count;
  long long total = 0;
  if (winding == 0) {
    total = ((k + 1) / 2) * table.count(t, r);
    if (k % 2 == 0) total += table.f_quotient(t, r);
    for (long long d = 1; d <= v.max_depth; ++d) {
      const long long nd = v.histogram[static_cast<std::size_t>(d)];
      if (nd > 0) total -= nd * table.sigma_image(d, t, r);
    }
  } else {
    const long long n = winding, tbar = profile.t_bar;
    for (const long long ri : profile.peak_rots)
      total += table.count(t - n * n * tbar, r - n * ri);
    for (std::size_t i = 0; i + 1 < profile.peak_rots.size(); ++i) {
      const long long d = v.depths[i];
      const long long vt = tbar - d;
      const long long vr = (profile.peak_rots[i] + profile.peak_rots[i + 1]) / 2;
      total -= table.sigma_image(d, t - n * n * vt, r - n * vr);
    }
  }
  if (total < 0)
    throw TableInconsistency("negative class count from table and profile");
  return total;
}

// ---- Closed-form mountain ranges ---------------------------------------

namespace {

// Sum of the negative-valley histogram over depths lo..hi.
long long nd_sum(const ValleyData &v, long long lo, long long hi) {
  long long s = 0;
  for (long long d = std::max<long long>(lo, 1);
       d <= std::min(hi, v.max_depth); ++d)
    s += v.histogram[static_cast<std::size_t>(d)];
  return s;
}

long long nd_at(const ValleyData &v, long long d) {
  return (d >= 1 && d <= v.max_depth) ? v.histogram[static_cast<std::size_t>(d)]
                                      : 0;
}

void add_entry(MountainRange &range, long long t, long long r,
               long long count) {
  if (count < 0)
    throw TableInconsistency("negative count in closed-form range");
  if (count > 0) range.entries[{t, r}] = count;
}

// Whitehead-double count at (t, r), by the four twist-parity cases.
long long whd_count(const KnotProfile &profile, const ValleyData &v,
                    long long m, long long t, long long r) {
  const long long tbar = profile.t_bar;
  const long long k = v.count;
  const long long half = ceil_half(k + 1);
  if (m >= 2 * tbar && m % 2 == 0) {
    const long long T = 2 * tbar - m + 1;
    if (!in_cone(T, 0, t, r)) return 0;
    if (t == T) return k + 1;
    const long long dt = T - t;
    const long long h = std::min((dt + r) / 2, (dt - r) / 2);
    return half - nd_sum(v, 1, h);
  }
  if (m > 2 * tbar) {  // odd
    const long long T = 2 * tbar - m - 3;
    long long best = -1;
    for (const long long rho : {1LL, -1LL})
      if (in_cone(T, rho, t, r))
        best = std::max(best, ((T - t) - std::llabs(r - rho)) / 2);
    if (best < 0) return 0;
    return half - nd_sum(v, 1, best);
  }
  if (m % 2 != 0) {  // m < 2 tbar odd
    const long long lam = 2 * tbar - m, lp = (lam - 1) / 2;
    if (!in_cone(-3, 0, t, r)) return 0;
    if (t == -3) {
      long long s = (k + 1) * ((lam + 1) / 2);
      for (long long d = 1; d <= lp; ++d)
        s -= nd_at(v, d) * (lam - 2 * d + 1);
      return s;
    }
    const long long dt = -3 - t;
    long long reach = 0;
    for (const long long rho : {1LL, -1LL}) {
      const long long dr = std::llabs(r - rho);
      if (dr <= dt - 1) reach = std::max(reach, (dt - 1 - dr) / 2);
    }
    return half - nd_sum(v, 1, lp) - nd_sum(v, lp + 1, lp + reach);
  }
  // m < 2 tbar even
  const long long L = (2 * tbar - m) / 2;
  if (!in_cone(1, 0, t, r)) return 0;
  const long long dt = 1 - t;
  const long long a1 = (dt + r) / 2, a2 = (dt - r) / 2;
  if (a1 == 0 && a2 == 0) {
    long long s = ((k + 1) * (L + 1) * (L + 1) + 1) / 2;
    for (long long d = 1; d <= L - 1; ++d)
      s -= nd_at(v, d) * (L - d + 1) * (L - d + 1);
    return s - 2 * nd_at(v, L);
  }
  if (a1 == 0 || a2 == 0) {
    long long s = half * (L + 1);
    for (long long d = 1; d <= L; ++d) s -= nd_at(v, d) * (L - d + 1);
    return s;
  }
  return half - nd_sum(v, 1, L) -
         nd_sum(v, L + 1, L + std::min(a1, a2) - 1);
}

long long whd_max_tb(long long tbar, long long m) {
  if (m % 2 == 0) return m >= 2 * tbar ? 2 * tbar - m + 1 : 1;
  return m > 2 * tbar ? 2 * tbar - m - 3 : -3;
}

}  // namespace

MountainRange range_whitehead_double(const KnotProfile &profile, long long m,
                                     int rows) {
  require_flags(profile, true);
  const ValleyData v = valleys(profile);
  MountainRange range;
  range.kind = MountainRange::Kind::legendrian;
  range.max_tb = whd_max_tb(profile.t_bar, m);
  for (long long t = range.max_tb; t > range.max_tb - rows; --t) {
    const long long span = range.max_tb - t + 1;
    for (long long r = -span; r <= span; ++r)
      add_entry(range, t, r, whd_count(profile, v, m, t, r));
  }
  return range;
}

MountainRange range_two_braid_satellite(const KnotProfile &profile,
                                        long long m, int rows) {
  require_flags(profile, false);
  if (m % 2 == 0) throw EvenM("2-braid satellite needs an odd twist count");
  const long long tbar = profile.t_bar;
  std::set<long long> peak_rots;
  MountainRange range;
  range.kind = MountainRange::Kind::legendrian;
  if (m > 2 * tbar) {
    range.max_tb = 2 * tbar + m;
    for (const long long ri : profile.peak_rots) peak_rots.insert(2 * ri);
  } else {
    range.max_tb = 2 * m;
    const long long lam = 2 * tbar - m;
    for (const long long ri : profile.peak_rots)
      for (long long l = 0; l <= lam; ++l)
        peak_rots.insert(2 * ri - lam + 2 * l);
  }
  // Legendrian simple: count one inside the union of stabilization cones.
  for (long long t = range.max_tb; t > range.max_tb - rows; --t) {
    const long long dt = range.max_tb - t;
    for (long long rho : peak_rots)
      for (long long r = rho - dt; r <= rho + dt; r += 2)
        range.entries[{t, r}] = 1;
  }
  return range;
}

MountainRange range_cable(const KnotProfile &profile, long long p,
                          long long q, int rows) {
  require_flags(profile, false);
  if (q < 1 || std::gcd(p, q) != 1)
    throw DomainError("cable range needs coprime p, q with q >= 1");
  const long long tbar = profile.t_bar;
  MountainRange range;
  range.kind = MountainRange::Kind::legendrian;
  std::set<long long> peak_rots;
  if (p > tbar * q) {
    range.max_tb = p * q - p + tbar * q;
    for (const long long ri : profile.peak_rots) peak_rots.insert(q * ri);
  } else {
    // Sufficiently negative framed slope: the twisted pattern carries the
    // maximal classes.
    if (q == 1)
      throw DomainError(
          "(p,1)-cables below the maximal slope are not honest satellites");
    range.max_tb = p * q;
    const long long pt = p - tbar * q;  // twisted slope numerator, < 0
    const long long n = -pt / q;
    const long long base = pt + n * q;
    for (const long long rho : rotations_at_depth(profile, n)) {
      peak_rots.insert(q * rho + base);
      peak_rots.insert(-(q * rho + base));
    }
  }
  for (long long t = range.max_tb; t > range.max_tb - rows; --t) {
    const long long dt = range.max_tb - t;
    for (long long rho : peak_rots)
      for (long long r = rho - dt; r <= rho + dt; r += 2)
        range.entries[{t, r}] = 1;
  }
  return range;
}

MountainRange transverse_whitehead_double(const KnotProfile &profile,
                                          long long m, int rows) {
  require_flags(profile, true);
  const ValleyData v = valleys(profile);
  const long long tbar = profile.t_bar;
  const long long k = v.count;
  const long long half = ceil_half(k + 1);
  MountainRange range;
  range.kind = MountainRange::Kind::transverse;
  std::function<long long(long long)> count_at;  // argument: levels below max
  if (m >= 2 * tbar && m % 2 == 0) {
    range.max_tb = 2 * tbar - m + 1;
    count_at = [&](long long a) { return half - nd_sum(v, 1, a); };
  } else if (m > 2 * tbar) {
    range.max_tb = 2 * tbar - m - 2;
    count_at = [&](long long a) { return half - nd_sum(v, 1, a); };
  } else if (m % 2 != 0) {
    // The bounds below are pinned to the negative-stabilization-ray limits
    // of the Legendrian ranges, which the mountain-range figures fix.
    range.max_tb = -3;
    const long long lp = (2 * tbar - m - 1) / 2;
    count_at = [&, lp](long long a) {
      return half - nd_sum(v, 1, lp) - nd_sum(v, lp + 1, lp + a);
    };
  } else {
    range.max_tb = 1;
    const long long L = (2 * tbar - m) / 2;
    count_at = [&, L](long long a) {
      if (a == 0) {
        long long s = half * (L + 1);
        for (long long d = 1; d <= L; ++d) s -= nd_at(v, d) * (L - d + 1);
        return s;
      }
      return half - nd_sum(v, 1, L) - nd_sum(v, L + 1, L + a - 1);
    };
  }
  for (long long a = 0; a < rows; ++a)
    add_entry(range, range.max_tb - 2 * a, 0, count_at(a));
  return range;
}

std::pair<long long, bool> transverse_braid_satellite(
    const KnotProfile &profile, const BraidWord &w) {
  validate(profile);
  if (!profile.flags.uniformly_thick)
    throw HypothesisNotDeclared("uniformly_thick flag not declared");
  if (!profile.flags.legendrian_simple)
    throw HypothesisNotDeclared("legendrian_simple flag not declared");
  if (closure_components(w) != 1)
    throw DomainError("braid pattern closure must be a knot");
  const long long n = w.strands;
  const long long r0 = profile.peak_rots.front();
  // Maximal self-linking of the twisted pattern is its writhe; the peak
  // with the smallest rotation number carries the maximum.
  const long long sl = n * n * profile.t_bar - n * r0 + writhe(w) -
                       profile.t_bar * n * (n - 1);
  return {sl, true};
}

std::string render(const MountainRange &range) {
  std::ostringstream os;
  if (range.entries.empty()) return os.str();
  if (range.kind == MountainRange::Kind::transverse) {
    for (auto it = range.entries.rbegin(); it != range.entries.rend(); ++it)
      os << it->first.first << ": " << it->second << '\n';
    return os.str();
  }
  long long tmin = range.max_tb, rmin = 0, rmax = 0;
  long long widest = 1;
  for (const auto &[key, count] : range.entries) {
    tmin = std::min(tmin, key.first);
    rmin = std::min(rmin, key.second);
    rmax = std::max(rmax, key.second);
    widest = std::max<long long>(widest,
                                 static_cast<long long>(std::to_string(count).size()));
  }
  for (long long t = range.max_tb; t >= tmin; --t) {
    std::string line;
    for (long long r = rmin; r <= rmax; ++r) {
      std::string cell(static_cast<std::size_t>(widest), ' ');
      const auto it = range.entries.find({t, r});
      if (it != range.entries.end()) {
        const std::string s = std::to_string(it->second);
        cell = std::string(static_cast<std::size_t>(widest) - s.size(), ' ') + s;
      }
      if (r > rmin) line += ' ';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace legsat
