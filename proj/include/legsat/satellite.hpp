#ifndef LEGSAT_SATELLITE_HPP_
#define LEGSAT_SATELLITE_HPP_

// Satellite-invariant layer: classical invariants of satellites, census
// composition, the full-twist action on pattern families, self-linking,
// and maximal-tb computation over a companion profile.

#include <utility>

#include "legsat/braid.hpp"
#include "legsat/errors.hpp"
#include "legsat/profile.hpp"
#include "legsat/tangle.hpp"

namespace legsat {

struct PatternSpec {
  enum class Family { braid, two_braid, cable, whitehead };
  Family family = Family::braid;
  BraidWord word;          // braid family
  long long m = 0;         // two_braid (odd) and whitehead families
  long long p = 0, q = 1;  // cable family, gcd(p,q) = 1, q >= 1
};

// Constructors validate family invariants: the braid closure must be a
// knot, two-braid twists must be odd, cable parameters coprime with q
// normalized positive.
PatternSpec braid_pattern(const BraidWord &w);
PatternSpec two_braid_pattern(long long m);
PatternSpec cable_pattern(long long p, long long q);
PatternSpec whitehead_pattern(long long m);

long long winding(const PatternSpec &spec);

struct PatternInvariants {
  long long winding = 0;
  long long reltb = 0;
  long long relrot = 0;
};

struct CompanionInvariants {
  long long tb = 0;
  long long rot = 0;
};

// tb = n^2 tb(L) + reltb, rot = n rot(L) + relrot.
std::pair<long long, long long> satellite_classical(
    const PatternInvariants &pat, const CompanionInvariants &comp);

// Cusp/crossing census of the satellite front built by inserting the
// pattern into wp positive and wm negative parallel copies of the
// companion front.
DiagramStats compose_stats(const DiagramStats &pat, const DiagramStats &comp);

long long self_linking(long long tb, long long rot);

// (n^2 tb - n rot) - relsl, evaluated exactly as stated.
long long transverse_satellite_sl(long long n, long long tb, long long rot,
                                  long long relsl);

// The full-twist action Delta^k on each family.
PatternSpec twist_pattern(const PatternSpec &spec, long long k);

// Maximal relative Thurston-Bennequin number of the pattern in the solid
// torus.  Braid patterns must be positive words.
long long pattern_max_reltb(const PatternSpec &spec);

// n^2 t_bar + max reltb of the pattern twisted by -t_bar.  Requires the
// uniformly-thick flag.
long long max_tb_satellite(const KnotProfile &profile,
                           const PatternSpec &spec);

}  // namespace legsat

#endif  // LEGSAT_SATELLITE_HPP_
