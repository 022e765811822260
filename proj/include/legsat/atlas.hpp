#ifndef LEGSAT_ATLAS_HPP_
#define LEGSAT_ATLAS_HPP_

// Classification layer: valley structure of companion profiles, per-family
// class tables, the general satellite counting engine, the closed-form
// mountain-range generators (Legendrian and transverse), and a text
// renderer.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "legsat/braid.hpp"
#include "legsat/profile.hpp"
#include "legsat/satellite.hpp"

namespace legsat {

struct ValleyData {
  std::vector<long long> depths;     // depth between consecutive peaks
  std::vector<long long> histogram;  // histogram[d] = number of depth-d
                                     // valleys at negative rotation
  long long max_depth = 0;           // deepest valley
  long long count = 0;               // total number of valleys
};

ValleyData valleys(const KnotProfile &profile);

// Closed-form class data for one pattern family, already twisted into the
// frame the caller wants to count in.  count(t,r) is the number of
// Legendrian classes of the family at the given relative invariants;
// sigma_image/zeta_image(d,t,r) give the size of the image of the depth-d
// further-twisted family's (t,r)-classes inside this family; f_quotient is
// the class count modulo the orientation-reversing symmetry of the solid
// torus.
struct ClassTable {
  std::function<long long(long long, long long)> count;
  std::function<long long(long long, long long, long long)> sigma_image;
  std::function<long long(long long, long long, long long)> zeta_image;
  std::function<long long(long long, long long)> f_quotient;
};

// Tables exist for the two-braid, cable and Whitehead families; braid
// patterns have no closed-form table.
ClassTable pattern_table(const PatternSpec &spec);

// Number of Legendrian representatives of the satellite with invariants
// (t, r), computed from the companion profile and the class table of the
// pattern twisted by -t_bar.  Requires the hypothesis flags; for winding
// zero additionally self_mirror and oriented_symmetry.
long long count_general(const KnotProfile &profile, const ClassTable &table,
                        long long winding, long long t, long long r);

struct MountainRange {
  enum class Kind { legendrian, transverse };
  Kind kind = Kind::legendrian;
  long long max_tb = 0;  // maximal tb, or maximal sl for transverse kind
  // (tb, rot) -> count; transverse ranges key on (sl, 0).
  std::map<std::pair<long long, long long>, long long> entries;
};

MountainRange range_whitehead_double(const KnotProfile &profile, long long m,
                                     int rows = 6);
MountainRange range_two_braid_satellite(const KnotProfile &profile,
                                        long long m, int rows = 6);
MountainRange range_cable(const KnotProfile &profile, long long p,
                          long long q, int rows = 6);
MountainRange transverse_whitehead_double(const KnotProfile &profile,
                                          long long m, int rows = 6);

// Maximal self-linking number of the braid satellite, and transverse
// simplicity (always true in this regime).
std::pair<long long, bool> transverse_braid_satellite(
    const KnotProfile &profile, const BraidWord &w);

// Fixed-width grid, rows tb descending, columns rot ascending; transverse
// ranges print one "sl: count" line per level.
std::string render(const MountainRange &range);

}  // namespace legsat

#endif  // LEGSAT_ATLAS_HPP_
