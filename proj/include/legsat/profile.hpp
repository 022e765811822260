#ifndef LEGSAT_PROFILE_HPP_
#define LEGSAT_PROFILE_HPP_

// Companion knot profiles: the peak data of a knot type's Legendrian
// mountain range plus the hypothesis flags the counting theorems need.
// Profiles are inputs; nothing here is computed from a knot diagram.

#include <string>
#include <vector>

#include "legsat/errors.hpp"

namespace legsat {

struct KnotProfile {
  std::string name;
  long long t_bar = 0;                // maximal Thurston-Bennequin number
  std::vector<long long> peak_rots;   // strictly increasing
  struct Flags {
    bool legendrian_simple = false;
    bool uniformly_thick = false;
    bool self_mirror = false;             // K = -K
    bool no_unoriented_symmetry = false;
    bool oriented_symmetry = false;
  } flags;
};

void validate(const KnotProfile &p);

// Bundled example: the (-13,3) torus knot.
KnotProfile torus_13_3_profile();

// Rotation numbers realized at tb = t_bar - depth for a Legendrian-simple
// profile: the union over peaks of {r_i - depth, r_i - depth + 2, ...,
// r_i + depth}, deduplicated and sorted.
std::vector<long long> rotations_at_depth(const KnotProfile &p,
                                          long long depth);

}  // namespace legsat

#endif  // LEGSAT_PROFILE_HPP_
