#include "legsat/profile.hpp"

#include <algorithm>
#include <set>

namespace legsat {

void validate(const KnotProfile &p) {
  if (p.peak_rots.empty())
    throw DomainError("profile needs at least one peak rotation number");
  for (std::size_t i = 0; i + 1 < p.peak_rots.size(); ++i)
    if (p.peak_rots[i] >= p.peak_rots[i + 1])
      throw DomainError("peak rotation numbers must be strictly increasing");
  if (p.flags.self_mirror) {
    const std::size_t n = p.peak_rots.size();
    for (std::size_t i = 0; i < n; ++i)
      if (p.peak_rots[i] != -p.peak_rots[n - 1 - i])
        throw DomainError("self-mirror profile needs peaks symmetric about 0");
  }
}

KnotProfile torus_13_3_profile() {
  KnotProfile p;
  p.name = "T(-13,3)";
  p.t_bar = -39;
  p.peak_rots = {-10, -8, -4, -2, 2, 4, 8, 10};
  p.flags = {true, true, true, true, true};
  return p;
}

std::vector<long long> rotations_at_depth(const KnotProfile &p,
                                          long long depth) {
  validate(p);
  if (depth < 0) throw DomainError("depth must be >= 0");
  std::set<long long> rots;
  for (long long r : p.peak_rots)
    for (long long s = -depth; s <= depth; s += 2) rots.insert(r + s);
  return {rots.begin(), rots.end()};
}

}  // namespace legsat
