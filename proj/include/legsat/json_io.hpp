#ifndef LEGSAT_JSON_IO_HPP_
#define LEGSAT_JSON_IO_HPP_

// JSON wire formats for braid words, Legendrian words, pattern specs,
// profiles, mountain ranges and oracle censuses.

#include <string>
#include <vector>

#include "json.hpp"
#include "legsat/atlas.hpp"
#include "legsat/braid.hpp"
#include "legsat/profile.hpp"
#include "legsat/rewrite.hpp"
#include "legsat/satellite.hpp"
#include "legsat/tangle.hpp"

namespace legsat {

using Json = nlohmann::ordered_json;

// {"n": 3, "word": [1, -2, 1]}
Json braid_to_json(const BraidWord &w);
BraidWord braid_from_json(const Json &j);

// {"n": 2, "orient": [1, 1], "closed": false, "blocks": ["X0", "S"]}
Json legword_to_json(const LegWord &w);
LegWord legword_from_json(const Json &j);

// {"family": "whitehead", "m": -80} | {"family": "cable", "p": -5, "q": 3}
// | {"family": "two_braid", "m": -3} | {"family": "braid", "n": 2,
//   "word": [1, 1, 1]}
Json pattern_to_json(const PatternSpec &spec);
PatternSpec pattern_from_json(const Json &j);

Json profile_to_json(const KnotProfile &p);
KnotProfile profile_from_json(const Json &j);

// {"kind": "legendrian", "max_tb": 1,
//  "entries": [{"tb": 1, "rot": 0, "count": 12}, ...]}; transverse ranges
// use "max_sl" and "sl" keys.
Json range_to_json(const MountainRange &r);
MountainRange range_from_json(const Json &j);

Json census_to_json(long long m, const std::vector<WordClass> &classes);

}  // namespace legsat

#endif  // LEGSAT_JSON_IO_HPP_
