#ifndef LEGSAT_REWRITE_HPP_
#define LEGSAT_REWRITE_HPP_

// Relation engine and brute-force classification oracles.  Words are
// strings over a small fixed alphabet; classes are computed by BFS closure
// under bidirectional, length-preserving rules plus an optional cyclic
// rotation (with or without a sign flip on the wrapped letter).

#include <cstddef>
#include <string>
#include <vector>

#include "legsat/braid.hpp"
#include "legsat/errors.hpp"

namespace legsat {

// Letter encoding, in canonical order: Z+ < Z- < S+ < S- < X0 < X1 < ...
namespace letters {
inline constexpr char Zp = 0;
inline constexpr char Zm = 1;
inline constexpr char Sp = 2;
inline constexpr char Sm = 3;
inline constexpr char X0 = 4;
}  // namespace letters

using RWord = std::string;

std::string word_tokens(const RWord &w);
RWord word_from_tokens(const std::string &tokens);

struct RewriteRule {
  RWord lhs, rhs;  // bidirectional; both sides must have equal length
};

struct RelationSet {
  std::vector<RewriteRule> rules;
  bool cyclic = false;
  // When rotating, flip the sign of the wrapped letter (signed letters
  // only); models moves that pass through a clasp of odd parity.
  bool sign_flip_on_wrap = false;
};

struct WordClass {
  RWord canonical;  // lexicographically least reachable word
  std::size_t size = 0;
  std::vector<long long> tag;  // family-specific invariant
};

// BFS closure of `word` under the relation set.  Throws BudgetExhausted if
// more than `budget` words are visited.
WordClass class_of(const RWord &word, const RelationSet &rel,
                   std::size_t budget = 1000000);

// Partition of a finite universe into classes; classes are returned sorted
// by canonical representative, so the census is deterministic.
std::vector<WordClass> partition_classes(const std::vector<RWord> &universe,
                                         const RelationSet &rel,
                                         std::size_t budget = 1000000);

// ---- Family oracles ----------------------------------------------------

// Relations for Whitehead twist-box words: the two triple exchanges, plus
// rotation (sign-preserving for even box length, sign-flipping for odd).
// Positive/negative stabilizations add the single-letter trades Z+<->S+
// and Z-<->S-.
RelationSet whitehead_relations(bool even_length, int pos_stab, int neg_stab);

// All alternating-sign words of length |m| over {Z+,Z-,S+,S-} partitioned
// by the relations; tags are (z+, z-) for even m and (z) for odd m.
std::vector<WordClass> whitehead_classes(long long m,
                                         std::size_t budget = 1000000);
std::vector<WordClass> stabilized_classes(long long m, int pos_stab,
                                          int neg_stab,
                                          std::size_t budget = 1000000);

// 2-braid patterns: words of length |m| over {S, Z} (encoded Z+, S+) under
// cyclic rotation and the unsigned triple exchanges; tag is (z).
std::vector<WordClass> two_braid_classes(long long m,
                                         std::size_t budget = 1000000);

// Number of classes of X-letter words whose underlying braid is
// positive-monoid-equivalent (open) or cyclic-plus-relations conjugate
// (closed) to w, under the Artin relations realized as X-word moves.
long long positive_leg_classes(const BraidWord &w, bool closed,
                               std::size_t budget = 1000000);

}  // namespace legsat

#endif  // LEGSAT_REWRITE_HPP_
