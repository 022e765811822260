#ifndef LEGSAT_BRAID_HPP_
#define LEGSAT_BRAID_HPP_

// Smooth braid-word layer: Artin words on n strands, writhe, permutations,
// full twists, and desk-scale word problems for the positive monoid and
// (with a budget) the braid group.

#include <cstddef>
#include <vector>

#include "legsat/errors.hpp"

namespace legsat {

struct BraidLetter {
  int index;  // 1 <= index <= n-1, the Artin generator number
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter &a, const BraidLetter &b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord &a, const BraidWord &b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

// Builds a word from signed generator numbers, e.g. {1, -2, 1} in B_3.
// Throws StrandMismatch if a generator is out of range.
BraidWord make_braid(int strands, const std::vector<int> &signed_letters);

bool is_positive(const BraidWord &w);

// Algebraic length: the sum of the letter signs.
long long writhe(const BraidWord &w);

// ((sigma_1 ... sigma_{n-1})^n)^k, with inverse letters for k < 0.
BraidWord full_twist(int strands, int k);

BraidWord concat(BraidWord a, const BraidWord &b);
BraidWord inverse(const BraidWord &w);
BraidWord rotated(const BraidWord &w, int by);

// perm[s] = position where the strand entering at height s exits.
std::vector<int> underlying_permutation(const BraidWord &w);

// Number of cycles of the underlying permutation, i.e. the number of
// components of the closure of w.
int closure_components(const BraidWord &w);

// Positive-monoid equality by exhaustive bidirectional rewriting with the
// two Artin relations.  The relations preserve length, so the reachable set
// is finite; `budget` caps the number of visited words.
bool positive_monoid_equivalent(const BraidWord &a, const BraidWord &b,
                                std::size_t budget = 1000000);

// Same reachability closure, exposed so callers can inspect whole classes.
// With `cyclic` set, cyclic rotations are added to the move set, which for
// positive words captures equality of the closed-up braids in the solid
// torus.
std::vector<BraidWord> positive_class(const BraidWord &w, bool cyclic,
                                      std::size_t budget = 1000000);

enum class GroupEq { equal, distinct, budget_exhausted };

// Desk-scale helper for braid-group equality: BFS with free reduction,
// both braid relations in all sign patterns, and bounded-length insertion
// of cancelling pairs.  `length_budget` caps intermediate word length.
GroupEq group_equal(const BraidWord &a, const BraidWord &b,
                    std::size_t length_budget, std::size_t node_budget = 200000);

}  // namespace legsat

#endif  // LEGSAT_BRAID_HPP_
