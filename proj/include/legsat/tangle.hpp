#ifndef LEGSAT_TANGLE_HPP_
#define LEGSAT_TANGLE_HPP_

// Front-projection layer: Legendrian block words with strand orientations,
// cusp/crossing censuses, relative classical invariants, normal-form
// expansion of the generalized blocks, and the zeta/sigma prefix calculus.

#include <string>
#include <utility>
#include <vector>

#include "legsat/braid.hpp"
#include "legsat/errors.hpp"

namespace legsat {

// Basic blocks of a Legendrian braid front.  Strand heights run bottom-up
// from 0.  X(i) is a single positive crossing of heights i and i+1.  S is
// the full-width block whose bottom strand loops (two cusps) under the
// others and exits at the top; Z is its mirror, the top strand looping down
// to the bottom.  The generalized blocks move a k-strand bundle past an
// l-strand bundle starting at height i.
enum class BlockKind { X, S, Z, Xgen, Sgen, Zgen };

struct Block {
  BlockKind kind;
  int pos = 0;  // X: lower height of the crossing; generalized: bundle base
  int k = 1, l = 1;

  friend bool operator==(const Block &a, const Block &b) {
    return a.kind == b.kind && a.pos == b.pos && a.k == b.k && a.l == b.l;
  }
};

Block xb(int i);
Block sb();
Block zb();
Block xgen(int i, int k, int l);
Block sgen(int i, int k, int l);
Block zgen(int i, int k, int l);

// Cusp/crossing census of a front, from which the classical invariants
// derive.  wp/wm count strands oriented with/against the longitude.
struct DiagramStats {
  long long u = 0, d = 0, c = 0;    // up cusps, down cusps, total cusps
  long long xp = 0, xm = 0;         // positive / negative crossings
  long long wp = 0, wm = 0;

  DiagramStats &operator+=(const DiagramStats &o);
  friend DiagramStats operator+(DiagramStats a, const DiagramStats &b) {
    return a += b;
  }
  friend bool operator==(const DiagramStats &a, const DiagramStats &b) {
    return a.u == b.u && a.d == b.d && a.c == b.c && a.xp == b.xp &&
           a.xm == b.xm && a.wp == b.wp && a.wm == b.wm;
  }
};

// writhe - c/2 and (d - u)/2.  Block-built fronts always have even c and
// even d-u, so both are integers.
long long stats_reltb(const DiagramStats &s);
long long stats_relrot(const DiagramStats &s);

struct LegWord {
  int strands = 1;
  std::vector<int> orientation;  // +1/-1 per strand at the left boundary
  bool closed = false;
  std::vector<Block> blocks;
};

LegWord parallel_word(int strands, std::vector<Block> blocks,
                      bool closed = false);

void validate(const LegWord &w);

// perm[s] = exit height of the strand entering at height s.
std::vector<int> block_permutation(const Block &b, int strands);
std::vector<int> word_permutation(const LegWord &w);

// Census of one block given the orientations of the strands entering it.
// Crossing signs follow the skein rule: braid-letter sign times the product
// of the two strand directions.  Generalized S/Z blocks are measured via
// their normal-form expansion.
DiagramStats block_stats(const Block &b, int strands,
                         const std::vector<int> &orient_in);

// Expansion of a generalized block into basic X/S/Z blocks; basic blocks
// expand to themselves.
std::vector<Block> expand_block(const Block &b, int strands);

LegWord simplify(const LegWord &w);

DiagramStats word_stats(const LegWord &w);

// (reltb, relrot) of the word.
std::pair<long long, long long> word_invariants(const LegWord &w);

// X(i) -> sigma_{i+1}; S and Z both map to the fixed negative word
// sigma_{n-1}^{-1} ... sigma_1^{-1}.  S and Z share one smooth word by
// convention; they differ only by cusp orientation in the front.
BraidWord underlying_braid(const LegWord &w);

// Prepends z copies of Z and then s copies of S.  Open words only.
LegWord prefix_zeta_sigma(const LegWord &w, int z, int s);

struct ZetaSigmaFactor {
  int z = 0, s = 0;
  LegWord rest;
};

// Greedy factorization of a leading Z^z S^s prefix.
ZetaSigmaFactor factor_zeta_sigma(const LegWord &w);

// ---- Oriented letters on two anti-parallel strands -------------------

// The four oriented basic letters of a winding-zero two-strand word.  The
// superscript is the sign of the letter's relrot contribution.
enum class OrientedLetter { Zp, Zm, Sp, Sm };

DiagramStats oriented_letter_stats(OrientedLetter l);

// The clasp census closing a twist box off into a Whitehead-type pattern.
// Its shape depends on the parity of the number of half twists; for odd
// parity, cusp_orient picks the cusp orientation (+1 or -1) of the pair.
DiagramStats clasp_stats(bool even_twists, int cusp_orient);

// (reltb, relrot) of the assembled Whitehead pattern with m half twists.
// For m >= 0 the box holds m crossings and `orient` selects one of the two
// strand orientations; for m < 0 the box is the given letter word (length
// |m|, alternating superscripts) and `orient` is ignored.
std::pair<long long, long long> whitehead_invariants(
    int m, const std::vector<OrientedLetter> &box, int orient = 1);

// ---- Block token strings ---------------------------------------------

std::string block_token(const Block &b);
Block block_from_token(const std::string &token);

}  // namespace legsat

#endif  // LEGSAT_TANGLE_HPP_
