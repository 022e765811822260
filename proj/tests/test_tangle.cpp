#include <array>
#include <random>

#include "doctest.h"
#include "legsat/tangle.hpp"

using namespace legsat;

namespace {

LegWord open_word(int n, std::vector<Block> blocks,
                  std::vector<int> orient = {}) {
  LegWord w;
  w.strands = n;
  w.orientation = orient.empty() ? std::vector<int>(n, 1) : orient;
  w.closed = false;
  w.blocks = std::move(blocks);
  validate(w);
  return w;
}

}  // namespace

TEST_CASE("block censuses on two strands") {
  // X(0) with parallel strands: one positive crossing, no cusps.
  DiagramStats x = block_stats(xb(0), 2, {1, 1});
  CHECK(x == DiagramStats{0, 0, 0, 1, 0, 0, 0});

  // S with parallel strands: the unique census with reltb=-2, relrot=-1,
  // two cusps and one crossing, found by brute force over censuses.
  DiagramStats expected_s;
  int matches = 0;
  for (long long u = 0; u <= 2; ++u)
    for (long long xp = 0; xp <= 1; ++xp) {
      DiagramStats cand;
      cand.u = u;
      cand.d = 2 - u;
      cand.c = 2;
      cand.xp = xp;
      cand.xm = 1 - xp;
      if (stats_reltb(cand) == -2 && stats_relrot(cand) == -1) {
        expected_s = cand;
        ++matches;
      }
    }
  REQUIRE(matches == 1);
  CHECK(block_stats(sb(), 2, {1, 1}) == expected_s);

  // Anti-parallel strands flip the crossing sign.
  DiagramStats xa = block_stats(xb(0), 2, {1, -1});
  CHECK(xa == DiagramStats{0, 0, 0, 0, 1, 0, 0});
}

TEST_CASE("Z census mirrors S") {
  const auto z = block_stats(zb(), 2, {1, 1});
  CHECK(stats_reltb(z) == -2);
  CHECK(stats_relrot(z) == 1);
  const auto zn = block_stats(zb(), 3, {1, 1, 1});
  CHECK(stats_reltb(zn) == -3);
  CHECK(stats_relrot(zn) == 1);
}

TEST_CASE("word invariants") {
  const auto xxx = open_word(2, {xb(0), xb(0), xb(0)});
  CHECK(word_invariants(xxx) == std::pair<long long, long long>{3, 0});

  CHECK(word_invariants(open_word(3, {})) ==
        std::pair<long long, long long>{0, 0});

  LegWord sz = open_word(2, {sb(), zb()});
  sz.closed = true;
  validate(sz);
  CHECK(word_invariants(sz) == std::pair<long long, long long>{-4, 0});
}

TEST_CASE("simplify expands generalized blocks") {
  const auto ex = expand_block(xgen(0, 2, 1), 3);
  REQUIRE(ex.size() == 2);
  CHECK(ex[0] == xb(1));
  CHECK(ex[1] == xb(0));
  CHECK(word_invariants(open_word(3, {xgen(0, 2, 1)})) ==
        std::pair<long long, long long>{2, 0});

  // S_0(1, n-1) is already the basic block.
  CHECK(expand_block(sgen(0, 1, 3), 4) == std::vector<Block>{sb()});

  // Z_0(2,1) on three strands: two loops plus compensating crossings.
  const auto zg = open_word(3, {zgen(0, 2, 1)});
  CHECK(word_invariants(zg).first == -4);
  CHECK(word_invariants(simplify(zg)) == word_invariants(zg));
  CHECK(word_stats(simplify(zg)) == word_stats(zg));
}

TEST_CASE("simplify preserves stats and permutation on generalized words") {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i + 2 <= n; ++i) {
      for (int k = 1; i + k + 1 <= n; ++k) {
        const int l = n - i - k;
        for (const Block &b : {xgen(i, k, l), sgen(i, k, l), zgen(i, k, l)}) {
          const auto w = open_word(n, {b});
          const auto sw = simplify(w);
          CHECK(word_stats(sw) == word_stats(w));
          CHECK(word_permutation(sw) == word_permutation(w));
        }
      }
    }
  }
  // Bundles land parallel: the generalized blocks swap the two bundles in
  // order.
  const auto perm = word_permutation(open_word(4, {sgen(1, 2, 1)}));
  CHECK(perm[0] == 0);  // spectator strand untouched
  CHECK(perm[1] == 2);  // loop bundle ends above the single strand
  CHECK(perm[2] == 3);
  CHECK(perm[3] == 1);
  CHECK(word_permutation(open_word(3, {zgen(0, 2, 1)})) ==
        std::vector<int>{2, 0, 1});
  CHECK(closure_components(underlying_braid(open_word(3, {zgen(0, 2, 1)}))) ==
        1);
}

TEST_CASE("underlying braid") {
  CHECK(underlying_braid(open_word(2, {xb(0), xb(0)})) ==
        make_braid(2, {1, 1}));
  CHECK(underlying_braid(open_word(2, {sb()})) == make_braid(2, {-1}));
  CHECK(underlying_braid(open_word(2, {zb(), sb()})) ==
        make_braid(2, {-1, -1}));
  CHECK(underlying_braid(open_word(3, {sb()})) == make_braid(3, {-2, -1}));
}

TEST_CASE("generalized X expansion matches the bundle braid word") {
  // Independent route: the l-bundle strands walk down through the k-bundle
  // one at a time.
  auto bundle_word = [](int n, int i, int k, int l) {
    std::vector<int> letters;
    for (int j = 0; j < l; ++j)
      for (int a = i + k - 1 + j; a >= i + j; --a) letters.push_back(a + 1);
    return make_braid(n, letters);
  };
  const std::vector<std::array<int, 4>> cases{
      {3, 0, 2, 1}, {4, 1, 2, 1}, {4, 0, 2, 2}, {4, 0, 3, 1}};
  for (const auto &[n, i, k, l] : cases) {
    const auto braid = underlying_braid(open_word(n, {xgen(i, k, l)}));
    CHECK(positive_monoid_equivalent(braid, bundle_word(n, i, k, l)));
  }
}

TEST_CASE("zeta sigma prefix") {
  const auto z1 = prefix_zeta_sigma(open_word(2, {}), 1, 0);
  CHECK(z1.blocks == std::vector<Block>{zb()});

  const auto ssxx = prefix_zeta_sigma(open_word(2, {xb(0), xb(0)}), 0, 2);
  CHECK(ssxx.blocks == std::vector<Block>{sb(), sb(), xb(0), xb(0)});
  CHECK(word_invariants(ssxx).first == -2);

  const auto szw = prefix_zeta_sigma(open_word(2, {zb()}), 0, 1);
  CHECK(word_invariants(szw).second == 0);

  LegWord closed = open_word(2, {xb(0), xb(0)});
  closed.closed = true;
  CHECK_THROWS_AS(prefix_zeta_sigma(closed, 1, 0), ClosedWord);
}

TEST_CASE("zeta sigma factorization") {
  const auto f1 = factor_zeta_sigma(open_word(2, {zb(), zb(), sb(), xb(0)}));
  CHECK(f1.z == 2);
  CHECK(f1.s == 1);
  CHECK(f1.rest.blocks == std::vector<Block>{xb(0)});

  const auto f2 = factor_zeta_sigma(open_word(2, {xb(0), zb()}));
  CHECK(f2.z == 0);
  CHECK(f2.s == 0);
  CHECK(f2.rest.blocks == std::vector<Block>{xb(0), zb()});

  const auto f3 = factor_zeta_sigma(open_word(2, {sb(), zb()}));
  CHECK(f3.z == 0);
  CHECK(f3.s == 1);
  CHECK(f3.rest.blocks == std::vector<Block>{zb()});
}

namespace {

std::mt19937 &rng() {
  static std::mt19937 gen(23);
  return gen;
}

LegWord random_open_word(int n, int len, std::vector<int> orient) {
  std::vector<Block> blocks;
  std::uniform_int_distribution<int> kind(0, 2 + (n >= 2 ? 1 : 0));
  std::uniform_int_distribution<int> height(0, std::max(0, n - 2));
  for (int i = 0; i < len; ++i) {
    switch (kind(rng())) {
      case 0:
        blocks.push_back(sb());
        break;
      case 1:
        blocks.push_back(zb());
        break;
      default:
        if (n >= 2)
          blocks.push_back(xb(height(rng())));
        else
          blocks.push_back(sb());
        break;
    }
  }
  LegWord w;
  w.strands = n;
  w.orientation = std::move(orient);
  w.blocks = std::move(blocks);
  validate(w);
  return w;
}

std::vector<int> permute_orientation(const std::vector<int> &orient,
                                     const std::vector<int> &perm) {
  std::vector<int> out(orient.size());
  for (std::size_t h = 0; h < orient.size(); ++h)
    out[static_cast<std::size_t>(perm[h])] = orient[h];
  return out;
}

}  // namespace

TEST_CASE("invariants are additive over concatenation") {
  std::uniform_int_distribution<int> dir(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<int> orient;
    for (int s = 0; s < n; ++s) orient.push_back(dir(rng()) ? 1 : -1);
    const auto w1 = random_open_word(n, 1 + trial % 5, orient);
    const auto mid = permute_orientation(orient, word_permutation(w1));
    const auto w2 = random_open_word(n, 1 + (trial / 2) % 5, mid);
    LegWord joined = w1;
    joined.blocks.insert(joined.blocks.end(), w2.blocks.begin(),
                         w2.blocks.end());
    const auto [t1, r1] = word_invariants(w1);
    const auto [t2, r2] = word_invariants(w2);
    const auto [t, r] = word_invariants(joined);
    CHECK(t == t1 + t2);
    CHECK(r == r1 + r2);
  }
}

TEST_CASE("closed word invariants are rotation invariant") {
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    LegWord w = random_open_word(n, 2 + trial % 5, std::vector<int>(n, 1));
    w.closed = true;
    validate(w);
    const auto base = word_invariants(w);
    LegWord rot = w;
    rot.orientation =
        permute_orientation(rot.orientation,
                            block_permutation(rot.blocks.front(), n));
    rot.blocks.push_back(rot.blocks.front());
    rot.blocks.erase(rot.blocks.begin());
    validate(rot);
    CHECK(word_invariants(rot) == base);
  }
}

TEST_CASE("prefix shifts invariants by (-n(z+s), z-s)") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const auto w = random_open_word(n, trial % 4, std::vector<int>(n, 1));
    const int z = trial % 3, s = (trial / 3) % 3;
    const auto [t0, r0] = word_invariants(w);
    const auto [t1, r1] = word_invariants(prefix_zeta_sigma(w, z, s));
    CHECK(t1 == t0 - static_cast<long long>(n) * (z + s));
    CHECK(r1 == r0 + z - s);
  }
}

TEST_CASE("factorization round-trips through prefix") {
  std::uniform_int_distribution<int> dir(0, 1);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<int> orient;
    for (int s = 0; s < n; ++s) orient.push_back(dir(rng()) ? 1 : -1);
    const auto w = random_open_word(n, 1 + trial % 6, orient);
    const auto f = factor_zeta_sigma(w);
    const auto back = prefix_zeta_sigma(f.rest, f.z, f.s);
    CHECK(back.blocks == w.blocks);
    CHECK(back.orientation == w.orientation);
  }
}

TEST_CASE("stabilization census deltas") {
  // St+ adds two down cusps, St- two up cusps: tb drops by one, rot moves
  // by +-1.
  DiagramStats base = word_stats(open_word(2, {xb(0), xb(0), xb(0)}));
  DiagramStats plus = base;
  plus.d += 2;
  plus.c += 2;
  DiagramStats minus = base;
  minus.u += 2;
  minus.c += 2;
  CHECK(stats_reltb(plus) == stats_reltb(base) - 1);
  CHECK(stats_relrot(plus) == stats_relrot(base) + 1);
  CHECK(stats_reltb(minus) == stats_reltb(base) - 1);
  CHECK(stats_relrot(minus) == stats_relrot(base) - 1);
}

TEST_CASE("whitehead representatives reproduce the four invariant pairs") {
  using OL = OrientedLetter;
  // m >= 0 even: (1-m, 0) for both orientations.
  for (int m : {0, 2, 4, 6}) {
    for (int orient : {1, -1}) {
      CHECK(whitehead_invariants(m, {}, orient) ==
            std::pair<long long, long long>{1 - m, 0});
    }
  }
  // m > 0 odd: (-m-3, +-1).
  for (int m : {1, 3, 5}) {
    CHECK(whitehead_invariants(m, {}, 1) ==
          std::pair<long long, long long>{-m - 3, 1});
    CHECK(whitehead_invariants(m, {}, -1) ==
          std::pair<long long, long long>{-m - 3, -1});
  }
  // m < 0: every alternating box word gives (-3, 0) for odd m and (1, 0)
  // for even m.
  for (int m : {-1, -2, -3, -4, -5, -6}) {
    const int len = -m;
    for (int start = 0; start < 2; ++start) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<OL> box;
        int sign = start == 0 ? 1 : -1;
        for (int i = 0; i < len; ++i) {
          const bool z = (mask >> i) & 1;
          box.push_back(z ? (sign > 0 ? OL::Zp : OL::Zm)
                          : (sign > 0 ? OL::Sp : OL::Sm));
          sign = -sign;
        }
        const auto inv = whitehead_invariants(m, box);
        if (len % 2 == 0) {
          CHECK(inv == std::pair<long long, long long>{1, 0});
        } else {
          CHECK(inv == std::pair<long long, long long>{-3, 0});
        }
      }
    }
  }
}

TEST_CASE("block tokens round-trip") {
  for (const Block &b :
       {xb(0), xb(3), sb(), zb(), xgen(1, 2, 1), sgen(0, 2, 2), zgen(2, 1, 1)}) {
    CHECK(block_from_token(block_token(b)) == b);
  }
  CHECK_THROWS_AS(block_from_token("Y1"), OrientationMismatch);
}

TEST_CASE("closed words must have compatible orientations") {
  LegWord w;
  w.strands = 2;
  w.orientation = {1, -1};
  w.closed = true;
  w.blocks = {xb(0)};  // swaps the strands, so directions cannot match
  CHECK_THROWS_AS(validate(w), OrientationMismatch);
}
