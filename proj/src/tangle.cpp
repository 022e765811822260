#include "legsat/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace legsat {

Block xb(int i) { return Block{BlockKind::X, i, 1, 1}; }
Block sb() { return Block{BlockKind::S, 0, 1, 1}; }
Block zb() { return Block{BlockKind::Z, 0, 1, 1}; }
Block xgen(int i, int k, int l) { return Block{BlockKind::Xgen, i, k, l}; }
Block sgen(int i, int k, int l) { return Block{BlockKind::Sgen, i, k, l}; }
Block zgen(int i, int k, int l) { return Block{BlockKind::Zgen, i, k, l}; }

DiagramStats &DiagramStats::operator+=(const DiagramStats &o) {
  u += o.u;
  d += o.d;
  c += o.c;
  xp += o.xp;
  xm += o.xm;
  return *this;
}

long long stats_reltb(const DiagramStats &s) {
  if (s.c % 2 != 0)
    throw OrientationMismatch("census has an odd cusp count");
  return (s.xp - s.xm) - s.c / 2;
}

long long stats_relrot(const DiagramStats &s) {
  if ((s.d - s.u) % 2 != 0)
    throw OrientationMismatch("census has odd up/down cusp imbalance");
  return (s.d - s.u) / 2;
}

namespace {

void check_block(const Block &b, int n) {
  switch (b.kind) {
    case BlockKind::X:
      if (b.pos < 0 || b.pos > n - 2)
        throw OrientationMismatch("X block out of range");
      break;
    case BlockKind::S:
    case BlockKind::Z:
      break;
    case BlockKind::Xgen:
      if (b.pos < 0 || b.k < 1 || b.l < 1 || b.pos + b.k + b.l > n)
        throw OrientationMismatch("generalized X block out of range");
      break;
    case BlockKind::Sgen:
    case BlockKind::Zgen:
      if (b.pos < 0 || b.k < 1 || b.l < 0 || b.pos + b.k + b.l > n)
        throw OrientationMismatch("generalized S/Z block out of range");
      break;
  }
}

Block mirror_block(const Block &b, int n) {
  switch (b.kind) {
    case BlockKind::X:
      return xb(n - 2 - b.pos);
    case BlockKind::S:
      return zb();
    case BlockKind::Z:
      return sb();
    default:
      throw OrientationMismatch("mirror of a non-basic block");
  }
}

}  // namespace

std::vector<Block> expand_block(const Block &b, int n) {
  check_block(b, n);
  std::vector<Block> out;
  switch (b.kind) {
    case BlockKind::X:
    case BlockKind::S:
    case BlockKind::Z:
      out.push_back(b);
      break;
    case BlockKind::Xgen:
      // Each of the l upper strands passes down through the k bundle.
      for (int j = 0; j < b.l; ++j)
        for (int a = b.pos + b.k - 1 + j; a >= b.pos + j; --a)
          out.push_back(xb(a));
      break;
    case BlockKind::Sgen:
      // Loop the bundle strands one at a time, top strand first: bring it
      // to the bottom, run the full-width S, then walk it back down from
      // the top to its slot above the l bundle.
      for (int t = 1; t <= b.k; ++t) {
        const int p = b.pos + b.k - t;
        const int q = b.pos + b.l + b.k - t;
        for (int a = p - 1; a >= 0; --a) out.push_back(xb(a));
        out.push_back(sb());
        for (int a = n - 2; a >= q; --a) out.push_back(xb(a));
      }
      break;
    case BlockKind::Zgen: {
      // Mirror image of the S expansion.
      const auto flipped =
          expand_block(sgen(n - b.pos - b.k - b.l, b.k, b.l), n);
      out.reserve(flipped.size());
      for (const auto &fb : flipped) out.push_back(mirror_block(fb, n));
      break;
    }
  }
  return out;
}

std::vector<int> block_permutation(const Block &b, int n) {
  check_block(b, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  switch (b.kind) {
    case BlockKind::X:
      std::swap(perm[b.pos], perm[b.pos + 1]);
      break;
    case BlockKind::S:
      for (int h = 0; h < n; ++h) perm[h] = h == 0 ? n - 1 : h - 1;
      break;
    case BlockKind::Z:
      for (int h = 0; h < n; ++h) perm[h] = h == n - 1 ? 0 : h + 1;
      break;
    default: {
      for (const auto &eb : expand_block(b, n)) {
        const auto q = block_permutation(eb, n);
        for (auto &p : perm) p = q[p];
      }
      break;
    }
  }
  return perm;
}

DiagramStats block_stats(const Block &b, int strands,
                         const std::vector<int> &orient_in) {
  check_block(b, strands);
  if (static_cast<int>(orient_in.size()) != strands)
    throw OrientationMismatch("orientation vector length mismatch");
  for (int o : orient_in)
    if (o != 1 && o != -1)
      throw OrientationMismatch("orientations must be +1 or -1");

  DiagramStats s;
  auto add_crossing = [&s](int letter_sign, int o1, int o2) {
    (letter_sign * o1 * o2 > 0 ? s.xp : s.xm) += 1;
  };
  switch (b.kind) {
    case BlockKind::X:
      add_crossing(+1, orient_in[b.pos], orient_in[b.pos + 1]);
      break;
    case BlockKind::S: {
      const int loop = orient_in[0];
      (loop > 0 ? s.u : s.d) += 2;
      s.c += 2;
      for (int h = 1; h < strands; ++h) add_crossing(-1, loop, orient_in[h]);
      break;
    }
    case BlockKind::Z: {
      const int loop = orient_in[strands - 1];
      (loop > 0 ? s.d : s.u) += 2;
      s.c += 2;
      for (int h = 0; h + 1 < strands; ++h)
        add_crossing(-1, loop, orient_in[h]);
      break;
    }
    default: {
      // Generalized blocks are measured through their expansion.
      std::vector<int> orient = orient_in;
      for (const auto &eb : expand_block(b, strands)) {
        s += block_stats(eb, strands, orient);
        const auto q = block_permutation(eb, strands);
        std::vector<int> next(orient.size());
        for (int h = 0; h < strands; ++h) next[q[h]] = orient[h];
        orient = next;
      }
      break;
    }
  }
  return s;
}

LegWord parallel_word(int strands, std::vector<Block> blocks, bool closed) {
  LegWord w;
  w.strands = strands;
  w.orientation.assign(static_cast<std::size_t>(strands), 1);
  w.closed = closed;
  w.blocks = std::move(blocks);
  validate(w);
  return w;
}

void validate(const LegWord &w) {
  if (w.strands < 1) throw OrientationMismatch("strand count must be >= 1");
  if (static_cast<int>(w.orientation.size()) != w.strands)
    throw OrientationMismatch("orientation vector length mismatch");
  for (int o : w.orientation)
    if (o != 1 && o != -1)
      throw OrientationMismatch("orientations must be +1 or -1");
  for (const auto &b : w.blocks) check_block(b, w.strands);
  if (w.closed) {
    // Each cycle of the closure carries a single direction.
    const auto perm = word_permutation(w);
    for (int h = 0; h < w.strands; ++h)
      if (w.orientation[static_cast<std::size_t>(perm[h])] != w.orientation[static_cast<std::size_t>(h)])
        throw OrientationMismatch(
            "closed word orientation incompatible with its permutation");
  }
}

std::vector<int> word_permutation(const LegWord &w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto &b : w.blocks) {
    const auto q = block_permutation(b, w.strands);
    for (auto &p : perm) p = q[p];
  }
  return perm;
}

DiagramStats word_stats(const LegWord &w) {
  validate(w);
  DiagramStats s;
  std::vector<int> orient = w.orientation;
  for (const auto &b : w.blocks) {
    s += block_stats(b, w.strands, orient);
    const auto q = block_permutation(b, w.strands);
    std::vector<int> next(orient.size());
    for (int h = 0; h < w.strands; ++h) next[static_cast<std::size_t>(q[h])] = orient[static_cast<std::size_t>(h)];
    orient = next;
  }
  for (int o : w.orientation) (o > 0 ? s.wp : s.wm) += 1;
  return s;
}

std::pair<long long, long long> word_invariants(const LegWord &w) {
  const auto s = word_stats(w);
  return {stats_reltb(s), stats_relrot(s)};
}

LegWord simplify(const LegWord &w) {
  validate(w);
  LegWord out = w;
  out.blocks.clear();
  for (const auto &b : w.blocks) {
    const auto ex = expand_block(b, w.strands);
    out.blocks.insert(out.blocks.end(), ex.begin(), ex.end());
  }
  return out;
}

BraidWord underlying_braid(const LegWord &w) {
  validate(w);
  BraidWord bw{w.strands, {}};
  for (const auto &b : simplify(w).blocks) {
    switch (b.kind) {
      case BlockKind::X:
        bw.letters.push_back({b.pos + 1, 1});
        break;
      case BlockKind::S:
      case BlockKind::Z:
        for (int i = w.strands - 1; i >= 1; --i) bw.letters.push_back({i, -1});
        break;
      default:
        break;  // unreachable after simplify
    }
  }
  return bw;
}

LegWord prefix_zeta_sigma(const LegWord &w, int z, int s) {
  validate(w);
  if (w.closed) throw ClosedWord("cannot prefix a closed word");
  if (z < 0 || s < 0)
    throw OrientationMismatch("prefix multiplicities must be >= 0");
  LegWord out;
  out.strands = w.strands;
  out.closed = false;
  out.blocks.reserve(static_cast<std::size_t>(z + s) + w.blocks.size());
  for (int i = 0; i < z; ++i) out.blocks.push_back(zb());
  for (int i = 0; i < s; ++i) out.blocks.push_back(sb());
  out.blocks.insert(out.blocks.end(), w.blocks.begin(), w.blocks.end());
  // The strand entering the prefix at height h exits it at perm[h], where
  // it must match the old word's boundary direction.
  LegWord prefix_only;
  prefix_only.strands = w.strands;
  prefix_only.orientation.assign(static_cast<std::size_t>(w.strands), 1);
  prefix_only.blocks.assign(out.blocks.begin(),
                            out.blocks.begin() + (z + s));
  const auto perm = word_permutation(prefix_only);
  out.orientation.resize(static_cast<std::size_t>(w.strands));
  for (int h = 0; h < w.strands; ++h)
    out.orientation[static_cast<std::size_t>(h)] = w.orientation[static_cast<std::size_t>(perm[h])];
  validate(out);
  return out;
}

ZetaSigmaFactor factor_zeta_sigma(const LegWord &w) {
  validate(w);
  if (w.closed) throw ClosedWord("cannot factor a closed word");
  ZetaSigmaFactor f;
  std::size_t i = 0;
  while (i < w.blocks.size() && w.blocks[i].kind == BlockKind::Z) {
    ++f.z;
    ++i;
  }
  while (i < w.blocks.size() && w.blocks[i].kind == BlockKind::S) {
    ++f.s;
    ++i;
  }
  f.rest.strands = w.strands;
  f.rest.closed = false;
  f.rest.blocks.assign(w.blocks.begin() + static_cast<std::ptrdiff_t>(i), w.blocks.end());
  LegWord prefix_only;
  prefix_only.strands = w.strands;
  prefix_only.orientation.assign(static_cast<std::size_t>(w.strands), 1);
  prefix_only.blocks.assign(w.blocks.begin(), w.blocks.begin() + static_cast<std::ptrdiff_t>(i));
  const auto perm = word_permutation(prefix_only);
  f.rest.orientation.resize(static_cast<std::size_t>(w.strands));
  for (int h = 0; h < w.strands; ++h)
    f.rest.orientation[static_cast<std::size_t>(perm[h])] = w.orientation[static_cast<std::size_t>(h)];
  validate(f.rest);
  return f;
}

// ---- Oriented letters and the Whitehead assembly ----------------------

DiagramStats oriented_letter_stats(OrientedLetter l) {
  DiagramStats s;
  s.c = 2;
  s.xp = 1;  // anti-parallel strands flip the negative loop crossing
  switch (l) {
    case OrientedLetter::Zp:
    case OrientedLetter::Sp:
      s.d = 2;
      break;
    case OrientedLetter::Zm:
    case OrientedLetter::Sm:
      s.u = 2;
      break;
  }
  return s;
}

DiagramStats clasp_stats(bool even_twists, int cusp_orient) {
  DiagramStats s;
  s.c = 2;
  if (even_twists) {
    // Both clasp crossings positive, one cusp of each orientation.
    s.u = 1;
    s.d = 1;
    s.xp = 2;
  } else {
    if (cusp_orient != 1 && cusp_orient != -1)
      throw OrientationMismatch("clasp cusp orientation must be +1 or -1");
    (cusp_orient > 0 ? s.d : s.u) += 2;
    s.xm = 2;
  }
  return s;
}

namespace {

int letter_sign(OrientedLetter l) {
  return (l == OrientedLetter::Zp || l == OrientedLetter::Sp) ? 1 : -1;
}

}  // namespace

std::pair<long long, long long> whitehead_invariants(
    int m, const std::vector<OrientedLetter> &box, int orient) {
  DiagramStats s;
  if (m >= 0) {
    if (!box.empty())
      throw OrientationMismatch("twist box holds crossings when m >= 0");
    // m anti-parallel crossings, all negative under the skein rule.
    s.xm = m;
    s.c = 0;
    s += clasp_stats(m % 2 == 0, orient);
  } else {
    const std::size_t len = static_cast<std::size_t>(-static_cast<long long>(m));
    if (box.size() != len)
      throw OrientationMismatch("twist box word length must be |m|");
    for (std::size_t i = 0; i + 1 < box.size(); ++i)
      if (letter_sign(box[i]) == letter_sign(box[i + 1]))
        throw OrientationMismatch("twist box word must alternate signs");
    for (const auto l : box) s += oriented_letter_stats(l);
    if (len % 2 == 0) {
      s += clasp_stats(true, 1);
    } else {
      // The clasp cusps follow the returning strand, cancelling the odd
      // letter's rotation contribution.
      s += clasp_stats(false, -letter_sign(box.front()));
    }
  }
  return {stats_reltb(s), stats_relrot(s)};
}

// ---- Tokens ------------------------------------------------------------

std::string block_token(const Block &b) {
  std::ostringstream os;
  switch (b.kind) {
    case BlockKind::X:
      os << 'X' << b.pos;
      break;
    case BlockKind::S:
      os << 'S';
      break;
    case BlockKind::Z:
      os << 'Z';
      break;
    case BlockKind::Xgen:
      os << "Xg:" << b.pos << ',' << b.k << ',' << b.l;
      break;
    case BlockKind::Sgen:
      os << "Sg:" << b.pos << ',' << b.k << ',' << b.l;
      break;
    case BlockKind::Zgen:
      os << "Zg:" << b.pos << ',' << b.k << ',' << b.l;
      break;
  }
  return os.str();
}

Block block_from_token(const std::string &token) {
  if (token == "S") return sb();
  if (token == "Z") return zb();
  if (token.empty()) throw OrientationMismatch("empty block token");
  if (token[0] == 'X' && token.size() > 1 && token[1] != 'g') {
    return xb(std::stoi(token.substr(1)));
  }
  if (token.size() > 3 && token[1] == 'g' && token[2] == ':') {
    int i = 0, k = 0, l = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(token.substr(3));
    if (!(is >> i >> c1 >> k >> c2 >> l) || c1 != ',' || c2 != ',')
      throw OrientationMismatch("malformed block token: " + token);
    switch (token[0]) {
      case 'X':
        return xgen(i, k, l);
      case 'S':
        return sgen(i, k, l);
      case 'Z':
        return zgen(i, k, l);
      default:
        break;
    }
  }
  throw OrientationMismatch("unknown block token: " + token);
}

}  // namespace legsat
