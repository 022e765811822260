#include "legsat/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

namespace legsat {

namespace {

char flip_sign(char c) {
  switch (c) {
    case letters::Zp:
      return letters::Zm;
    case letters::Zm:
      return letters::Zp;
    case letters::Sp:
      return letters::Sm;
    case letters::Sm:
      return letters::Sp;
    default:
      return c;
  }
}

int zs_sign(char c) {
  return (c == letters::Zp || c == letters::Sp) ? 1 : -1;
}

bool is_z(char c) { return c == letters::Zp || c == letters::Zm; }

void check_rules(const RelationSet &rel) {
  for (const auto &rule : rel.rules)
    if (rule.lhs.size() != rule.rhs.size())
      throw DomainError("relation rule sides must have equal length");
}

void neighbors(const RWord &w, const RelationSet &rel,
               std::vector<RWord> &out) {
  out.clear();
  for (const auto &rule : rel.rules) {
    for (int dir = 0; dir < 2; ++dir) {
      const RWord &from = dir == 0 ? rule.lhs : rule.rhs;
      const RWord &to = dir == 0 ? rule.rhs : rule.lhs;
      if (from.size() > w.size()) continue;
      for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
        if (w.compare(i, from.size(), from) == 0) {
          RWord t = w;
          t.replace(i, from.size(), to);
          out.push_back(std::move(t));
        }
      }
    }
  }
  if (rel.cyclic && w.size() >= 1) {
    RWord right = w;  // last letter wraps to the front
    char back = right.back();
    right.pop_back();
    if (rel.sign_flip_on_wrap) back = flip_sign(back);
    right.insert(right.begin(), back);
    out.push_back(std::move(right));

    RWord left = w;  // first letter wraps to the back
    char front = left.front();
    left.erase(left.begin());
    if (rel.sign_flip_on_wrap) front = flip_sign(front);
    left.push_back(front);
    out.push_back(std::move(left));
  }
}

}  // namespace

std::string word_tokens(const RWord &w) {
  std::string s;
  for (char c : w) {
    switch (c) {
      case letters::Zp:
        s += "Z+";
        break;
      case letters::Zm:
        s += "Z-";
        break;
      case letters::Sp:
        s += "S+";
        break;
      case letters::Sm:
        s += "S-";
        break;
      default:
        s += 'X';
        s += std::to_string(c - letters::X0);
        break;
    }
  }
  return s;
}

RWord word_from_tokens(const std::string &tokens) {
  RWord w;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const char c = tokens[i];
    if ((c == 'Z' || c == 'S') && i + 1 < tokens.size() &&
        (tokens[i + 1] == '+' || tokens[i + 1] == '-')) {
      const bool plus = tokens[i + 1] == '+';
      w.push_back(c == 'Z' ? (plus ? letters::Zp : letters::Zm)
                           : (plus ? letters::Sp : letters::Sm));
      i += 2;
    } else if (c == 'X') {
      std::size_t j = i + 1;
      while (j < tokens.size() && std::isdigit(static_cast<unsigned char>(tokens[j]))) ++j;
      if (j == i + 1) throw DomainError("X token needs a height");
      w.push_back(static_cast<char>(letters::X0 + std::stoi(tokens.substr(i + 1, j - i - 1))));
      i = j;
    } else if (c == 'Z') {
      w.push_back(letters::Zp);
      ++i;
    } else if (c == 'S') {
      w.push_back(letters::Sp);
      ++i;
    } else {
      throw DomainError(std::string("unknown letter token at '") + c + "'");
    }
  }
  return w;
}

WordClass class_of(const RWord &word, const RelationSet &rel,
                   std::size_t budget) {
  check_rules(rel);
  std::unordered_set<RWord> seen{word};
  std::deque<RWord> frontier{word};
  RWord best = word;
  std::vector<RWord> next;
  while (!frontier.empty()) {
    RWord w = std::move(frontier.front());
    frontier.pop_front();
    neighbors(w, rel, next);
    for (auto &t : next) {
      if (seen.insert(t).second) {
        if (seen.size() > budget)
          throw BudgetExhausted("rewrite closure exceeded budget");
        if (t < best) best = t;
        frontier.push_back(std::move(t));
      }
    }
  }
  return WordClass{best, seen.size(), {}};
}

std::vector<WordClass> partition_classes(const std::vector<RWord> &universe,
                                         const RelationSet &rel,
                                         std::size_t budget) {
  check_rules(rel);
  std::unordered_set<RWord> assigned;
  std::vector<WordClass> classes;
  for (const auto &w : universe) {
    if (assigned.count(w)) continue;
    // Re-run the closure to collect members; budget applies per class.
    std::unordered_set<RWord> seen{w};
    std::deque<RWord> frontier{w};
    RWord best = w;
    std::vector<RWord> next;
    while (!frontier.empty()) {
      RWord cur = std::move(frontier.front());
      frontier.pop_front();
      neighbors(cur, rel, next);
      for (auto &t : next) {
        if (seen.insert(t).second) {
          if (seen.size() > budget)
            throw BudgetExhausted("rewrite closure exceeded budget");
          if (t < best) best = t;
          frontier.push_back(std::move(t));
        }
      }
    }
    for (const auto &member : seen) assigned.insert(member);
    classes.push_back(WordClass{best, seen.size(), {}});
  }
  std::sort(classes.begin(), classes.end(),
            [](const WordClass &a, const WordClass &b) {
              return a.canonical < b.canonical;
            });
  return classes;
}

RelationSet whitehead_relations(bool even_length, int pos_stab, int neg_stab) {
  RelationSet rel;
  rel.cyclic = true;
  rel.sign_flip_on_wrap = !even_length;
  for (int sign : {1, -1}) {
    const char Z = sign > 0 ? letters::Zp : letters::Zm;
    const char z = sign > 0 ? letters::Zm : letters::Zp;
    const char S = sign > 0 ? letters::Sp : letters::Sm;
    const char s = sign > 0 ? letters::Sm : letters::Sp;
    rel.rules.push_back({RWord{Z, s, S}, RWord{S, s, Z}});
    rel.rules.push_back({RWord{Z, z, S}, RWord{S, z, Z}});
  }
  if (pos_stab > 0)
    rel.rules.push_back({RWord{letters::Zp}, RWord{letters::Sp}});
  if (neg_stab > 0)
    rel.rules.push_back({RWord{letters::Zm}, RWord{letters::Sm}});
  return rel;
}

namespace {

std::vector<RWord> alternating_words(std::size_t len) {
  std::vector<RWord> out;
  if (len == 0) return out;
  // Choose the starting sign and then Z-or-S at each position.
  for (int start : {1, -1}) {
    const std::size_t combos = std::size_t{1} << len;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      RWord w;
      w.reserve(len);
      int sign = start;
      for (std::size_t i = 0; i < len; ++i) {
        const bool z = (mask >> i) & 1u;
        w.push_back(z ? (sign > 0 ? letters::Zp : letters::Zm)
                      : (sign > 0 ? letters::Sp : letters::Sm));
        sign = -sign;
      }
      out.push_back(std::move(w));
    }
  }
  if (len >= 1) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<long long> whitehead_tag(const RWord &w, bool even_length) {
  long long zp = 0, zm = 0, z = 0;
  for (char c : w) {
    if (is_z(c)) {
      ++z;
      (zs_sign(c) > 0 ? zp : zm) += 1;
    }
  }
  if (even_length) return {zp, zm};
  return {z};
}

std::vector<WordClass> whitehead_census(long long m, int pos_stab,
                                        int neg_stab, std::size_t budget) {
  if (m >= 0)
    throw DomainError("twist-box census needs m < 0");
  const std::size_t len = static_cast<std::size_t>(-m);
  const bool even = len % 2 == 0;
  const auto rel = whitehead_relations(even, pos_stab, neg_stab);
  auto classes = partition_classes(alternating_words(len), rel, budget);
  for (auto &cls : classes) {
    if (pos_stab == 0 && neg_stab == 0) {
      cls.tag = whitehead_tag(cls.canonical, even);
    } else if (even && pos_stab > 0 && neg_stab == 0) {
      cls.tag = {whitehead_tag(cls.canonical, true)[1]};  // z- survives
    } else if (even && pos_stab == 0 && neg_stab > 0) {
      cls.tag = {whitehead_tag(cls.canonical, true)[0]};  // z+ survives
    } else {
      cls.tag = {};
    }
  }
  return classes;
}

}  // namespace

std::vector<WordClass> whitehead_classes(long long m, std::size_t budget) {
  return whitehead_census(m, 0, 0, budget);
}

std::vector<WordClass> stabilized_classes(long long m, int pos_stab,
                                          int neg_stab, std::size_t budget) {
  if (pos_stab < 0 || neg_stab < 0 || pos_stab + neg_stab < 1)
    throw DomainError("stabilized census needs at least one stabilization");
  return whitehead_census(m, pos_stab, neg_stab, budget);
}

std::vector<WordClass> two_braid_classes(long long m, std::size_t budget) {
  if (m >= 0 || m % 2 == 0)
    throw EvenM("2-braid census needs m < 0 odd");
  const std::size_t len = static_cast<std::size_t>(-m);
  RelationSet rel;
  rel.cyclic = true;
  const char Z = letters::Zp, S = letters::Sp;
  rel.rules.push_back({RWord{Z, S, S}, RWord{S, S, Z}});
  rel.rules.push_back({RWord{Z, Z, S}, RWord{S, Z, Z}});
  std::vector<RWord> universe;
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    RWord w;
    w.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(((mask >> i) & 1u) ? Z : S);
    universe.push_back(std::move(w));
  }
  auto classes = partition_classes(universe, rel, budget);
  for (auto &cls : classes) {
    long long z = 0;
    for (char c : cls.canonical) z += is_z(c) ? 1 : 0;
    cls.tag = {z};
  }
  return classes;
}

long long positive_leg_classes(const BraidWord &w, bool closed,
                               std::size_t budget) {
  if (!is_positive(w))
    throw NonPositiveInput("Legendrian class count needs a positive word");
  const int n = w.strands;
  // Artin relations realized on the X alphabet.
  RelationSet rel;
  rel.cyclic = closed;
  for (int a = 0; a + 1 <= n - 2; ++a)
    for (int b = a + 2; b <= n - 2; ++b)
      rel.rules.push_back(
          {RWord{static_cast<char>(letters::X0 + a), static_cast<char>(letters::X0 + b)},
           RWord{static_cast<char>(letters::X0 + b), static_cast<char>(letters::X0 + a)}});
  for (int a = 0; a + 1 <= n - 2; ++a) {
    const char A = static_cast<char>(letters::X0 + a);
    const char B = static_cast<char>(letters::X0 + a + 1);
    rel.rules.push_back({RWord{A, B, A}, RWord{B, A, B}});
  }

  // The words whose underlying braid matches w: same positive-monoid class
  // when open, same cyclic-plus-relations class when closed.
  const auto braid_side = positive_class(w, closed, budget);
  std::vector<RWord> universe;
  universe.reserve(braid_side.size());
  for (const auto &u : braid_side) {
    RWord x;
    x.reserve(u.letters.size());
    for (const auto &letter : u.letters)
      x.push_back(static_cast<char>(letters::X0 + letter.index - 1));
    universe.push_back(std::move(x));
  }
  std::sort(universe.begin(), universe.end());
  return static_cast<long long>(partition_classes(universe, rel, budget).size());
}

}  // namespace legsat
