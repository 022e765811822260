#include "legsat/braid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

namespace legsat {

namespace {

void check_letter(int strands, const BraidLetter &l) {
  if (l.sign != 1 && l.sign != -1)
    throw StrandMismatch("braid letter sign must be +1 or -1");
  if (l.index < 1 || l.index >= strands)
    throw StrandMismatch("generator index " + std::to_string(l.index) +
                         " out of range for " + std::to_string(strands) +
                         " strands");
}

void check_word(const BraidWord &w) {
  if (w.strands < 1) throw StrandMismatch("strand count must be >= 1");
  for (const auto &l : w.letters) check_letter(w.strands, l);
}

// Positive words are encoded as strings of generator indices for hashing.
std::string encode(const BraidWord &w) {
  std::string s;
  s.reserve(w.letters.size());
  for (const auto &l : w.letters) s.push_back(static_cast<char>(l.index));
  return s;
}

BraidWord decode(int strands, const std::string &s) {
  BraidWord w{strands, {}};
  w.letters.reserve(s.size());
  for (char c : s) w.letters.push_back({static_cast<int>(c), 1});
  return w;
}

// All words one positive Artin move away: far commutation swaps and
// sigma_i sigma_{i+1} sigma_i <-> sigma_{i+1} sigma_i sigma_{i+1}.
void positive_moves(const std::string &s, std::vector<std::string> &out) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(s[i] - s[i + 1]) >= 2) {
      std::string t = s;
      std::swap(t[i], t[i + 1]);
      out.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (s[i] == s[i + 2] && std::abs(s[i] - s[i + 1]) == 1) {
      std::string t = s;
      std::swap(t[i], t[i + 1]);
      t[i + 2] = s[i + 1];
      out.push_back(std::move(t));
    }
  }
}

std::unordered_set<std::string> positive_closure(const BraidWord &start,
                                                 bool cyclic,
                                                 std::size_t budget,
                                                 const std::string *target) {
  std::unordered_set<std::string> seen;
  std::deque<std::string> frontier;
  const std::string s0 = encode(start);
  seen.insert(s0);
  frontier.push_back(s0);
  std::vector<std::string> next;
  while (!frontier.empty()) {
    std::string s = std::move(frontier.front());
    frontier.pop_front();
    if (target && s == *target) return seen;
    next.clear();
    positive_moves(s, next);
    if (cyclic && s.size() >= 2) {
      next.push_back(s.substr(1) + s[0]);
      next.push_back(s.back() + s.substr(0, s.size() - 1));
    }
    for (auto &t : next) {
      if (seen.insert(t).second) {
        if (seen.size() > budget)
          throw BudgetExhausted("positive-word closure exceeded budget");
        frontier.push_back(std::move(t));
      }
    }
  }
  return seen;
}

}  // namespace

BraidWord make_braid(int strands, const std::vector<int> &signed_letters) {
  BraidWord w{strands, {}};
  w.letters.reserve(signed_letters.size());
  for (int v : signed_letters) {
    if (v == 0) throw StrandMismatch("generator number 0 is not a letter");
    w.letters.push_back({std::abs(v), v > 0 ? 1 : -1});
  }
  check_word(w);
  return w;
}

bool is_positive(const BraidWord &w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](const BraidLetter &l) { return l.sign == 1; });
}

long long writhe(const BraidWord &w) {
  long long s = 0;
  for (const auto &l : w.letters) s += l.sign;
  return s;
}

BraidWord full_twist(int strands, int k) {
  if (strands < 1) throw StrandMismatch("strand count must be >= 1");
  BraidWord w{strands, {}};
  if (strands == 1 || k == 0) return w;
  const int reps = std::abs(k) * strands;
  w.letters.reserve(static_cast<std::size_t>(reps) * (strands - 1));
  for (int r = 0; r < reps; ++r) {
    if (k > 0) {
      for (int i = 1; i < strands; ++i) w.letters.push_back({i, 1});
    } else {
      for (int i = strands - 1; i >= 1; --i) w.letters.push_back({i, -1});
    }
  }
  return w;
}

BraidWord concat(BraidWord a, const BraidWord &b) {
  if (a.strands != b.strands)
    throw StrandMismatch("cannot concatenate words on different strand counts");
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

BraidWord inverse(const BraidWord &w) {
  BraidWord r{w.strands, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->index, -it->sign});
  return r;
}

BraidWord rotated(const BraidWord &w, int by) {
  if (w.letters.empty()) return w;
  BraidWord r{w.strands, {}};
  const int n = static_cast<int>(w.letters.size());
  int shift = ((by % n) + n) % n;
  r.letters.reserve(w.letters.size());
  for (int i = 0; i < n; ++i) r.letters.push_back(w.letters[(i + shift) % n]);
  return r;
}

std::vector<int> underlying_permutation(const BraidWord &w) {
  check_word(w);
  std::vector<int> pos(w.strands);
  std::iota(pos.begin(), pos.end(), 0);  // pos[s] = current height of strand s
  for (const auto &l : w.letters) {
    for (auto &p : pos) {
      if (p == l.index - 1)
        ++p;
      else if (p == l.index)
        --p;
    }
  }
  return pos;
}

int closure_components(const BraidWord &w) {
  const auto perm = underlying_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t]))
      seen[t] = true;
  }
  return cycles;
}

bool positive_monoid_equivalent(const BraidWord &a, const BraidWord &b,
                                std::size_t budget) {
  if (!is_positive(a) || !is_positive(b))
    throw NonPositiveInput("positive-monoid comparison needs positive words");
  if (a.strands != b.strands)
    throw StrandMismatch("positive-monoid comparison needs equal strand counts");
  if (a.letters.size() != b.letters.size()) return false;
  const std::string target = encode(b);
  const auto seen = positive_closure(a, false, budget, &target);
  return seen.count(target) > 0;
}

std::vector<BraidWord> positive_class(const BraidWord &w, bool cyclic,
                                      std::size_t budget) {
  if (!is_positive(w))
    throw NonPositiveInput("positive-word closure needs a positive word");
  check_word(w);
  const auto seen = positive_closure(w, cyclic, budget, nullptr);
  std::vector<std::string> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<BraidWord> out;
  out.reserve(sorted.size());
  for (const auto &s : sorted) out.push_back(decode(w.strands, s));
  return out;
}

namespace {

// Signed letters encoded as chars: index i sign +1 -> i, sign -1 -> -i.
using SWord = std::basic_string<signed char>;

SWord free_reduce(SWord s) {
  SWord out;
  for (signed char c : s) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

void signed_moves(const SWord &s, int strands, std::size_t length_budget,
                  std::vector<SWord> &out) {
  const std::size_t n = s.size();
  auto idx = [](signed char c) { return std::abs(static_cast<int>(c)); };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(idx(s[i]) - idx(s[i + 1])) >= 2) {
      SWord t = s;
      std::swap(t[i], t[i + 1]);
      out.push_back(std::move(t));
    }
  }
  // Braid relation with uniform sign: aba <-> bab and the inverse form.
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (s[i] == s[i + 2] && std::abs(idx(s[i]) - idx(s[i + 1])) == 1 &&
        ((s[i] > 0) == (s[i + 1] > 0))) {
      SWord t = s;
      std::swap(t[i], t[i + 1]);
      t[i + 2] = s[i + 1];
      out.push_back(std::move(t));
    }
  }
  // Insert a cancelling pair anywhere, within the length budget.
  if (n + 2 <= length_budget) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (int g = 1; g < strands; ++g) {
        for (int sign : {1, -1}) {
          SWord t = s;
          const signed char c = static_cast<signed char>(sign * g);
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), {c, static_cast<signed char>(-c)});
          out.push_back(std::move(t));
        }
      }
    }
  }
}

}  // namespace

GroupEq group_equal(const BraidWord &a, const BraidWord &b,
                    std::size_t length_budget, std::size_t node_budget) {
  if (a.strands != b.strands)
    throw StrandMismatch("group comparison needs equal strand counts");
  check_word(a);
  check_word(b);
  auto enc = [](const BraidWord &w) {
    SWord s;
    for (const auto &l : w.letters)
      s.push_back(static_cast<signed char>(l.sign * l.index));
    return free_reduce(s);
  };
  const SWord start = enc(a), target = enc(b);
  if (start == target) return GroupEq::equal;
  // The permutation and writhe are complete invariants in B_2 and fast
  // separators everywhere.
  if (writhe(a) != writhe(b) ||
      underlying_permutation(a) != underlying_permutation(b))
    return GroupEq::distinct;
  if (a.strands == 2) return GroupEq::equal;

  struct Hash {
    std::size_t operator()(const SWord &s) const {
      std::size_t h = 1469598103934665603ull;
      for (signed char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_set<SWord, Hash> seen{start};
  std::deque<SWord> frontier{start};
  bool truncated = false;
  std::vector<SWord> next;
  while (!frontier.empty()) {
    SWord s = std::move(frontier.front());
    frontier.pop_front();
    next.clear();
    signed_moves(s, a.strands, length_budget, next);
    for (auto &raw : next) {
      SWord t = free_reduce(std::move(raw));
      if (t == target) return GroupEq::equal;
      if (t.size() > length_budget) {
        truncated = true;
        continue;
      }
      if (seen.insert(t).second) {
        if (seen.size() > node_budget) return GroupEq::budget_exhausted;
        frontier.push_back(std::move(t));
      }
    }
  }
  return truncated ? GroupEq::budget_exhausted : GroupEq::distinct;
}

}  // namespace legsat
