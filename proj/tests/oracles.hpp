#pragma once

// Slow, independent reference implementations used to freeze expected values.
// They work on plain strings and one-line vectors and share no code with the
// library beyond parsing.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "rauzy/rauzy.hpp"

namespace oracle {

using Row = std::vector<std::string>;

struct Words {
  Row top, bottom;
  auto operator<=>(const Words&) const = default;
};

inline Words words_of(const rauzy::Pair& p) {
  Words w;
  for (auto l : p.word(rauzy::Row::top)) w.top.push_back(p.alphabet().name(l));
  for (auto l : p.word(rauzy::Row::bottom)) w.bottom.push_back(p.alphabet().name(l));
  return w;
}

inline std::size_t pos(const Row& r, const std::string& x) {
  return static_cast<std::size_t>(std::find(r.begin(), r.end(), x) - r.begin());
}

/// Literal reinsertion rule on string rows.
inline Words induce(Words w, bool right, int winner) {
  Row& keep = winner == 0 ? w.top : w.bottom;
  Row& move = winner == 0 ? w.bottom : w.top;
  if (right) {
    const auto x = move.back();
    move.pop_back();
    move.insert(move.begin() + static_cast<long>(pos(move, keep.back())) + 1, x);
  } else {
    const auto x = move.front();
    move.erase(move.begin());
    move.insert(move.begin() + static_cast<long>(pos(move, keep.front())), x);
  }
  return w;
}

inline bool irreducible(const Words& w) {
  std::set<std::string> a, b;
  for (std::size_t k = 0; k + 1 < w.top.size(); ++k) {
    a.insert(w.top[k]);
    b.insert(w.bottom[k]);
    if (a == b) return false;
  }
  return true;
}

inline std::set<Words> labeled_class(const Words& start, bool extended) {
  std::set<Words> seen{start};
  std::queue<Words> todo;
  todo.push(start);
  while (!todo.empty()) {
    const auto w = todo.front();
    todo.pop();
    for (int side = 0; side < (extended ? 2 : 1); ++side) {
      for (int winner = 0; winner < 2; ++winner) {
        auto v = induce(w, side == 0, winner);
        if (seen.insert(v).second) todo.push(v);
      }
    }
  }
  return seen;
}

/// One-line image: entry i is the row-1 position of the i-th letter of row 0.
inline std::vector<int> one_line(const Words& w) {
  std::vector<int> pi;
  for (const auto& x : w.top) pi.push_back(static_cast<int>(pos(w.bottom, x)));
  return pi;
}

// Classical Rauzy moves written directly on one-line permutations (0-based).

inline std::vector<int> right_top(std::vector<int> pi) {
  const int n = static_cast<int>(pi.size());
  const int t = pi[n - 1];
  for (auto& v : pi) {
    if (v == n - 1) v = t + 1;
    else if (v > t) ++v;
  }
  return pi;
}

inline std::vector<int> right_bottom(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  const int k = static_cast<int>(std::find(pi.begin(), pi.end(), n - 1) - pi.begin());
  std::vector<int> out(pi.begin(), pi.begin() + k + 1);
  out.push_back(pi[n - 1]);
  out.insert(out.end(), pi.begin() + k + 1, pi.end() - 1);
  return out;
}

inline std::vector<int> left_top(std::vector<int> pi) {
  const int t = pi[0];
  for (auto& v : pi) {
    if (v == 0) v = t - 1;
    else if (v < t) --v;
  }
  return pi;
}

inline std::vector<int> left_bottom(const std::vector<int>& pi) {
  const int k = static_cast<int>(std::find(pi.begin(), pi.end(), 0) - pi.begin());
  std::vector<int> out(pi.begin() + 1, pi.begin() + k);
  out.push_back(pi[0]);
  out.insert(out.end(), pi.begin() + k, pi.end());
  return out;
}

inline std::set<std::vector<int>> nonlabeled_class(const std::vector<int>& start, bool extended) {
  std::set<std::vector<int>> seen{start};
  std::queue<std::vector<int>> todo;
  todo.push(start);
  while (!todo.empty()) {
    const auto pi = todo.front();
    todo.pop();
    std::vector<std::vector<int>> next{right_top(pi), right_bottom(pi)};
    if (extended) {
      next.push_back(left_top(pi));
      next.push_back(left_bottom(pi));
    }
    for (auto& q : next) {
      if (seen.insert(q).second) todo.push(q);
    }
  }
  return seen;
}

/// Σ by the three-case formula with 1-based position maps.
inline std::map<std::string, std::string> sigma(const Words& w) {
  const int n = static_cast<int>(w.top.size());
  std::map<std::string, int> p0, p1;
  for (int i = 0; i < n; ++i) {
    p0[w.top[i]] = i + 1;
    p1[w.bottom[i]] = i + 1;
  }
  auto inv0 = [&](int k) { return w.top[k - 1]; };
  auto inv1 = [&](int k) { return w.bottom[k - 1]; };
  std::map<std::string, std::string> s;
  for (const auto& a : w.top) {
    if (p1[a] == 1) s[a] = inv0(1);
    else if (p1[a] == p1[inv0(n)] + 1) s[a] = inv0(p0[inv1(n)] + 1);
    else s[a] = inv0(p0[inv1(p1[a] - 1)] + 1);
  }
  return s;
}

/// Every irreducible pair on the first n Latin letters, rows in lexicographic order.
inline std::vector<rauzy::Pair> all_irreducible(std::size_t n) {
  auto al = std::make_shared<const rauzy::Alphabet>(rauzy::Alphabet::latin(n));
  std::vector<rauzy::Letter> base(n);
  std::iota(base.begin(), base.end(), rauzy::Letter{0});
  std::vector<rauzy::Pair> out;
  auto top = base;
  do {
    auto bottom = base;
    do {
      rauzy::Pair p(al, top, bottom);
      if (irreducible(words_of(p))) out.push_back(std::move(p));
    } while (std::next_permutation(bottom.begin(), bottom.end()));
  } while (std::next_permutation(top.begin(), top.end()));
  return out;
}

/// Every irreducible pair with row 0 in alphabet order.
inline std::vector<rauzy::Pair> all_irreducible_sorted_top(std::size_t n) {
  auto al = std::make_shared<const rauzy::Alphabet>(rauzy::Alphabet::latin(n));
  std::vector<rauzy::Letter> top(n);
  std::iota(top.begin(), top.end(), rauzy::Letter{0});
  std::vector<rauzy::Pair> out;
  auto bottom = top;
  do {
    rauzy::Pair p(al, top, bottom);
    if (irreducible(words_of(p))) out.push_back(std::move(p));
  } while (std::next_permutation(bottom.begin(), bottom.end()));
  return out;
}

/// Every standard irreducible pair with row 0 in alphabet order.
inline std::vector<rauzy::Pair> all_standard(std::size_t n) {
  std::vector<rauzy::Pair> out;
  for (auto& p : all_irreducible_sorted_top(n)) {
    if (rauzy::is_standard(p)) out.push_back(std::move(p));
  }
  return out;
}

/// Renamings ν (as one-line images) with p∘ν in the given labeled class.
inline std::set<std::vector<rauzy::Letter>> renamings(const rauzy::Pair& p, const std::set<Words>& cls) {
  const auto n = p.size();
  std::vector<rauzy::Letter> nu(n);
  std::iota(nu.begin(), nu.end(), rauzy::Letter{0});
  std::set<std::vector<rauzy::Letter>> out;
  do {
    // p∘ν shows ν⁻¹(x) wherever p shows x
    std::vector<rauzy::Letter> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[nu[i]] = static_cast<rauzy::Letter>(i);
    Words w;
    for (auto l : p.word(rauzy::Row::top)) w.top.push_back(p.alphabet().name(inv[l]));
    for (auto l : p.word(rauzy::Row::bottom)) w.bottom.push_back(p.alphabet().name(inv[l]));
    if (cls.count(w)) out.insert(nu);
  } while (std::next_permutation(nu.begin(), nu.end()));
  return out;
}

}  // namespace oracle

namespace oracle {

/// One block of a hand-built standard pair.
struct BlockSpec {
  int form = 0;
  std::size_t m = 0;
  std::size_t n = 0;
};

inline std::size_t block_length(const BlockSpec& b) {
  switch (b.form) {
    case 1: return b.n;
    case 2: return 2 * b.n;
    case 3: return 4 + 2 * b.n;
    case 4: return 2 * b.m + 3 + 2 * b.n;
  }
  return 0;
}

/// Text of `a B_1 s_1 B_2 ... B_k z | z B_1' s_1 ... B_k' a` for the given
/// blocks. Form 0 is an empty block; every block is followed by a
/// separator and the last separator is z.
inline std::string block_pair_text(const std::vector<BlockSpec>& blocks) {
  static const char* pool[] = {"b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q"};
  std::size_t next = 0;
  auto fresh = [&] { return std::string(pool[next++]); };
  Row top{"a"}, bottom{"z"};
  auto pairs = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const auto u = fresh(), v = fresh();
      top.insert(top.end(), {u, v});
      bottom.insert(bottom.end(), {v, u});
    }
  };
  auto reversal = [&](std::size_t len) {
    Row r;
    for (std::size_t i = 0; i < len; ++i) r.push_back(fresh());
    top.insert(top.end(), r.begin(), r.end());
    bottom.insert(bottom.end(), r.rbegin(), r.rend());
  };
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    switch (b.form) {
      case 0: break;
      case 1: reversal(b.n); break;
      case 2: pairs(b.n); break;
      case 3:
        reversal(4);
        pairs(b.n);
        break;
      case 4:
        pairs(b.m);
        reversal(3);
        pairs(b.n);
        break;
    }
    if (k + 1 < blocks.size()) {
      const auto s = fresh();
      top.push_back(s);
      bottom.push_back(s);
    }
  }
  top.push_back("z");
  bottom.push_back("a");
  std::string out;
  for (const auto& x : top) out += x + " ";
  out += "|";
  for (const auto& x : bottom) out += " " + x;
  return out;
}

}  // namespace oracle
