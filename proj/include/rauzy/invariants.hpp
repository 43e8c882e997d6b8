#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rauzy/group.hpp"
#include "rauzy/pair.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// Σ(p), evaluated letter by letter:
///   - the first letter of row 1 goes to the first letter of row 0;
///   - the letter right after row 0's last letter (read in row 1) goes to the
///     row-0 successor of row 1's last letter;
///   - any other letter goes to the row-0 successor of its row-1 predecessor.
inline Permutation sigma(const Pair& p) {
  require_irreducible(p, "sigma");
  const auto n = p.size();
  const auto last_top = p.last(Row::top);
  const auto after_last_top = p.position(Row::bottom, last_top) + 1;
  std::vector<Letter> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto l = static_cast<Letter>(i);
    const auto pos = p.position(Row::bottom, l);
    std::size_t target;
    if (pos == 0) {
      target = 0;
    } else if (pos == after_last_top) {
      target = p.position(Row::top, p.last(Row::bottom)) + 1;
    } else {
      const auto pred = p.at(Row::bottom, pos - 1);
      target = p.position(Row::top, pred) + 1;
    }
    if (target >= n) throw std::logic_error("sigma: successor past the end of row 0");
    image[i] = p.at(Row::top, target);
  }
  return Permutation(std::move(image));
}

/// N(p) = [X] Y: a marked letter and a permutation fixing it.
///
/// `anchor` only affects display: the cycle containing it is printed starting
/// there (for N(p) it is Σ(X), so the cycle reads as Σ's cycle with X cut out).
struct MarkedStructure {
  Letter marked = 0;
  Permutation structure;
  std::optional<Letter> anchor;

  std::size_t size() const noexcept { return structure.size(); }

  friend bool operator==(const MarkedStructure& l, const MarkedStructure& r) {
    return l.marked == r.marked && l.structure == r.structure;
  }
};

inline MarkedStructure marked_structure(const Pair& p) {
  const auto s = sigma(p);
  const auto x = p.first(Row::top);
  std::vector<Letter> y(s.image().begin(), s.image().end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto l = static_cast<Letter>(i);
    if (l == x) {
      y[i] = x;
    } else if (s(l) == x) {
      y[i] = s(x);
    }
  }
  MarkedStructure out{x, Permutation(std::move(y)), std::nullopt};
  if (s(x) != x) out.anchor = s(x);
  return out;
}

/// N ∗ ν = (ν⁻¹(X), ν⁻¹ Y ν).
inline MarkedStructure act(const MarkedStructure& n, const Permutation& nu) {
  if (nu.size() != n.size()) throw std::invalid_argument("acting with a permutation over a different alphabet");
  const auto inv = inverse(nu);
  MarkedStructure out{inv(n.marked), inv * n.structure * nu, std::nullopt};
  if (n.anchor) out.anchor = inv(*n.anchor);
  return out;
}

/// Some ν with from ∗ ν = to, or nullopt when the cycle types differ.
inline std::optional<Permutation> conjugating_renaming(const MarkedStructure& from, const MarkedStructure& to) {
  if (from.size() != to.size()) return std::nullopt;
  auto by_length = [](const MarkedStructure& n) {
    auto cs = all_cycles(n.structure);
    std::erase_if(cs, [&](const Cycle& c) { return c.size() == 1 && c.front() == n.marked; });
    std::stable_sort(cs.begin(), cs.end(), [](const Cycle& l, const Cycle& r) { return l.size() < r.size(); });
    return cs;
  };
  const auto cf = by_length(from);
  const auto ct = by_length(to);
  if (cf.size() != ct.size()) return std::nullopt;
  std::vector<Letter> image(from.size());
  image[to.marked] = from.marked;
  for (std::size_t k = 0; k < cf.size(); ++k) {
    if (cf[k].size() != ct[k].size()) return std::nullopt;
    for (std::size_t i = 0; i < cf[k].size(); ++i) image[ct[k][i]] = cf[k][i];
  }
  return Permutation(std::move(image));
}

/// Cycles of Y other than the marked fixed point, fixed points included.
inline std::vector<Cycle> unmarked_cycles(const MarkedStructure& n) {
  std::vector<Cycle> out;
  for (auto& c : all_cycles(n.structure)) {
    if (c.size() == 1 && c.front() == n.marked) continue;
    if (n.anchor) {
      if (auto it = std::find(c.begin(), c.end(), *n.anchor); it != c.end()) std::rotate(c.begin(), it, c.end());
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// `[a](b,f,c)(e,d,g)`.
inline std::string format_marked(const MarkedStructure& n, const Alphabet& alphabet) {
  std::string out = "[" + alphabet.name(n.marked) + "]";
  for (const auto& c : unmarked_cycles(n)) out += format_cycle(c, alphabet);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer Z = {ν : N ∗ ν = N}: permutations fixing X and commuting with Y.

inline bool centralizes(const MarkedStructure& n, const Permutation& nu) {
  return nu(n.marked) == n.marked && nu * n.structure == n.structure * nu;
}

/// Generators of Z: each cycle's own rotation, and for equal-length cycles
/// (fixed points count as 1-cycles) the swap matching them position by position.
inline std::vector<Permutation> centralizer_generators(const MarkedStructure& n) {
  const auto size = n.size();
  auto cs = all_cycles(n.structure);
  std::erase_if(cs, [&](const Cycle& c) { return c.size() == 1 && c.front() == n.marked; });
  std::vector<Permutation> out;
  for (const auto& c : cs) {
    if (c.size() > 1) out.push_back(cycle_of(c, size));
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[j].size() != cs[i].size()) continue;
      std::vector<Cycle> swaps;
      for (std::size_t k = 0; k < cs[i].size(); ++k) swaps.push_back({cs[i][k], cs[j][k]});
      out.push_back(from_cycles(swaps, size));
      break;  // consecutive swaps suffice
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every element of Z by filtering Sym(A); N <= kClosureCap.
inline std::vector<Permutation> centralizer_by_filter(const MarkedStructure& n) {
  const auto size = n.size();
  if (size > kClosureCap) {
    throw CapExceeded("centralizer filter limited to " + std::to_string(kClosureCap) + " letters");
  }
  std::vector<Letter> image(size);
  for (std::size_t i = 0; i < size; ++i) image[i] = static_cast<Letter>(i);
  std::vector<Permutation> out;
  do {
    Permutation nu(image);
    if (centralizes(n, nu)) out.push_back(std::move(nu));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;  // next_permutation order is already sorted
}

struct Centralizer {
  std::vector<Permutation> generators;
  /// Sorted element list; empty when the alphabet exceeds kClosureCap.
  std::vector<Permutation> elements;
  std::uint64_t order = 0;
};

/// Z as generators plus, when small enough, the full element list. The two
/// constructions are cross-checked; a mismatch is a logic_error.
inline Centralizer centralizer(const MarkedStructure& n) {
  Centralizer out;
  out.generators = centralizer_generators(n);
  // |Z| = prod over lengths L of L^k * k!, k = number of cycles of length L.
  std::vector<std::size_t> count(n.size() + 1, 0);
  for (const auto& c : unmarked_cycles(n)) ++count[c.size()];
  out.order = 1;
  for (std::size_t len = 1; len < count.size(); ++len) {
    for (std::size_t k = 1; k <= count[len]; ++k) out.order *= len * k;
  }
  if (n.size() <= kClosureCap) {
    out.elements = centralizer_by_filter(n);
    if (out.elements.size() != out.order || closure(out.generators, n.size()) != out.elements) {
      throw std::logic_error("centralizer: generator and filter constructions disagree");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

/// P(p): cycle lengths of Y without the marked point, sorted descending.
struct Profile {
  std::vector<std::size_t> lengths;

  bool simple() const { return std::adjacent_find(lengths.begin(), lengths.end()) == lengths.end(); }
  bool spin_defined() const {
    return std::all_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l % 2 == 1; });
  }
  std::size_t total() const {
    std::size_t s = 0;
    for (auto l : lengths) s += l;
    return s;
  }

  friend bool operator==(const Profile&, const Profile&) = default;
};

inline Profile profile(const MarkedStructure& n) {
  Profile out;
  for (const auto& c : unmarked_cycles(n)) out.lengths.push_back(c.size());
  std::sort(out.lengths.begin(), out.lengths.end(), std::greater<>());
  return out;
}

inline Profile profile(const Pair& p) { return profile(marked_structure(p)); }

/// `{3,3}`.
inline std::string format_profile(const Profile& pr) {
  std::string out = "{";
  for (std::size_t i = 0; i < pr.lengths.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pr.lengths[i]);
  }
  return out + "}";
}

}  // namespace rauzy
