#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rauzy/invariants.hpp"
#include "rauzy/pair.hpp"
#include "rauzy/search.hpp"

namespace rauzy {

/// One block of a standard pair, occupying the same position range in both
/// rows. Shapes (row 0 over row 1):
///   form 0: a single letter in the same place in both rows;
///   form 1: a full reversal of n >= 5 letters;
///   form 2: n adjacent transpositions;
///   form 3: a 4-letter reversal followed by n transpositions;
///   form 4: m transpositions, a 3-letter reversal, then n transpositions.
/// Shorter reversals are reported as form 2 (n = 1), form 4 (m = n = 0) and
/// form 3 (n = 0).
struct Block {
  int form = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t start = 0;         ///< 0-based position of the first letter
  std::vector<Letter> letters;   ///< in row 0 order

  std::size_t length() const noexcept { return letters.size(); }

  /// A single reversal of length >= 2.
  bool is_reversal() const {
    return (form == 1) || (form == 2 && n == 1) || (form == 3 && n == 0) || (form == 4 && m == 0 && n == 0);
  }

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  Letter a = 0;  ///< first letter of row 0
  Letter z = 0;  ///< first letter of row 1
  std::vector<Block> blocks;

  std::size_t count(int form) const {
    std::size_t c = 0;
    for (const auto& b : blocks) c += b.form == form;
    return c;
  }
};

namespace detail {

/// Minimal same-range segments of the middle positions; each must be a
/// reversal (length 1 is the trivial reversal). nullopt otherwise.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> minimal_segments(const Pair& p) {
  const auto n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t k = 1;
  while (k + 1 < n) {
    std::size_t reach = k;
    std::size_t j = k;
    for (;; ++j) {
      reach = std::max(reach, p.position(Row::bottom, p.at(Row::top, j)));
      if (reach == j) break;
    }
    const auto len = j - k + 1;
    for (std::size_t i = 0; i < len; ++i) {
      if (p.at(Row::bottom, k + i) != p.at(Row::top, j - i)) return std::nullopt;
    }
    out.emplace_back(k, len);
    k = j + 1;
  }
  return out;
}

}  // namespace detail

/// Greedy left-to-right parse of a standard pair into blocks of forms 0-4.
/// Adjacent transpositions merge into the open block; a 3-letter reversal
/// turns an open run of transpositions into form 4. nullopt when some
/// segment is not a reversal. Throws on non-standard or reducible input.
inline std::optional<BlockDecomposition> decompose(const Pair& p) {
  if (!is_standard(p)) throw std::invalid_argument("decompose: pair is not standard");
  require_irreducible(p, "decompose");
  const auto segs = detail::minimal_segments(p);
  if (!segs) return std::nullopt;

  BlockDecomposition out{p.first(Row::top), p.first(Row::bottom), {}};
  std::optional<Block> open;
  auto close = [&] {
    if (open) out.blocks.push_back(std::move(*open));
    open.reset();
  };
  auto letters = [&](std::size_t start, std::size_t len) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) ls.push_back(p.at(Row::top, start + i));
    return ls;
  };
  for (const auto& [start, len] : *segs) {
    auto ls = letters(start, len);
    if (len == 2 && open) {
      ++open->n;
      open->letters.insert(open->letters.end(), ls.begin(), ls.end());
      continue;
    }
    if (len == 3 && open && open->form == 2) {
      open->form = 4;
      open->m = open->n;
      open->n = 0;
      open->letters.insert(open->letters.end(), ls.begin(), ls.end());
      continue;
    }
    close();
    switch (len) {
      case 1: out.blocks.push_back({0, 0, 0, start, std::move(ls)}); break;
      case 2: open = Block{2, 0, 1, start, std::move(ls)}; break;
      case 3: open = Block{4, 0, 0, start, std::move(ls)}; break;
      case 4: open = Block{3, 0, 0, start, std::move(ls)}; break;
      default: out.blocks.push_back({1, 0, len, start, std::move(ls)}); break;
    }
  }
  close();
  return out;
}

enum class TypeTag : std::uint8_t {
  hyperelliptic,
  odd_cycles_odd_spin,
  three_one_even,
  odd_cycles_even_spin,
  even_cycles,
  none
};

inline const char* to_string(TypeTag t) {
  switch (t) {
    case TypeTag::hyperelliptic: return "Hyperelliptic";
    case TypeTag::odd_cycles_odd_spin: return "OddCyclesOddSpin";
    case TypeTag::three_one_even: return "ThreeOneEven";
    case TypeTag::odd_cycles_even_spin: return "OddCyclesEvenSpin";
    case TypeTag::even_cycles: return "EvenCycles";
    case TypeTag::none: return "None";
  }
  return "?";
}

/// Type of a decomposition, clauses tried in order (a lone reversal block is
/// hyperelliptic whatever its length).
inline TypeTag classify_type(const BlockDecomposition& d) {
  std::size_t nonempty = 0, reversals = 0, twos = 0, threes = 0, fours = 0, ones = 0, ones5 = 0;
  for (const auto& b : d.blocks) {
    if (b.form == 0) continue;
    ++nonempty;
    reversals += b.is_reversal();
    twos += b.form == 2;
    threes += b.form == 3;
    fours += b.form == 4;
    ones += b.form == 1;
    ones5 += b.form == 1 && b.n == 5;
  }
  if (nonempty == 0 || (nonempty == 1 && reversals == 1)) return TypeTag::hyperelliptic;
  if (twos == nonempty) return TypeTag::odd_cycles_odd_spin;
  if (ones == 1 && ones5 == 1 && twos + 1 == nonempty) return TypeTag::three_one_even;
  if (threes == 1 && twos + 1 == nonempty) return TypeTag::odd_cycles_even_spin;
  if (fours >= 1 && twos + fours == nonempty) return TypeTag::even_cycles;
  return TypeTag::none;
}

inline TypeTag classify_type(const Pair& p) {
  const auto d = decompose(p);
  return d ? classify_type(*d) : TypeTag::none;
}

enum class SpinParity : std::uint8_t { zero, one, undefined, not_computed };

inline const char* to_string(SpinParity s) {
  switch (s) {
    case SpinParity::zero: return "0";
    case SpinParity::one: return "1";
    case SpinParity::undefined: return "undefined";
    case SpinParity::not_computed: return "not_computed";
  }
  return "?";
}

/// 1 + #form-3 + #form-1(n=5) mod 2, for pairs made only of empty, form-2,
/// form-3 and 5-letter form-1 blocks.
inline SpinParity spin_from_blocks(const BlockDecomposition& d) {
  std::size_t parity = 1;
  for (const auto& b : d.blocks) {
    if (b.form == 0 || b.form == 2) continue;
    if (b.form == 3 || (b.form == 1 && b.n == 5)) {
      ++parity;
      continue;
    }
    return SpinParity::not_computed;
  }
  return parity % 2 ? SpinParity::one : SpinParity::zero;
}

inline SpinParity spin_from_blocks(const Pair& p) {
  if (!profile(p).spin_defined()) return SpinParity::undefined;
  const auto d = decompose(p);
  return d ? spin_from_blocks(*d) : SpinParity::not_computed;
}

struct SpinReport {
  SpinParity value = SpinParity::not_computed;
  std::optional<Pair> representative;  ///< class member the value was read from
  std::string diagnostic;
};

/// Spin parity of p: undefined for an even profile entry; otherwise read off
/// the first block-form member of the extended class (breadth-first over
/// non-labeled members, moves in canonical order).
inline SpinReport spin_report(const Pair& p, std::size_t budget = kDefaultNonLabeledBudget) {
  require_irreducible(p, "spin");
  SpinReport out;
  if (!profile(p).spin_defined()) {
    out.value = SpinParity::undefined;
    out.diagnostic = "profile has an even entry";
    return out;
  }
  const auto n = p.size();
  std::optional<PackedPair> found;
  auto visit = [&](std::uint32_t, const PackedPair& rep) {
    const auto q = unpack(rep, p.alphabet_ptr());
    if (!is_standard(q)) return false;
    const auto d = decompose(q);
    if (!d) return false;
    const auto v = spin_from_blocks(*d);
    if (v == SpinParity::not_computed) return false;
    out.value = v;
    found = rep;
    return true;
  };
  try {
    NonLabeledWalk::run(pack(p), n, kAllMoves, budget, visit, [](std::uint32_t, const PackedPair&) {});
  } catch (const BudgetExceeded& e) {
    out.diagnostic = e.what();
    return out;
  }
  if (found) {
    out.representative = unpack(*found, p.alphabet_ptr());
  } else {
    out.diagnostic = "no block-form representative in the extended class";
  }
  return out;
}

inline SpinParity spin(const Pair& p, std::size_t budget = kDefaultNonLabeledBudget) {
  return spin_report(p, budget).value;
}

}  // namespace rauzy
