#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/error.hpp"
#include "rauzy/pair.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/search.hpp"

namespace rauzy {

enum class SwitchKind : std::uint8_t { inner, outer_a, outer_z };

/// A switch on a standard pair with corners a (row 0 first) and z (row 1 first).
/// inner uses both letters {b, c}; the outer kinds use only `first` (the letter d).
struct SwitchMove {
  SwitchKind kind = SwitchKind::inner;
  Letter first = 0;
  Letter second = 0;

  static SwitchMove inner(Letter b, Letter c) { return {SwitchKind::inner, b, c}; }
  static SwitchMove outer_a(Letter d) { return {SwitchKind::outer_a, d, 0}; }
  static SwitchMove outer_z(Letter d) { return {SwitchKind::outer_z, d, 0}; }

  friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
};

using SwitchPath = std::vector<SwitchMove>;

inline std::string format_switch(const SwitchMove& m, const Alphabet& alphabet) {
  switch (m.kind) {
    case SwitchKind::inner: return "inner(" + alphabet.name(m.first) + "," + alphabet.name(m.second) + ")";
    case SwitchKind::outer_a: return "outer_a(" + alphabet.name(m.first) + ")";
    case SwitchKind::outer_z: return "outer_z(" + alphabet.name(m.first) + ")";
  }
  return {};
}

/// `inner(b,c); outer_a(d); outer_z(e)`.
inline std::string format_path(const SwitchPath& path, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += "; ";
    out += format_switch(path[i], alphabet);
  }
  return out;
}

inline SwitchPath parse_path(std::string_view text, const Alphabet& alphabet) {
  SwitchPath out;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto skip = [&] {
    while (i < text.size() && blank(text[i])) ++i;
  };
  auto letter = [&]() -> Letter {
    skip();
    const auto begin = i;
    while (i < text.size() && text[i] != ',' && text[i] != ')' && !blank(text[i])) ++i;
    const auto name = text.substr(begin, i - begin);
    const auto l = alphabet.find(name);
    if (!l) throw ParseError("unknown letter '" + std::string(name) + "'", begin + 1);
    skip();
    return *l;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i + 1);
    ++i;
  };
  skip();
  while (i < text.size()) {
    const auto begin = i;
    while (i < text.size() && text[i] != '(' && !blank(text[i])) ++i;
    const auto kind = text.substr(begin, i - begin);
    expect('(');
    if (kind == "inner") {
      const auto b = letter();
      expect(',');
      const auto c = letter();
      out.push_back(SwitchMove::inner(b, c));
    } else if (kind == "outer_a") {
      out.push_back(SwitchMove::outer_a(letter()));
    } else if (kind == "outer_z") {
      out.push_back(SwitchMove::outer_z(letter()));
    } else {
      throw ParseError("unknown switch '" + std::string(kind) + "'", begin + 1);
    }
    expect(')');
    skip();
    if (i < text.size()) {
      expect(';');
      skip();
      if (i >= text.size()) throw ParseError("trailing ';'", i);
    }
  }
  return out;
}

/// Reason `m` cannot be applied to `p`, or nullopt when it can.
inline std::optional<std::string> switch_violation(const Pair& p, const SwitchMove& m) {
  if (!is_irreducible(p)) return "pair is reducible";
  if (!is_standard(p)) return "pair is not standard";
  const auto n = p.size();
  const auto a = p.first(Row::top);
  const auto z = p.first(Row::bottom);
  auto check_letter = [&](Letter l) -> std::optional<std::string> {
    if (l >= n) return "letter outside the alphabet";
    if (l == a || l == z) return "letter '" + p.alphabet().name(l) + "' is a corner letter";
    return std::nullopt;
  };
  if (auto v = check_letter(m.first)) return v;
  if (m.kind != SwitchKind::inner) return std::nullopt;
  if (auto v = check_letter(m.second)) return v;
  if (m.first == m.second) return "inner switch needs two distinct letters";
  if (p.position(Row::top, m.first) > p.position(Row::top, m.second)) return "b does not precede c in row 0";
  if (p.position(Row::bottom, m.first) > p.position(Row::bottom, m.second)) return "b does not precede c in row 1";
  return std::nullopt;
}

namespace detail {

inline void append(std::vector<Letter>& out, std::span<const Letter> w, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) out.push_back(w[i]);
}

/// first u b v c w last  ->  first v c u b w last
inline std::vector<Letter> inner_row(std::span<const Letter> w, std::size_t ib, std::size_t ic) {
  const auto n = w.size();
  std::vector<Letter> out{w[0]};
  append(out, w, ib + 1, ic);
  out.push_back(w[ic]);
  append(out, w, 1, ib);
  out.push_back(w[ib]);
  append(out, w, ic + 1, n - 1);
  out.push_back(w[n - 1]);
  return out;
}

/// x u d v y  ->  head v mid u tail
inline std::vector<Letter> outer_row(std::span<const Letter> w, std::size_t id, Letter head, Letter mid, Letter tail) {
  const auto n = w.size();
  std::vector<Letter> out{head};
  append(out, w, id + 1, n - 1);
  out.push_back(mid);
  append(out, w, 1, id);
  out.push_back(tail);
  return out;
}

}  // namespace detail

/// The {b,c}-switch: the segment ending at c moves in front of the segment ending at b.
inline Pair inner_switch(const Pair& p, Letter b, Letter c) {
  const auto m = SwitchMove::inner(b, c);
  if (auto v = switch_violation(p, m)) throw std::invalid_argument("inner switch: " + *v);
  return Pair(p.alphabet_ptr(),
              detail::inner_row(p.word(Row::top), p.position(Row::top, b), p.position(Row::top, c)),
              detail::inner_row(p.word(Row::bottom), p.position(Row::bottom, b), p.position(Row::bottom, c)));
}

/// The {a,d}-switch (side a) or {d,z}-switch (side z).
inline Pair outer_switch(const Pair& p, SwitchKind side, Letter d) {
  if (side == SwitchKind::inner) throw std::invalid_argument("outer switch needs side a or z");
  const SwitchMove m{side, d, 0};
  if (auto v = switch_violation(p, m)) throw std::invalid_argument("outer switch: " + *v);
  const auto a = p.first(Row::top);
  const auto z = p.first(Row::bottom);
  const auto i0 = p.position(Row::top, d);
  const auto i1 = p.position(Row::bottom, d);
  if (side == SwitchKind::outer_a) {
    return Pair(p.alphabet_ptr(), detail::outer_row(p.word(Row::top), i0, d, a, z),
                detail::outer_row(p.word(Row::bottom), i1, z, a, d));
  }
  return Pair(p.alphabet_ptr(), detail::outer_row(p.word(Row::top), i0, a, z, d),
              detail::outer_row(p.word(Row::bottom), i1, d, z, a));
}

inline Pair apply_switch(const Pair& p, const SwitchMove& m) {
  if (m.kind == SwitchKind::inner) return inner_switch(p, m.first, m.second);
  return outer_switch(p, m.kind, m.first);
}

inline Pair apply_path(const Pair& p, const SwitchPath& path) {
  Pair q = p;
  for (const auto& m : path) q = apply_switch(q, m);
  return q;
}

/// Every switch applicable to p: inner pairs, then outer_a, then outer_z, by letter index.
inline std::vector<SwitchMove> available_switches(const Pair& p) {
  std::vector<SwitchMove> out;
  if (!is_standard(p) || !is_irreducible(p)) return out;
  const auto n = static_cast<Letter>(p.size());
  for (Letter b = 0; b < n; ++b) {
    for (Letter c = 0; c < n; ++c) {
      if (!switch_violation(p, SwitchMove::inner(b, c))) out.push_back(SwitchMove::inner(b, c));
    }
  }
  for (auto kind : {SwitchKind::outer_a, SwitchKind::outer_z}) {
    for (Letter d = 0; d < n; ++d) {
      if (!switch_violation(p, SwitchMove{kind, d, 0})) out.push_back(SwitchMove{kind, d, 0});
    }
  }
  return out;
}

/// μ of a single switch: (a, z, d) for an {a,d}-switch, identity otherwise.
inline Permutation mu_of_switch(const Pair& p, const SwitchMove& m) {
  if (m.kind != SwitchKind::outer_a) return Permutation(p.size());
  return cycle_of({p.first(Row::top), p.first(Row::bottom), m.first}, p.size());
}

/// μ_ω = μ_1 μ_2 ... μ_k, corners read from the pair current at each step.
inline Permutation mu_of_path(const Pair& p, const SwitchPath& path) {
  Permutation mu(p.size());
  Pair cur = p;
  for (const auto& m : path) {
    mu = mu * mu_of_switch(cur, m);
    cur = apply_switch(cur, m);
  }
  return mu;
}

inline constexpr std::size_t kRealizeCap = 7;

/// An induction word from p to the switch target; `verified` is false when the
/// alphabet exceeds the cap and no search was run.
struct InductionWitness {
  bool verified = false;
  std::vector<Move> word;
  Pair target;
};

/// Lexicographically smallest shortest induction word from p to q over all
/// four moves. Throws logic_error when q is unreachable (the class was
/// exhausted) and BudgetExceeded when the budget runs out first.
inline std::vector<Move> induction_word(const Pair& p, const Pair& q, Flavor flavor = Flavor::extended,
                                        std::size_t budget = kDefaultLabeledBudget) {
  require_irreducible(p, "induction search");
  const auto target = pack(q);
  const auto tree = SearchTree::build(pack(p), p.size(), moves_of(flavor), budget,
                                      [&](const PackedPair& k) { return k == target; });
  const auto hit = tree.find(target);
  if (!hit) throw std::logic_error("target not reachable by induction from " + format_pair(p));
  return tree.word_to(*hit);
}

inline InductionWitness realize_switch(const Pair& p, const SwitchMove& m, std::size_t cap = kRealizeCap,
                                       std::size_t budget = kDefaultLabeledBudget) {
  InductionWitness w;
  w.target = apply_switch(p, m);
  if (p.size() > cap) return w;
  w.word = induction_word(p, w.target, Flavor::extended, budget);
  w.verified = true;
  return w;
}

}  // namespace rauzy
