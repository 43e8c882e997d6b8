#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/blocks.hpp"
#include "rauzy/error.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/moves.hpp"
#include "rauzy/pair.hpp"

namespace rauzy {

namespace detail {

inline std::vector<Letter> row_with(std::span<const Letter> w, Letter before, Letter x) {
  std::vector<Letter> out;
  out.reserve(w.size() + 1);
  for (auto l : w) {
    if (l == before) out.push_back(x);
    out.push_back(l);
  }
  return out;
}

inline Pair insert_unchecked(const Pair& p, const std::string& x, Letter b0, Letter b1) {
  auto alphabet = std::make_shared<const Alphabet>(p.alphabet().with_letter(x));
  const auto xl = static_cast<Letter>(p.size());
  return Pair(std::move(alphabet), row_with(p.word(Row::top), b0, xl), row_with(p.word(Row::bottom), b1, xl));
}

}  // namespace detail

/// Ext(x; b0, b1): the new letter x goes immediately before b0 in row 0 and
/// before b1 in row 1. x is appended to the alphabet (index N).
/// Throws when x is already a letter or the result is reducible.
inline Pair prefix_insert(const Pair& p, const std::string& x, Letter b0, Letter b1) {
  if (p.alphabet().contains(x)) throw std::invalid_argument("inserted letter '" + x + "' already in the alphabet");
  if (b0 >= p.size() || b1 >= p.size()) throw std::invalid_argument("insertion anchor outside the alphabet");
  auto out = detail::insert_unchecked(p, x, b0, b1);
  if (!is_irreducible(out)) throw std::invalid_argument("insertion produces a reducible pair");
  return out;
}

/// Positional removal of a letter (inverse of prefix_insert, for tests).
inline Pair remove_letter(const Pair& p, Letter x) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != x) names.push_back(p.alphabet().name(static_cast<Letter>(i)));
  }
  auto shift = [x](Letter l) { return static_cast<Letter>(l > x ? l - 1 : l); };
  std::array<std::vector<Letter>, 2> w;
  for (std::size_t r = 0; r < 2; ++r) {
    for (auto l : p.word(static_cast<Row>(r))) {
      if (l != x) w[r].push_back(shift(l));
    }
  }
  return Pair(std::make_shared<const Alphabet>(std::move(names)), std::move(w[0]), std::move(w[1]));
}

/// New letters x_i with anchors (b_i, c_i): x_i before b_i in row 0, before c_i in row 1.
struct InsertionRule {
  std::vector<std::string> letters;
  std::vector<Letter> anchors0;
  std::vector<Letter> anchors1;

  std::size_t size() const noexcept { return letters.size(); }

  void push(std::string x, Letter b0, Letter b1) {
    letters.push_back(std::move(x));
    anchors0.push_back(b0);
    anchors1.push_back(b1);
  }

  friend bool operator==(const InsertionRule&, const InsertionRule&) = default;
};

/// Reason the rule is invalid over `alphabet`, or nullopt.
inline std::optional<std::string> rule_violation(const InsertionRule& rule, const Alphabet& alphabet) {
  const auto m = rule.size();
  if (rule.anchors0.size() != m || rule.anchors1.size() != m) return "anchor lists differ in length";
  for (std::size_t i = 0; i < m; ++i) {
    if (alphabet.contains(rule.letters[i])) return "new letter '" + rule.letters[i] + "' already in the alphabet";
    if (rule.letters[i].empty()) return "empty new letter";
    if (rule.anchors0[i] >= alphabet.size() || rule.anchors1[i] >= alphabet.size()) return "anchor outside alphabet";
    for (std::size_t j = 0; j < i; ++j) {
      if (rule.letters[i] == rule.letters[j]) return "new letter '" + rule.letters[i] + "' repeated";
      if (rule.anchors0[i] == rule.anchors0[j]) return "row-0 anchor '" + alphabet.name(rule.anchors0[i]) + "' repeated";
      if (rule.anchors1[i] == rule.anchors1[j]) return "row-1 anchor '" + alphabet.name(rule.anchors1[i]) + "' repeated";
    }
  }
  if (alphabet.size() + m > kMaxLetters) return "result exceeds 16 letters";
  return std::nullopt;
}

/// `x<-(b0,b1); y<-(b0',b1')`.
inline std::string format_rule(const InsertionRule& rule, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (i) out += "; ";
    out += rule.letters[i] + "<-(" + alphabet.name(rule.anchors0[i]) + "," + alphabet.name(rule.anchors1[i]) + ")";
  }
  return out;
}

inline InsertionRule parse_rule(std::string_view text, const Alphabet& alphabet) {
  InsertionRule rule;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto skip = [&] {
    while (i < text.size() && blank(text[i])) ++i;
  };
  auto token = [&](auto stop) {
    skip();
    const auto begin = i;
    while (i < text.size() && !stop(text[i]) && !blank(text[i])) ++i;
    if (i == begin) throw ParseError("expected a letter", begin + 1);
    auto t = text.substr(begin, i - begin);
    skip();
    return std::pair{t, begin + 1};
  };
  auto anchor = [&]() {
    const auto [t, col] = token([](char c) { return c == ',' || c == ')'; });
    const auto l = alphabet.find(t);
    if (!l) throw ParseError("unknown anchor '" + std::string(t) + "'", col);
    return *l;
  };
  auto expect = [&](std::string_view s) {
    skip();
    if (text.substr(i, s.size()) != s) throw ParseError("expected '" + std::string(s) + "'", i + 1);
    i += s.size();
  };
  skip();
  while (i < text.size()) {
    const auto [x, col] = token([](char c) { return c == '<'; });
    expect("<-");
    expect("(");
    const auto b0 = anchor();
    expect(",");
    const auto b1 = anchor();
    expect(")");
    rule.push(std::string(x), b0, b1);
    skip();
    if (i < text.size()) expect(";");
    skip();
  }
  if (auto v = rule_violation(rule, alphabet)) throw ParseError(*v, 1);
  return rule;
}

/// Applies every insertion of the rule; the result does not depend on the
/// order (checked against sequential application in rule order).
inline Pair multi_insert(const Pair& p, const InsertionRule& rule) {
  if (auto v = rule_violation(rule, p.alphabet())) throw std::invalid_argument("insertion rule: " + *v);
  if (rule.size() == 0) return p;
  auto names = p.alphabet().names();
  names.insert(names.end(), rule.letters.begin(), rule.letters.end());
  auto alphabet = std::make_shared<const Alphabet>(std::move(names));
  std::array<std::vector<Letter>, 2> w;
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& anchors = r == 0 ? rule.anchors0 : rule.anchors1;
    for (auto l : p.word(static_cast<Row>(r))) {
      for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (anchors[i] == l) w[r].push_back(static_cast<Letter>(p.size() + i));
      }
      w[r].push_back(l);
    }
  }
  Pair out(alphabet, std::move(w[0]), std::move(w[1]));
  Pair seq = p;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    seq = detail::insert_unchecked(seq, rule.letters[i], rule.anchors0[i], rule.anchors1[i]);
  }
  if (!(seq == out)) throw std::logic_error("multi_insert: application order matters");
  if (!is_irreducible(out)) throw std::invalid_argument("insertion produces a reducible pair");
  return out;
}

/// Σ of Ext(x; b0, b1) as predicted from Σ(p), over A ∪ {x} (x has index N).
inline Permutation predicted_sigma(const Pair& p, Letter b0, Letter b1) {
  const auto s = sigma(p);
  const auto n = p.size();
  const auto x = static_cast<Letter>(n);
  std::vector<Letter> image(n + 1);
  for (std::size_t i = 0; i < n; ++i) image[i] = s(static_cast<Letter>(i));
  image[n] = x;
  if (s(b1) != b0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (s(static_cast<Letter>(i)) == b0) image[i] = x;
    }
    image[b1] = b0;
    image[n] = s(b1);
  }
  return Permutation(std::move(image));
}

/// Anchors (b0', b1') such that switching the inserted pair equals inserting
/// with (b0', b1') into the switched pair.
inline std::pair<Letter, Letter> transport_anchors(const Pair& p, const SwitchMove& m, Letter b0, Letter b1) {
  if (auto v = switch_violation(p, m)) throw std::invalid_argument("transport: " + *v);
  const auto a = p.first(Row::top);
  const auto z = p.first(Row::bottom);
  if (b0 == a || b1 == z) throw std::invalid_argument("transport: an anchor is the first letter of its row");
  switch (m.kind) {
    case SwitchKind::inner: return {b0, b1};
    case SwitchKind::outer_a:
      if (m.first == b0) return {z, b1};
      if (b0 == z) return {a, b1};
      return {b0, b1};
    case SwitchKind::outer_z:
      if (m.first == b1) return {b0, a};
      if (b1 == a) return {b0, z};
      return {b0, b1};
  }
  return {b0, b1};
}

/// Single-letter rule transported across m.
inline InsertionRule transport_rule(const Pair& p, const SwitchMove& m, const InsertionRule& rule) {
  if (rule.size() != 1) throw std::invalid_argument("transport_rule expects a single-letter rule");
  if (auto v = rule_violation(rule, p.alphabet())) throw std::invalid_argument("insertion rule: " + *v);
  const auto [b0, b1] = transport_anchors(p, m, rule.anchors0[0], rule.anchors1[0]);
  InsertionRule out;
  out.push(rule.letters[0], b0, b1);
  return out;
}

// ---------------------------------------------------------------------------
// Combined insertions joining every cycle of a block-form pair into one odd cycle.
//
// Normal form (row 0):  a B_1 s_1 ... B_m s_m C_1 t_1 ... C_n t_n
// with B_j of form 2 or 3, C_j of form 4, and the last separator equal to z.

struct CombinedSlots {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<Letter>> b_sets;      ///< B_j plus s_j
  std::vector<std::vector<Letter>> c_minus;     ///< transposed pairs before the 3-reversal, plus its ends
  std::vector<std::vector<Letter>> c_plus;      ///< 3-reversal middle, trailing pairs, following separator
  /// Allowed (row-0 anchor set, row-1 anchor set) per new letter, in rule order.
  std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> slots;
  /// Condition label of each slot, for error messages.
  std::vector<std::string> labels;
};

/// Slot structure of a decomposition in combined-insertion normal form; throws otherwise.
inline CombinedSlots combined_slots(const BlockDecomposition& d) {
  const auto z = d.z;
  const auto& bl = d.blocks;
  CombinedSlots out;
  std::vector<const Block*> bs, cs;
  std::vector<Letter> after_b, after_c;
  std::size_t i = 0;
  auto separator_after = [&](std::size_t idx) -> std::optional<Letter> {
    if (idx + 1 < bl.size()) {
      if (bl[idx + 1].form != 0) return std::nullopt;
      return bl[idx + 1].letters.front();
    }
    return z;
  };
  while (i < bl.size() && (bl[i].form == 2 || bl[i].form == 3)) {
    const auto s = separator_after(i);
    if (!s) throw std::invalid_argument("combined insertion: block without a following separator");
    bs.push_back(&bl[i]);
    after_b.push_back(*s);
    i += (i + 1 < bl.size()) ? 2 : 1;
  }
  while (i < bl.size() && bl[i].form == 4) {
    const auto s = separator_after(i);
    if (!s) throw std::invalid_argument("combined insertion: block without a following separator");
    cs.push_back(&bl[i]);
    after_c.push_back(*s);
    i += (i + 1 < bl.size()) ? 2 : 1;
  }
  if (i != bl.size()) throw std::invalid_argument("combined insertion: pair is not in normal form");
  if (bs.empty() && cs.empty()) throw std::invalid_argument("combined insertion: no blocks");
  if (!cs.empty() && after_c.back() != z) throw std::invalid_argument("combined insertion: trailing separator");
  if (cs.empty() && after_b.back() != z) throw std::invalid_argument("combined insertion: trailing separator");

  out.m = bs.size();
  out.n = cs.size();
  for (std::size_t j = 0; j < bs.size(); ++j) {
    auto set = bs[j]->letters;
    set.push_back(after_b[j]);
    out.b_sets.push_back(std::move(set));
  }
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const auto& ls = cs[j]->letters;
    const auto k = 2 * cs[j]->m;
    std::vector<Letter> minus(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
    minus.push_back(ls[k]);
    minus.push_back(ls[k + 2]);
    std::vector<Letter> plus{ls[k + 1]};
    plus.insert(plus.end(), ls.begin() + static_cast<std::ptrdiff_t>(k + 3), ls.end());
    plus.push_back(after_c[j]);
    out.c_minus.push_back(std::move(minus));
    out.c_plus.push_back(std::move(plus));
  }
  const auto m = out.m, n = out.n;
  for (std::size_t j = 0; j < n; ++j) {
    out.slots.emplace_back(out.c_plus[j], out.c_minus[j]);
    out.labels.push_back("closing C_" + std::to_string(j + 1));
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.slots.emplace_back(out.c_minus[j + 1], out.c_plus[j]);
    out.labels.push_back("linking C_" + std::to_string(j + 2) + " to C_" + std::to_string(j + 1));
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    out.slots.emplace_back(out.b_sets[j + 1], out.b_sets[j]);
    out.labels.push_back("linking B_" + std::to_string(j + 2) + " to B_" + std::to_string(j + 1));
  }
  if (m > 0 && n > 0) {
    out.slots.emplace_back(out.c_minus[0], out.b_sets[m - 1]);
    out.labels.push_back("linking C_1 to B_" + std::to_string(m));
  }
  return out;
}

inline CombinedSlots combined_slots(const Pair& q) {
  const auto d = decompose(q);
  if (!d) throw std::invalid_argument("combined insertion: pair is not composed of blocks");
  return combined_slots(*d);
}

namespace detail {

inline std::vector<std::string> fresh_letters(const Alphabet& alphabet, std::size_t count) {
  std::vector<std::string> out;
  auto names = alphabet.names();
  for (std::size_t i = 1; out.size() < count; ++i) {
    auto candidate = "x" + std::to_string(i);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) out.push_back(std::move(candidate));
  }
  return out;
}

inline bool contains(const std::vector<Letter>& set, Letter l) {
  return std::find(set.begin(), set.end(), l) != set.end();
}

}  // namespace detail

/// Validates `anchors` (one (b, c) per slot) and builds the rule with new
/// letters x1, x2, ... (skipping names already in use).
inline InsertionRule combined_rule(const Pair& q, const BlockDecomposition& d,
                                   const std::vector<std::pair<Letter, Letter>>& anchors) {
  const auto slots = combined_slots(d);
  if (anchors.size() != slots.slots.size()) {
    throw std::invalid_argument("combined insertion: expected " + std::to_string(slots.slots.size()) +
                                " anchor pairs, got " + std::to_string(anchors.size()));
  }
  std::string violations;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (!detail::contains(slots.slots[i].first, anchors[i].first) ||
        !detail::contains(slots.slots[i].second, anchors[i].second)) {
      if (!violations.empty()) violations += ", ";
      violations += slots.labels[i];
    }
  }
  if (!violations.empty()) throw std::invalid_argument("combined insertion: violated " + violations);
  InsertionRule rule;
  const auto xs = detail::fresh_letters(q.alphabet(), anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) rule.push(xs[i], anchors[i].first, anchors[i].second);
  if (auto v = rule_violation(rule, q.alphabet())) throw std::invalid_argument("combined insertion: " + *v);
  return rule;
}

/// Visits every legal anchor choice in lexicographic order (slot by slot,
/// letters by index) until `visit` returns false.
inline void for_each_combined_choice(const CombinedSlots& slots,
                                     const std::function<bool(const std::vector<std::pair<Letter, Letter>>&)>& visit) {
  std::vector<std::vector<std::pair<Letter, Letter>>> options;
  for (const auto& [set0, set1] : slots.slots) {
    auto s0 = set0, s1 = set1;
    std::sort(s0.begin(), s0.end());
    std::sort(s1.begin(), s1.end());
    std::vector<std::pair<Letter, Letter>> opts;
    for (auto b : s0) {
      for (auto c : s1) opts.emplace_back(b, c);
    }
    options.push_back(std::move(opts));
  }
  std::vector<std::pair<Letter, Letter>> choice(options.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == options.size()) return visit(choice);
    for (const auto& o : options[k]) {
      choice[k] = o;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  rec(0);
}

/// The lexicographically first legal rule.
inline InsertionRule first_combined_rule(const Pair& q) {
  const auto d = decompose(q);
  if (!d) throw std::invalid_argument("combined insertion: pair is not composed of blocks");
  const auto slots = combined_slots(*d);
  std::vector<std::pair<Letter, Letter>> first;
  for_each_combined_choice(slots, [&](const auto& c) {
    first = c;
    return false;
  });
  return combined_rule(q, *d, first);
}

}  // namespace rauzy
