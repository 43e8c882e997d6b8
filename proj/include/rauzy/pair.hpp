#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/alphabet.hpp"
#include "rauzy/error.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// Row 0 is the top row ("before" order), row 1 the bottom row.
enum class Row : std::uint8_t { top = 0, bottom = 1 };

inline Row other(Row r) { return r == Row::top ? Row::bottom : Row::top; }
inline std::size_t idx(Row r) { return static_cast<std::size_t>(r); }

enum class Side : std::uint8_t { right = 0, left = 1 };

/// One elementary induction step. The canonical order is R0, R1, L0, L1.
struct Move {
  Side side = Side::right;
  Row row = Row::top;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move& l, const Move& r) { return l.ordinal() <=> r.ordinal(); }

  int ordinal() const { return 2 * static_cast<int>(side) + static_cast<int>(row); }
};

inline constexpr std::array<Move, 4> kAllMoves{{{Side::right, Row::top},
                                                {Side::right, Row::bottom},
                                                {Side::left, Row::top},
                                                {Side::left, Row::bottom}}};
inline constexpr std::array<Move, 2> kRightMoves{{{Side::right, Row::top}, {Side::right, Row::bottom}}};

inline std::string to_string(Move m) {
  return std::string(m.side == Side::right ? "R" : "L") + (m.row == Row::top ? "0" : "1");
}

inline std::string format_word(std::span<const Move> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += to_string(word[i]);
  }
  return out;
}

/// A labeled permutation: two orderings of one alphabet. Stored both as row
/// words (position -> letter) and as position maps (letter -> position);
/// positions are 0-based.
class Pair {
 public:
  Pair() = default;

  Pair(std::shared_ptr<const Alphabet> alphabet, std::vector<Letter> top, std::vector<Letter> bottom)
      : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw std::invalid_argument("pair without alphabet");
    const auto n = alphabet_->size();
    word_[0] = std::move(top);
    word_[1] = std::move(bottom);
    for (std::size_t r = 0; r < 2; ++r) {
      if (word_[r].size() != n) throw std::invalid_argument("row length differs from alphabet size");
      pos_[r].assign(n, 0xFF);
      for (std::size_t i = 0; i < n; ++i) {
        const auto l = word_[r][i];
        if (l >= n || pos_[r][l] != 0xFF) throw std::invalid_argument("row is not a bijection onto the alphabet");
        pos_[r][l] = static_cast<Letter>(i);
      }
    }
  }

  Pair(const Alphabet& alphabet, std::vector<Letter> top, std::vector<Letter> bottom)
      : Pair(std::make_shared<const Alphabet>(alphabet), std::move(top), std::move(bottom)) {}

  std::size_t size() const noexcept { return word_[0].size(); }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept { return alphabet_; }

  std::span<const Letter> word(Row r) const noexcept { return word_[idx(r)]; }
  Letter at(Row r, std::size_t position) const { return word_[idx(r)][position]; }
  std::size_t position(Row r, Letter l) const { return pos_[idx(r)][l]; }
  Letter first(Row r) const { return word_[idx(r)].front(); }
  Letter last(Row r) const { return word_[idx(r)].back(); }

  friend bool operator==(const Pair& l, const Pair& r) {
    return l.word_ == r.word_ && (l.alphabet_ == r.alphabet_ || *l.alphabet_ == *r.alphabet_);
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::array<std::vector<Letter>, 2> word_;
  std::array<std::vector<Letter>, 2> pos_;
};

/// Text form `a b c | c b a`; top row first.
inline std::string format_pair(const Pair& p) {
  std::string out;
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) out += " |";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (r || i) out += ' ';
      out += p.alphabet().name(p.at(static_cast<Row>(r), i));
    }
  }
  return out;
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Token> split_row(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    const auto begin = i;
    while (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i > begin) out.push_back({text.substr(begin, i - begin), offset + begin + 1});
  }
  return out;
}

inline std::array<std::vector<Token>, 2> split_pair_text(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("missing '|' between rows", text.size() + 1);
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("more than one '|'", text.find('|', bar + 1) + 1);
  }
  std::array<std::vector<Token>, 2> rows{split_row(text.substr(0, bar), 0),
                                         split_row(text.substr(bar + 1), bar + 1)};
  if (rows[0].empty()) throw ParseError("empty top row", 1);
  if (rows[1].empty()) throw ParseError("empty bottom row", bar + 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (rows[r][i].text == rows[r][j].text) {
          throw ParseError("duplicate letter '" + std::string(rows[r][i].text) + "' in " +
                               (r ? "bottom" : "top") + " row",
                           rows[r][i].column);
        }
      }
    }
  }
  if (rows[0].size() != rows[1].size()) {
    throw ParseError("rows have different lengths", rows[0].size() < rows[1].size() ? rows[1].back().column
                                                                                     : bar + 1);
  }
  return rows;
}

}  // namespace detail

/// Parses `letters | letters` against a fixed alphabet (letter sets must match).
inline Pair parse_pair(std::string_view text, std::shared_ptr<const Alphabet> alphabet) {
  const auto rows = detail::split_pair_text(text);
  if (rows[0].size() != alphabet->size()) throw ParseError("pair size differs from alphabet size", 1);
  std::array<std::vector<Letter>, 2> words;
  for (std::size_t r = 0; r < 2; ++r) {
    for (const auto& tok : rows[r]) {
      const auto l = alphabet->find(tok.text);
      if (!l) throw ParseError("letter '" + std::string(tok.text) + "' not in alphabet", tok.column);
      words[r].push_back(*l);
    }
  }
  return Pair(std::move(alphabet), std::move(words[0]), std::move(words[1]));
}

inline Pair parse_pair(std::string_view text, const Alphabet& alphabet) {
  return parse_pair(text, std::make_shared<const Alphabet>(alphabet));
}

/// Parses `letters | letters`; the alphabet is the top row's letters in natural order.
/// Reducible pairs parse fine (see is_irreducible).
inline Pair parse_pair(std::string_view text) {
  const auto rows = detail::split_pair_text(text);
  std::vector<std::string> names;
  for (const auto& tok : rows[0]) names.emplace_back(tok.text);
  if (names.size() > kMaxLetters) throw ParseError("more than 16 letters", rows[0][kMaxLetters].column);
  for (const auto& tok : rows[1]) {
    bool found = false;
    for (const auto& n : names) found = found || n == tok.text;
    if (!found) throw ParseError("letter '" + std::string(tok.text) + "' missing from top row", tok.column);
  }
  return parse_pair(text, std::make_shared<const Alphabet>(Alphabet::sorted(std::move(names))));
}

/// Condition: p1∘p0⁻¹ maps {1..k} onto itself only for k = N.
inline bool is_irreducible(const Pair& p) {
  const auto n = p.size();
  std::size_t reach = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    reach = std::max(reach, p.position(Row::bottom, p.at(Row::top, k)));
    if (reach == k) return false;
  }
  return true;
}

/// First letter of each row is the last letter of the other row.
inline bool is_standard(const Pair& p) {
  return p.size() >= 2 && p.first(Row::top) == p.last(Row::bottom) && p.first(Row::bottom) == p.last(Row::top);
}

inline void require_irreducible(const Pair& p, const char* what) {
  if (!is_irreducible(p)) throw std::invalid_argument(std::string(what) + ": pair is reducible");
}

/// One Rauzy induction step.
///
/// Right, type e: row e is kept; the last letter of the other row moves to
/// just after that row's occurrence of row e's last letter. Left is the
/// mirror image with first letters.
inline Pair induce(const Pair& p, Side side, Row winner) {
  require_irreducible(p, "induction");
  const auto loser = other(winner);
  std::array<std::vector<Letter>, 2> w{std::vector<Letter>(p.word(Row::top).begin(), p.word(Row::top).end()),
                                       std::vector<Letter>(p.word(Row::bottom).begin(), p.word(Row::bottom).end())};
  auto& row = w[idx(loser)];
  if (side == Side::right) {
    const auto anchor = p.position(loser, p.last(winner));
    const auto moved = row.back();
    row.pop_back();
    row.insert(row.begin() + static_cast<std::ptrdiff_t>(anchor) + 1, moved);
  } else {
    const auto anchor = p.position(loser, p.first(winner));
    const auto moved = row.front();
    row.erase(row.begin());
    row.insert(row.begin() + static_cast<std::ptrdiff_t>(anchor) - 1, moved);
  }
  return Pair(p.alphabet_ptr(), std::move(w[0]), std::move(w[1]));
}

inline Pair induce(const Pair& p, Move m) { return induce(p, m.side, m.row); }

inline Pair induce(const Pair& p, std::span<const Move> word) {
  Pair q = p;
  for (auto m : word) q = induce(q, m);
  return q;
}

/// p∘nu = (p0∘nu, p1∘nu): in the displayed rows each letter x becomes nu⁻¹(x).
inline Pair rename(const Pair& p, const Permutation& nu) {
  if (nu.size() != p.size()) throw std::invalid_argument("renaming over a different alphabet");
  const auto inv = inverse(nu);
  std::array<std::vector<Letter>, 2> w;
  for (std::size_t r = 0; r < 2; ++r) {
    for (auto l : p.word(static_cast<Row>(r))) w[r].push_back(inv(l));
  }
  return Pair(p.alphabet_ptr(), std::move(w[0]), std::move(w[1]));
}

/// The one-line permutation pi(i) = p1(p0⁻¹(i)) of {0..N-1}; printed 1-based.
class NonLabeledPerm {
 public:
  NonLabeledPerm() = default;
  explicit NonLabeledPerm(std::vector<Letter> one_line) : one_line_(std::move(one_line)) {
    Permutation check(one_line_);  // validates bijectivity
  }

  std::size_t size() const noexcept { return one_line_.size(); }
  Letter operator()(std::size_t i) const { return one_line_[i]; }
  std::span<const Letter> one_line() const noexcept { return one_line_; }

  friend bool operator==(const NonLabeledPerm&, const NonLabeledPerm&) = default;
  friend auto operator<=>(const NonLabeledPerm& l, const NonLabeledPerm& r) { return l.one_line_ <=> r.one_line_; }

 private:
  std::vector<Letter> one_line_;
};

inline std::string format_nonlabeled(const NonLabeledPerm& pi) {
  std::string out = "[";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pi(i) + 1);
  }
  return out + "]";
}

inline NonLabeledPerm to_nonlabeled(const Pair& p) {
  std::vector<Letter> pi(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pi[i] = static_cast<Letter>(p.position(Row::bottom, p.at(Row::top, i)));
  return NonLabeledPerm(std::move(pi));
}

/// The pair with top row = alphabet order and bottom row realizing pi.
inline Pair from_nonlabeled(const NonLabeledPerm& pi, std::shared_ptr<const Alphabet> alphabet) {
  const auto n = pi.size();
  std::vector<Letter> top(n), bottom(n);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = static_cast<Letter>(i);
    bottom[pi(i)] = static_cast<Letter>(i);
  }
  return Pair(std::move(alphabet), std::move(top), std::move(bottom));
}

// ---------------------------------------------------------------------------
// Packed pairs: rows as 64-bit words, four bits per letter, position 0 in the
// most significant nibble. Numeric order on (top, bottom) therefore equals
// lexicographic order on the row words. Used by the enumeration engine.

struct PackedPair {
  std::uint64_t top = 0;
  std::uint64_t bottom = 0;

  friend bool operator==(const PackedPair&, const PackedPair&) = default;
  friend auto operator<=>(const PackedPair&, const PackedPair&) = default;
};

namespace packed {

inline unsigned get(std::uint64_t row, std::size_t i) { return static_cast<unsigned>((row >> (60 - 4 * i)) & 0xF); }
inline std::uint64_t put(std::uint64_t row, std::size_t i, unsigned l) {
  const auto shift = 60 - 4 * i;
  return (row & ~(std::uint64_t{0xF} << shift)) | (std::uint64_t{l} << shift);
}
inline std::size_t find(std::uint64_t row, unsigned l, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (get(row, i) == l) return i;
  }
  return n;
}

inline std::uint64_t& row_of(PackedPair& p, Row r) { return r == Row::top ? p.top : p.bottom; }
inline std::uint64_t row_of(const PackedPair& p, Row r) { return r == Row::top ? p.top : p.bottom; }

}  // namespace packed

inline PackedPair pack(const Pair& p) {
  PackedPair out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.top = packed::put(out.top, i, p.at(Row::top, i));
    out.bottom = packed::put(out.bottom, i, p.at(Row::bottom, i));
  }
  return out;
}

inline Pair unpack(const PackedPair& k, std::shared_ptr<const Alphabet> alphabet) {
  const auto n = alphabet->size();
  std::vector<Letter> top(n), bottom(n);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = static_cast<Letter>(packed::get(k.top, i));
    bottom[i] = static_cast<Letter>(packed::get(k.bottom, i));
  }
  return Pair(std::move(alphabet), std::move(top), std::move(bottom));
}

/// Induction on a packed irreducible pair of size n (irreducibility is not re-checked).
inline PackedPair induce_packed(PackedPair p, Move m, std::size_t n) {
  const auto winner = packed::row_of(p, m.row);
  auto& row = packed::row_of(p, other(m.row));
  if (m.side == Side::right) {
    const auto anchor = packed::find(row, packed::get(winner, n - 1), n);
    const auto moved = packed::get(row, n - 1);
    for (std::size_t i = n - 1; i > anchor + 1; --i) row = packed::put(row, i, packed::get(row, i - 1));
    row = packed::put(row, anchor + 1, moved);
  } else {
    const auto anchor = packed::find(row, packed::get(winner, 0), n);
    const auto moved = packed::get(row, 0);
    for (std::size_t i = 0; i + 1 < anchor; ++i) row = packed::put(row, i, packed::get(row, i + 1));
    row = packed::put(row, anchor - 1, moved);
  }
  return p;
}

/// Packed one-line image of to_nonlabeled (same nibble layout as a row).
inline std::uint64_t nonlabeled_key(const PackedPair& p, std::size_t n) {
  std::array<unsigned, kMaxLetters> bottom_pos{};
  for (std::size_t i = 0; i < n; ++i) bottom_pos[packed::get(p.bottom, i)] = static_cast<unsigned>(i);
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i) key = packed::put(key, i, bottom_pos[packed::get(p.top, i)]);
  return key;
}

inline NonLabeledPerm unpack_nonlabeled(std::uint64_t key, std::size_t n) {
  std::vector<Letter> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<Letter>(packed::get(key, i));
  return NonLabeledPerm(std::move(pi));
}

/// nu with q = rep∘nu, given that q and rep have the same non-labeled image.
inline Permutation renaming_between(const PackedPair& rep, const PackedPair& q, std::size_t n) {
  std::vector<Letter> nu(n);
  for (std::size_t i = 0; i < n; ++i) nu[packed::get(q.top, i)] = static_cast<Letter>(packed::get(rep.top, i));
  return Permutation(std::move(nu));
}

/// nu with q = p∘nu, or throws when q is not a renaming of p.
inline Permutation renaming_between(const Pair& p, const Pair& q) {
  if (p.size() != q.size()) throw std::invalid_argument("pairs of different sizes");
  if (to_nonlabeled(p) != to_nonlabeled(q)) throw std::invalid_argument("pairs are not renamings of each other");
  return renaming_between(pack(p), pack(q), p.size());
}

}  // namespace rauzy

template <>
struct std::hash<rauzy::PackedPair> {
  std::size_t operator()(const rauzy::PackedPair& p) const noexcept {
    std::uint64_t h = p.top * 0x9E3779B97F4A7C15ULL;
    h ^= (p.bottom + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};
