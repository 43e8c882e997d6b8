#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/alphabet.hpp"
#include "rauzy/error.hpp"

namespace rauzy {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator^(Parity l, Parity r) {
  return static_cast<Parity>(static_cast<std::uint8_t>(l) ^ static_cast<std::uint8_t>(r));
}

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

using Cycle = std::vector<Letter>;

/// A bijection of {0, ..., N-1} (letter indices of some alphabet).
/// Application is `perm(x)`; multiplication is composition, `(mu * nu)(x) = mu(nu(x))`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on n letters.
  explicit Permutation(std::size_t n) : image_(n) {
    if (n > kMaxLetters) throw std::invalid_argument("permutation degree exceeds letter limit");
    std::iota(image_.begin(), image_.end(), Letter{0});
  }

  /// From one-line images; throws unless `image` is a bijection.
  explicit Permutation(std::vector<Letter> image) : image_(std::move(image)) {
    if (image_.size() > kMaxLetters) throw std::invalid_argument("permutation degree exceeds letter limit");
    std::vector<bool> seen(image_.size(), false);
    for (Letter x : image_) {
      if (x >= image_.size() || seen[x]) throw std::invalid_argument("image is not a bijection");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) { return Permutation(n); }

  std::size_t size() const noexcept { return image_.size(); }
  Letter operator()(Letter x) const { return image_[x]; }
  std::span<const Letter> image() const noexcept { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& l, const Permutation& r) { return l.image_ <=> r.image_; }

 private:
  std::vector<Letter> image_;
};

/// mu∘nu. Throws on degree mismatch.
inline Permutation compose(const Permutation& mu, const Permutation& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("composing permutations over different alphabets");
  std::vector<Letter> out(mu.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = mu(nu(static_cast<Letter>(x)));
  return Permutation(std::move(out));
}

inline Permutation operator*(const Permutation& mu, const Permutation& nu) { return compose(mu, nu); }

inline Permutation inverse(const Permutation& mu) {
  std::vector<Letter> out(mu.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[mu(static_cast<Letter>(x))] = static_cast<Letter>(x);
  return Permutation(std::move(out));
}

/// Disjoint cycles of length >= 2. Each cycle starts at its smallest letter;
/// cycles are ordered by that letter.
inline std::vector<Cycle> cycles(const Permutation& mu) {
  std::vector<Cycle> out;
  std::vector<bool> seen(mu.size(), false);
  for (std::size_t start = 0; start < mu.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (auto x = static_cast<Letter>(start); !seen[x]; x = mu(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

/// Like cycles() but keeps fixed points as 1-cycles.
inline std::vector<Cycle> all_cycles(const Permutation& mu) {
  std::vector<Cycle> out;
  std::vector<bool> seen(mu.size(), false);
  for (std::size_t start = 0; start < mu.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (auto x = static_cast<Letter>(start); !seen[x]; x = mu(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Parity from the cycle count: N minus #cycles (fixed points included).
inline Parity parity(const Permutation& mu) {
  return (mu.size() - all_cycles(mu).size()) % 2 == 0 ? Parity::even : Parity::odd;
}

inline bool is_even(const Permutation& mu) { return parity(mu) == Parity::even; }

/// Builds a permutation of degree n from disjoint cycles; unlisted letters are fixed.
inline Permutation from_cycles(std::span<const Cycle> cs, std::size_t n) {
  std::vector<Letter> image(n);
  std::iota(image.begin(), image.end(), Letter{0});
  std::vector<bool> used(n, false);
  for (const auto& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw std::invalid_argument("cycle letter outside alphabet");
      if (used[c[i]]) throw std::invalid_argument("cycles overlap");
      used[c[i]] = true;
      image[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(image));
}

inline Permutation from_cycles(std::initializer_list<Cycle> cs, std::size_t n) {
  return from_cycles(std::span<const Cycle>(cs.begin(), cs.size()), n);
}

/// A single cycle.
inline Permutation cycle_of(const Cycle& c, std::size_t n) { return from_cycles({c}, n); }

inline std::string format_cycle(std::span<const Letter> c, const Alphabet& alphabet) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += alphabet.name(c[i]);
  }
  out += ')';
  return out;
}

/// Cycle notation `(a,b,c)(d,e)`; the identity prints as the empty string.
inline std::string format_cycles(const Permutation& mu, const Alphabet& alphabet) {
  if (mu.size() != alphabet.size()) throw std::invalid_argument("permutation and alphabet differ in size");
  std::string out;
  for (const auto& c : cycles(mu)) out += format_cycle(c, alphabet);
  return out;
}

/// Parses cycle notation over `alphabet`. Whitespace is ignored; the empty
/// string is the identity.
inline Permutation parse_cycles(std::string_view text, const Alphabet& alphabet) {
  std::vector<Cycle> cs;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i + 1);
    ++i;
    Cycle c;
    for (;;) {
      skip();
      const std::size_t begin = i;
      while (i < text.size() && text[i] != ',' && text[i] != ')' && text[i] != '(' && text[i] != ' ' &&
             text[i] != '\t') {
        ++i;
      }
      const auto name = text.substr(begin, i - begin);
      if (name.empty()) throw ParseError("expected letter", begin + 1);
      const auto l = alphabet.find(name);
      if (!l) throw ParseError("unknown letter '" + std::string(name) + "'", begin + 1);
      c.push_back(*l);
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle", i + 1);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i + 1);
    }
    cs.push_back(std::move(c));
    skip();
  }
  try {
    return from_cycles(cs, alphabet.size());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

/// 64-bit key for N <= 16 (four bits per image).
inline std::uint64_t pack(const Permutation& mu) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) key |= std::uint64_t{mu(static_cast<Letter>(i))} << (4 * i);
  return key;
}

inline Permutation unpack_permutation(std::uint64_t key, std::size_t n) {
  std::vector<Letter> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Letter>((key >> (4 * i)) & 0xF);
  return Permutation(std::move(image));
}

}  // namespace rauzy

template <>
struct std::hash<rauzy::Permutation> {
  std::size_t operator()(const rauzy::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(rauzy::pack(p));
  }
};
