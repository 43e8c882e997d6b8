#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rauzy {

/// Letters are dense indices into an Alphabet.
using Letter = std::uint8_t;

/// Packed encodings use four bits per letter.
inline constexpr std::size_t kMaxLetters = 16;

/// Orders names numerically when both are digit strings, digits before
/// anything else, and bytewise otherwise.
inline bool natural_less(std::string_view lhs, std::string_view rhs) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (digit(lhs[i]) && digit(rhs[j])) {
      auto run = [&](std::string_view s, std::size_t& k) {
        const auto begin = k;
        while (k < s.size() && digit(s[k])) ++k;
        auto r = s.substr(begin, k - begin);
        const auto nz = r.find_first_not_of('0');
        return nz == std::string_view::npos ? std::string_view("0") : r.substr(nz);
      };
      const auto l = run(lhs, i);
      const auto r = run(rhs, j);
      if (l.size() != r.size()) return l.size() < r.size();
      if (l != r) return l < r;
      continue;
    }
    if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
    ++i;
    ++j;
  }
  if ((i < lhs.size()) != (j < rhs.size())) return j < rhs.size();
  return lhs < rhs;
}

/// An ordered list of distinct letter names. The order only affects display
/// (cycle starts, cycle order, cache headers), never semantics.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxLetters) {
      throw std::invalid_argument("alphabet has " + std::to_string(names_.size()) +
                                  " letters; at most " + std::to_string(kMaxLetters) + " supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty letter name");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate letter '" + names_[i] + "'");
      }
    }
  }

  /// a, b, c, ... (N <= 16).
  static Alphabet latin(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(names));
  }

  /// 1, 2, ..., N.
  static Alphabet numbered(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return Alphabet(std::move(names));
  }

  /// Names sorted by natural_less.
  static Alphabet sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end(), [](const auto& l, const auto& r) { return natural_less(l, r); });
    return Alphabet(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Letter> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<Letter>(i);
    }
    return std::nullopt;
  }

  Letter index(std::string_view name) const {
    if (auto l = find(name)) return *l;
    throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// Copy with one more letter appended at index size().
  Alphabet with_letter(std::string name) const {
    auto names = names_;
    names.push_back(std::move(name));
    return Alphabet(std::move(names));
  }

  /// A name not yet used, of the form `stem`, `stem1`, `stem2`, ...
  std::string fresh_name(std::string_view stem = "x") const {
    if (!contains(stem)) return std::string(stem);
    for (std::size_t i = 1;; ++i) {
      auto candidate = std::string(stem) + std::to_string(i);
      if (!contains(candidate)) return candidate;
    }
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace rauzy
