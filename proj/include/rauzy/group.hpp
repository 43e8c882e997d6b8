#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "rauzy/error.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// Largest degree for which closures are enumerated element by element (8! = 40320).
inline constexpr std::size_t kClosureCap = 8;

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

enum class GroupKind : std::uint8_t { alternating, symmetric, other };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::alternating: return "Alternating";
    case GroupKind::symmetric: return "Symmetric";
    case GroupKind::other: return "Other";
  }
  return "?";
}

struct GroupClassification {
  GroupKind kind = GroupKind::other;
  std::uint64_t order = 0;

  friend bool operator==(const GroupClassification&, const GroupClassification&) = default;
};

namespace detail {

inline std::uint64_t compose_packed(std::uint64_t mu, std::uint64_t nu, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto nx = (nu >> (4 * x)) & 0xF;
    const auto mnx = (mu >> (4 * nx)) & 0xF;
    out |= mnx << (4 * x);
  }
  return out;
}

inline std::uint64_t identity_packed(std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < n; ++x) out |= std::uint64_t{x} << (4 * x);
  return out;
}

inline void check_degrees(std::span<const Permutation> gens, std::size_t n) {
  if (n > kClosureCap) {
    throw CapExceeded("closure enumeration limited to " + std::to_string(kClosureCap) + " letters, got " +
                      std::to_string(n));
  }
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("generator over a different alphabet");
  }
}

/// Breadth-first closure under right multiplication by the generators.
/// Stops early (returning false) once the element count exceeds `stop_above`.
inline bool closure_packed(std::span<const Permutation> gens, std::size_t n, std::uint64_t stop_above,
                           std::vector<std::uint64_t>& elements) {
  std::vector<std::uint64_t> gp;
  for (const auto& g : gens) {
    if (!g.is_identity()) gp.push_back(pack(g));
  }
  std::sort(gp.begin(), gp.end());
  gp.erase(std::unique(gp.begin(), gp.end()), gp.end());

  std::unordered_set<std::uint64_t> seen;
  elements.clear();
  const auto id = identity_packed(n);
  seen.insert(id);
  elements.push_back(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const auto e = elements[head];
    for (const auto g : gp) {
      const auto h = compose_packed(e, g, n);
      if (seen.insert(h).second) {
        elements.push_back(h);
        if (elements.size() > stop_above) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Every element of <gens>, sorted. Degree must be at most kClosureCap.
inline std::vector<Permutation> closure(std::span<const Permutation> gens, std::size_t n) {
  detail::check_degrees(gens, n);
  std::vector<std::uint64_t> packed;
  detail::closure_packed(gens, n, UINT64_MAX, packed);
  std::vector<Permutation> out;
  out.reserve(packed.size());
  for (auto k : packed) out.push_back(unpack_permutation(k, n));
  std::sort(out.begin(), out.end());
  return out;
}

/// Classifies <gens> as Alt(n), Sym(n) or something else. Enumerates the
/// closure, stopping as soon as it outgrows n!/2 (then it must be Sym(n)).
inline GroupClassification classify_generated(std::span<const Permutation> gens, std::size_t n) {
  detail::check_degrees(gens, n);
  const auto full = factorial(n);
  if (n < 2) return {GroupKind::symmetric, 1};
  std::vector<std::uint64_t> elements;
  const bool complete = detail::closure_packed(gens, n, full / 2, elements);
  if (!complete || elements.size() == full) return {GroupKind::symmetric, full};
  const bool all_even = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return is_even(g); });
  if (elements.size() == full / 2 && all_even) return {GroupKind::alternating, full / 2};
  return {GroupKind::other, elements.size()};
}

inline GroupClassification classify_generated(std::initializer_list<Permutation> gens, std::size_t n) {
  return classify_generated(std::span<const Permutation>(gens.begin(), gens.size()), n);
}

/// Generators of Sym(B) for a sub-alphabet B (a transposition and a |B|-cycle).
inline std::vector<Permutation> symmetric_generators(std::span<const Letter> subset, std::size_t n) {
  std::vector<Permutation> out;
  if (subset.size() < 2) return out;
  out.push_back(cycle_of({subset[0], subset[1]}, n));
  if (subset.size() > 2) out.push_back(cycle_of(Cycle(subset.begin(), subset.end()), n));
  return out;
}

/// Generators of Alt(B): the 3-cycles (b0, b1, bi).
inline std::vector<Permutation> alternating_generators(std::span<const Letter> subset, std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t i = 2; i < subset.size(); ++i) out.push_back(cycle_of({subset[0], subset[1], subset[i]}, n));
  return out;
}

/// Whether every generator lies in the sorted element list.
inline bool contains_all(std::span<const Permutation> sorted_elements, std::span<const Permutation> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const auto& g) {
    return std::binary_search(sorted_elements.begin(), sorted_elements.end(), g);
  });
}

}  // namespace rauzy
