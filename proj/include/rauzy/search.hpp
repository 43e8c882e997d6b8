#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rauzy/error.hpp"
#include "rauzy/pair.hpp"

namespace rauzy {

enum class Flavor : std::uint8_t { right_only, extended };

inline const char* to_string(Flavor f) { return f == Flavor::right_only ? "right" : "extended"; }

inline Flavor parse_flavor(std::string_view s) {
  if (s == "right" || s == "right_only") return Flavor::right_only;
  if (s == "extended") return Flavor::extended;
  throw std::invalid_argument("unknown flavor '" + std::string(s) + "' (expected right or extended)");
}

inline std::span<const Move> moves_of(Flavor f) {
  if (f == Flavor::right_only) return kRightMoves;
  return kAllMoves;
}

inline constexpr std::size_t kDefaultLabeledBudget = 5'000'000;
inline constexpr std::size_t kDefaultNonLabeledBudget = 500'000;

/// Member caps for labeled and non-labeled searches.
struct Budget {
  std::size_t labeled = kDefaultLabeledBudget;
  std::size_t nonlabeled = kDefaultNonLabeledBudget;

  /// One number sets both: the non-labeled cap is a tenth of the labeled one.
  static Budget from_labeled(std::size_t labeled) { return {labeled, std::max<std::size_t>(1, labeled / 10)}; }

  /// Defaults, overridden by RAUZYKIT_BUDGET when set to a positive integer.
  static Budget from_environment() {
    if (const char* env = std::getenv("RAUZYKIT_BUDGET")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return from_labeled(static_cast<std::size_t>(v));
    }
    return {};
  }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xFF51AFD7ED558CCDULL;
  h ^= h >> 33;
  h *= 0xC4CEB9FE1A85EC53ULL;
  h ^= h >> 33;
  return h;
}

inline std::uint64_t hash_key(std::uint64_t k) { return mix(k); }
inline std::uint64_t hash_key(const PackedPair& k) { return mix(k.top ^ mix(k.bottom)); }

/// Insertion-ordered set of keys with dense indices (open addressing over
/// indices into `keys`).
template <class Key>
class KeyIndex {
 public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  KeyIndex() : slots_(16, kEmpty) {}

  std::size_t size() const noexcept { return keys_.size(); }
  const Key& operator[](std::size_t i) const { return keys_[i]; }
  const std::vector<Key>& keys() const noexcept { return keys_; }

  std::optional<std::uint32_t> find(const Key& k) const {
    const auto mask = slots_.size() - 1;
    for (auto s = hash_key(k) & mask;; s = (s + 1) & mask) {
      const auto v = slots_[s];
      if (v == kEmpty) return std::nullopt;
      if (keys_[v] == k) return v;
    }
  }

  /// Index of `k` and whether it was newly added.
  std::pair<std::uint32_t, bool> insert(const Key& k) {
    if (2 * (keys_.size() + 1) > slots_.size()) grow();
    const auto mask = slots_.size() - 1;
    for (auto s = hash_key(k) & mask;; s = (s + 1) & mask) {
      const auto v = slots_[s];
      if (v == kEmpty) {
        slots_[s] = static_cast<std::uint32_t>(keys_.size());
        keys_.push_back(k);
        return {slots_[s], true};
      }
      if (keys_[v] == k) return {v, false};
    }
  }

 private:
  void grow() {
    std::vector<std::uint32_t> slots(slots_.size() * 2, kEmpty);
    const auto mask = slots.size() - 1;
    for (std::uint32_t i = 0; i < keys_.size(); ++i) {
      auto s = hash_key(keys_[i]) & mask;
      while (slots[s] != kEmpty) s = (s + 1) & mask;
      slots[s] = i;
    }
    slots_ = std::move(slots);
  }

  std::vector<Key> keys_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace detail

/// Breadth-first tree over labeled pairs. Nodes are numbered in discovery
/// order (FIFO, moves tried in canonical order), so the recorded path to each
/// node is its lexicographically smallest shortest induction word.
class SearchTree {
 public:
  static constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

  std::size_t size() const noexcept { return index_.size(); }
  std::size_t letters() const noexcept { return n_; }
  const PackedPair& node(std::size_t i) const { return index_[i]; }
  const std::vector<PackedPair>& nodes() const noexcept { return index_.keys(); }
  std::optional<std::uint32_t> find(const PackedPair& k) const { return index_.find(k); }
  bool complete() const noexcept { return complete_; }

  std::vector<Move> word_to(std::uint32_t i) const {
    std::vector<Move> w;
    for (; parent_[i] != kRoot; i = parent_[i]) w.push_back(via_[i]);
    return {w.rbegin(), w.rend()};
  }

  /// Expands from `start` until the class closes, `stop(node)` returns true
  /// for a newly discovered node, or the budget is exceeded (throws).
  static SearchTree build(const PackedPair& start, std::size_t n, std::span<const Move> moves, std::size_t budget,
                          const std::function<bool(const PackedPair&)>& stop = {}) {
    SearchTree t;
    t.n_ = n;
    t.index_.insert(start);
    t.parent_.push_back(kRoot);
    t.via_.push_back(Move{});
    if (stop && stop(start)) return t;
    for (std::size_t head = 0; head < t.index_.size(); ++head) {
      const auto cur = t.index_[head];
      for (const auto m : moves) {
        const auto next = induce_packed(cur, m, n);
        const auto [id, fresh] = t.index_.insert(next);
        if (!fresh) continue;
        t.parent_.push_back(static_cast<std::uint32_t>(head));
        t.via_.push_back(m);
        if (stop && stop(next)) return t;
        if (t.index_.size() > budget) {
          throw BudgetExceeded("labeled search", t.index_.size(), t.index_.size() - head - 1);
        }
      }
    }
    t.complete_ = true;
    return t;
  }

 private:
  std::size_t n_ = 0;
  detail::KeyIndex<PackedPair> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<Move> via_;
  bool complete_ = false;
};

/// Breadth-first walk over the non-labeled class, keeping the first labeled
/// pair reached for each non-labeled node as its representative.
///
/// `on_new(index, rep)` runs for each new node and may return true to stop;
/// `on_revisit(index, q)` runs whenever a move lands on a known node with
/// labeled pair q (possibly a renaming of that node's representative).
struct NonLabeledWalk {
  static constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

  detail::KeyIndex<std::uint64_t> keys;
  std::vector<PackedPair> reps;
  std::vector<std::uint32_t> parent;
  std::vector<Move> via;
  bool complete = false;

  /// Induction word from the start to node i's representative.
  std::vector<Move> word_to(std::uint32_t i) const {
    std::vector<Move> w;
    for (; parent[i] != kRoot; i = parent[i]) w.push_back(via[i]);
    return {w.rbegin(), w.rend()};
  }

  template <class OnNew, class OnRevisit>
  static NonLabeledWalk run(const PackedPair& start, std::size_t n, std::span<const Move> moves, std::size_t budget,
                            OnNew&& on_new, OnRevisit&& on_revisit) {
    NonLabeledWalk w;
    w.keys.insert(nonlabeled_key(start, n));
    w.reps.push_back(start);
    w.parent.push_back(kRoot);
    w.via.push_back(Move{});
    if (on_new(std::uint32_t{0}, start)) return w;
    for (std::size_t head = 0; head < w.reps.size(); ++head) {
      const auto cur = w.reps[head];
      for (const auto m : moves) {
        const auto next = induce_packed(cur, m, n);
        const auto [id, fresh] = w.keys.insert(nonlabeled_key(next, n));
        if (!fresh) {
          on_revisit(id, next);
          continue;
        }
        w.reps.push_back(next);
        w.parent.push_back(static_cast<std::uint32_t>(head));
        w.via.push_back(m);
        if (on_new(id, next)) return w;
        if (w.reps.size() > budget) {
          throw BudgetExceeded("non-labeled search", w.reps.size(), w.reps.size() - head - 1);
        }
      }
    }
    w.complete = true;
    return w;
  }

  static NonLabeledWalk run(const PackedPair& start, std::size_t n, std::span<const Move> moves, std::size_t budget) {
    return run(start, n, moves, budget, [](std::uint32_t, const PackedPair&) { return false; },
               [](std::uint32_t, const PackedPair&) {});
  }
};

/// The canonical labeled pair of a non-labeled key: top row 0, 1, ..., N-1.
inline PackedPair canonical_of_key(std::uint64_t key, std::size_t n) {
  PackedPair p;
  for (std::size_t i = 0; i < n; ++i) {
    p.top = packed::put(p.top, i, static_cast<unsigned>(i));
    p.bottom = packed::put(p.bottom, packed::get(key, i), static_cast<unsigned>(i));
  }
  return p;
}

}  // namespace rauzy
