#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "rauzy/error.hpp"
#include "rauzy/group.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/pair.hpp"
#include "rauzy/search.hpp"

namespace rauzy {

/// A closed orbit of labeled pairs under the flavor's induction moves.
struct ClassEnumeration {
  Flavor flavor = Flavor::extended;
  std::shared_ptr<const Alphabet> alphabet;
  std::vector<PackedPair> members;  ///< sorted by row words
  std::size_t nonlabeled_size = 0;
  /// Optional adjacency: edges[i][k] is the member index reached from
  /// members[i] by the k-th move of the flavor (R0, R1[, L0, L1]).
  std::optional<std::vector<std::array<std::uint32_t, 4>>> edges;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t letters() const noexcept { return alphabet->size(); }
  Pair member(std::size_t i) const { return unpack(members[i], alphabet); }

  std::optional<std::size_t> index_of(const PackedPair& k) const {
    const auto it = std::lower_bound(members.begin(), members.end(), k);
    if (it == members.end() || !(*it == k)) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  }
  bool contains(const Pair& p) const { return p.size() == letters() && index_of(pack(p)).has_value(); }
};

struct EnumerationOptions {
  std::size_t budget = kDefaultLabeledBudget;
  bool with_edges = false;
};

namespace detail {

inline std::size_t count_nonlabeled(const std::vector<PackedPair>& members, std::size_t n) {
  std::vector<std::uint64_t> keys;
  keys.reserve(members.size());
  for (const auto& m : members) keys.push_back(nonlabeled_key(m, n));
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

inline void attach_edges(ClassEnumeration& c) {
  const auto n = c.letters();
  const auto moves = moves_of(c.flavor);
  std::vector<std::array<std::uint32_t, 4>> edges(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    edges[i].fill(KeyIndex<PackedPair>::kEmpty);
    for (std::size_t k = 0; k < moves.size(); ++k) {
      const auto to = c.index_of(induce_packed(c.members[i], moves[k], n));
      if (!to) throw std::logic_error("class enumeration is not closed");
      edges[i][k] = static_cast<std::uint32_t>(*to);
    }
  }
  c.edges = std::move(edges);
}

}  // namespace detail

/// Labeled class of p under the flavor's moves (breadth-first, budgeted).
inline ClassEnumeration enumerate_class(const Pair& p, Flavor flavor, const EnumerationOptions& opts = {}) {
  require_irreducible(p, "class enumeration");
  const auto n = p.size();
  const auto moves = moves_of(flavor);
  detail::KeyIndex<PackedPair> seen;
  seen.insert(pack(p));
  for (std::size_t head = 0; head < seen.size(); ++head) {
    const auto cur = seen[head];
    for (const auto m : moves) {
      if (seen.insert(induce_packed(cur, m, n)).second && seen.size() > opts.budget) {
        throw BudgetExceeded(std::string(to_string(flavor)) + " class of " + format_pair(p), seen.size(),
                             seen.size() - head - 1);
      }
    }
  }
  ClassEnumeration out;
  out.flavor = flavor;
  out.alphabet = p.alphabet_ptr();
  out.members = seen.keys();
  std::sort(out.members.begin(), out.members.end());
  out.nonlabeled_size = detail::count_nonlabeled(out.members, n);
  if (opts.with_edges) detail::attach_edges(out);
  return out;
}

inline ClassEnumeration rauzy_class(const Pair& p, const EnumerationOptions& opts = {}) {
  return enumerate_class(p, Flavor::right_only, opts);
}

inline ClassEnumeration extended_class(const Pair& p, const EnumerationOptions& opts = {}) {
  return enumerate_class(p, Flavor::extended, opts);
}

/// Non-labeled members (one-line images), sorted.
inline std::vector<NonLabeledPerm> nonlabeled_class(const Pair& p, Flavor flavor,
                                                    std::size_t budget = kDefaultNonLabeledBudget) {
  require_irreducible(p, "class enumeration");
  const auto w = NonLabeledWalk::run(pack(p), p.size(), moves_of(flavor), budget);
  auto keys = w.keys.keys();
  std::sort(keys.begin(), keys.end());
  std::vector<NonLabeledPerm> out;
  for (auto k : keys) out.push_back(unpack_nonlabeled(k, p.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Renaming groups Γ(p) = {ν : p∘ν in the extended class of p}.

struct RenamingGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  ///< sorted
  GroupClassification classification;

  std::uint64_t order() const noexcept { return classification.order; }
};

namespace detail {

inline GroupClassification classify_elements(const std::vector<Permutation>& elements, std::size_t n) {
  const auto full = factorial(n);
  if (elements.size() == full) return {GroupKind::symmetric, full};
  const bool all_even = std::all_of(elements.begin(), elements.end(), [](const auto& g) { return is_even(g); });
  if (elements.size() * 2 == full && all_even) return {GroupKind::alternating, full / 2};
  return {GroupKind::other, elements.size()};
}

}  // namespace detail

/// Direct membership test of every renaming against the labeled extended class.
inline RenamingGroup renaming_group_bruteforce(const Pair& p, std::size_t budget = kDefaultLabeledBudget) {
  const auto n = p.size();
  if (n > kClosureCap) throw CapExceeded("brute-force renaming group limited to " + std::to_string(kClosureCap) + " letters");
  ClassEnumeration cls;
  try {
    cls = extended_class(p, {budget, false});
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(e.what()) + "; use the holonomy method", e.members(), e.frontier());
  }
  RenamingGroup g;
  std::vector<Letter> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Letter>(i);
  do {
    Permutation nu(image);
    if (cls.index_of(pack(rename(p, nu)))) g.elements.push_back(std::move(nu));
  } while (std::next_permutation(image.begin(), image.end()));
  if (closure(g.elements, n) != g.elements) throw std::logic_error("renamings of the class do not form a group");
  g.generators = g.elements;
  g.classification = detail::classify_elements(g.elements, n);
  return g;
}

/// Discrepancy renamings from a breadth-first walk over the non-labeled
/// extended class: whenever a move reaches an already-seen non-labeled node
/// with a labeled pair q, q = rep∘δ for that node's representative and δ is
/// a renaming. These generate Γ(p). Sorted and deduplicated.
inline std::vector<Permutation> holonomy_generators(const Pair& p, std::size_t budget = kDefaultNonLabeledBudget) {
  require_irreducible(p, "renaming group");
  const auto n = p.size();
  const auto walk = NonLabeledWalk::run(pack(p), n, kAllMoves, budget);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Permutation> gens;
  for (const auto& rep : walk.reps) {
    for (const auto m : kAllMoves) {
      const auto q = induce_packed(rep, m, n);
      const auto id = walk.keys.find(nonlabeled_key(q, n));
      if (!id) throw std::logic_error("non-labeled class is not closed");
      const auto& known = walk.reps[*id];
      if (known == q) continue;
      auto delta = renaming_between(known, q, n);
      if (seen.insert(pack(delta)).second) gens.push_back(std::move(delta));
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

/// Γ(p) by the holonomy method; elements are listed when N <= kClosureCap.
inline RenamingGroup renaming_group(const Pair& p, std::size_t budget = kDefaultNonLabeledBudget) {
  RenamingGroup g;
  g.generators = holonomy_generators(p, budget);
  const auto n = p.size();
  if (n > kClosureCap) throw CapExceeded("renaming group closure limited to " + std::to_string(kClosureCap) + " letters");
  g.elements = closure(g.generators, n);
  g.classification = detail::classify_elements(g.elements, n);
  return g;
}

// ---------------------------------------------------------------------------

struct RatioReport {
  Profile profile;
  bool simple = false;
  std::uint64_t predicted = 0;             ///< N!/2 for a simple profile, N! otherwise
  std::uint64_t computed = 0;              ///< |Γ(p)| from holonomy
  GroupClassification group;
  std::size_t nonlabeled_size = 0;
  std::optional<std::size_t> labeled_size;  ///< when the labeled class fits the budget
  bool pass = false;
};

/// Compares the predicted covering degree with |Γ(p)|, and when affordable
/// with #labeled / #non-labeled of the extended class.
inline RatioReport verify_ratio(const Pair& p, const Budget& budget = {}) {
  require_irreducible(p, "verify_ratio");
  RatioReport r;
  const auto n = p.size();
  r.profile = profile(p);
  r.simple = r.profile.simple();
  r.predicted = r.simple ? factorial(n) / 2 : factorial(n);
  if (n == 2) r.predicted = 1;  // Sym and Alt of two letters differ only by the swap, which never occurs
  const auto g = renaming_group(p, budget.nonlabeled);
  r.group = g.classification;
  r.computed = g.order();
  r.nonlabeled_size = NonLabeledWalk::run(pack(p), n, kAllMoves, budget.nonlabeled).reps.size();
  bool fiber_ok = true;
  if (r.computed * r.nonlabeled_size <= budget.labeled) {
    r.labeled_size = extended_class(p, {budget.labeled, false}).size();
    fiber_ok = *r.labeled_size == r.computed * r.nonlabeled_size;
  }
  r.pass = r.predicted == r.computed && fiber_ok;
  return r;
}

// ---------------------------------------------------------------------------
// Pattern search.

/// Shortest induction word from p to target within the flavor's class, or
/// nullopt when the class closes without it. Throws BudgetExceeded.
inline std::optional<std::vector<Move>> find_pattern(const Pair& p, const Pair& target, Flavor flavor,
                                                     std::size_t budget = kDefaultLabeledBudget) {
  require_irreducible(p, "find_pattern");
  if (target.size() != p.size() || !(target.alphabet() == p.alphabet())) return std::nullopt;
  const auto goal = pack(target);
  const auto tree = SearchTree::build(pack(p), p.size(), moves_of(flavor), budget,
                                      [&](const PackedPair& k) { return k == goal; });
  if (const auto hit = tree.find(goal)) return tree.word_to(*hit);
  return std::nullopt;
}

struct RenamedMatch {
  std::vector<Move> word;
  Pair reached;      ///< induce(p, word)
  Permutation renaming;  ///< reached = target∘renaming, target letters taken by index
};

/// Like find_pattern, but any renaming of target counts (the target may use
/// its own alphabet of the same size).
inline std::optional<RenamedMatch> find_pattern_up_to_renaming(const Pair& p, const Pair& target, Flavor flavor,
                                                               std::size_t budget = kDefaultNonLabeledBudget) {
  require_irreducible(p, "find_pattern");
  if (target.size() != p.size()) return std::nullopt;
  const auto n = p.size();
  const auto goal = nonlabeled_key(pack(target), n);
  std::optional<std::uint32_t> hit;
  const auto walk = NonLabeledWalk::run(
      pack(p), n, moves_of(flavor), budget,
      [&](std::uint32_t id, const PackedPair& rep) {
        if (nonlabeled_key(rep, n) != goal) return false;
        hit = id;
        return true;
      },
      [](std::uint32_t, const PackedPair&) {});
  if (!hit) return std::nullopt;
  RenamedMatch out;
  out.word = walk.word_to(*hit);
  out.reached = unpack(walk.reps[*hit], p.alphabet_ptr());
  out.renaming = renaming_between(pack(target), walk.reps[*hit], n);
  return out;
}

// ---------------------------------------------------------------------------
// Cache files: header `rauzy-cache v1 <flavor> <a,b,...>`, then one member per
// line in pair text format, sorted by row words.

inline void store_cache(const ClassEnumeration& c, std::ostream& out) {
  out << "rauzy-cache v1 " << to_string(c.flavor) << ' ';
  for (std::size_t i = 0; i < c.letters(); ++i) {
    if (i) out << ',';
    out << c.alphabet->name(static_cast<Letter>(i));
  }
  out << '\n';
  for (std::size_t i = 0; i < c.size(); ++i) out << format_pair(c.member(i)) << '\n';
}

inline std::string cache_text(const ClassEnumeration& c) {
  std::ostringstream s;
  store_cache(c, s);
  return s.str();
}

/// Reads a cache; ParseError::column() is the 1-based line number.
inline ClassEnumeration load_cache(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string::npos) {
      throw ParseError("truncated cache: line without newline", lines.size() + 1);
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty cache file", 1);

  std::istringstream header(lines[0]);
  std::string magic, version, flavor, letters, extra;
  header >> magic >> version >> flavor >> letters;
  if (magic != "rauzy-cache") throw ParseError("not a rauzy cache", 1);
  if (version != "v1") throw ParseError("unsupported cache version '" + version + "'", 1);
  if (letters.empty() || (header >> extra)) throw ParseError("malformed cache header", 1);
  ClassEnumeration c;
  try {
    c.flavor = parse_flavor(flavor);
    std::vector<std::string> names;
    std::size_t from = 0;
    for (;;) {
      const auto comma = letters.find(',', from);
      names.push_back(letters.substr(from, comma == std::string::npos ? std::string::npos : comma - from));
      if (comma == std::string::npos) break;
      from = comma + 1;
    }
    c.alphabet = std::make_shared<const Alphabet>(std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1);
  }
  const auto n = c.letters();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    PackedPair k;
    try {
      const auto q = parse_pair(lines[i], c.alphabet);
      if (!is_irreducible(q)) throw ParseError("reducible member", 1);
      k = pack(q);
    } catch (const std::exception& e) {
      throw ParseError(std::string("corrupt cache line: ") + e.what(), i + 1);
    }
    if (!c.members.empty() && !(c.members.back() < k)) throw ParseError("cache lines out of order", i + 1);
    c.members.push_back(k);
  }
  if (c.members.empty()) throw ParseError("truncated cache: no members", 2);
  for (const auto& k : c.members) {
    for (const auto m : moves_of(c.flavor)) {
      if (!c.index_of(induce_packed(k, m, n))) {
        throw ParseError("truncated cache: member set not closed under induction", lines.size() + 1);
      }
    }
  }
  c.nonlabeled_size = detail::count_nonlabeled(c.members, n);
  return c;
}

inline ClassEnumeration load_cache_text(const std::string& text) {
  std::istringstream s(text);
  return load_cache(s);
}

}  // namespace rauzy
