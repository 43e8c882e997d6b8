#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rauzy/blocks.hpp"
#include "rauzy/classes.hpp"
#include "rauzy/invariants.hpp"
#include "rauzy/pair.hpp"

namespace rauzy::cli {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"invariants", "renamings", "class",     "extended-class",
                                          "verify-ratio", "spin",    "decompose", "find-pattern"};
  return v;
}

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Command {
  std::string verb;
  std::string pair;
  std::optional<std::string> target;  ///< find-pattern only
  bool json = false;
  std::optional<std::size_t> budget;
  std::optional<std::string> cache;
  Flavor flavor = Flavor::extended;
};

struct Outcome {
  int exit_code = kOk;
  std::string out;  ///< stdout (text report or one JSON document)
  std::string err;  ///< stderr diagnostics (text mode only)
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Report {
 public:
  explicit Report(const Command& cmd, const Budget& budget) {
    doc_["input"] = {{"verb", cmd.verb},
                     {"pair", cmd.pair},
                     {"target", cmd.target ? Json(*cmd.target) : Json()},
                     {"flavor", to_string(cmd.flavor)},
                     {"budget", {{"labeled", budget.labeled}, {"nonlabeled", budget.nonlabeled}}}};
    doc_["invariants"] = Json::object();
    doc_["sizes"] = Json::object();
    doc_["group"] = Json();
    doc_["verdict"] = Json();
  }

  Json& invariants() { return doc_["invariants"]; }
  Json& sizes() { return doc_["sizes"]; }
  Json& group() { return doc_["group"]; }

  void line(const std::string& key, const std::string& value) { text_ << key << ": " << value << '\n'; }

  Outcome finish(int code, const std::string& status, const std::string& message, bool json, Json extra = {}) {
    Json v{{"status", status}, {"exit_code", code}, {"message", message}};
    if (extra.is_object()) v.update(extra);
    doc_["verdict"] = std::move(v);
    Outcome o;
    o.exit_code = code;
    if (json) {
      o.out = doc_.dump(2) + "\n";
    } else {
      o.out = text_.str();
      if (code == kOk || code == kFailed) {
        o.out += "verdict: " + status + "\n";
      } else {
        o.err = "error: " + message + "\n";
      }
    }
    return o;
  }

 private:
  Json doc_;
  std::ostringstream text_;
};

inline void basic_invariants(Report& r, const Pair& p) {
  const auto& al = p.alphabet();
  const auto ms = marked_structure(p);
  const auto pr = profile(ms);
  auto& inv = r.invariants();
  inv["irreducible"] = true;
  inv["standard"] = is_standard(p);
  inv["sigma"] = format_cycles(sigma(p), al);
  inv["marked_structure"] = format_marked(ms, al);
  inv["profile"] = format_profile(pr);
  inv["simple"] = pr.simple();
  r.line("sigma", format_cycles(sigma(p), al));
  r.line("marked structure", format_marked(ms, al));
  r.line("profile", format_profile(pr));
  r.line("simple", yes_no(pr.simple()));
}

inline Json group_json(const RenamingGroup& g, const Alphabet& al) {
  Json gens = Json::array();
  for (const auto& x : g.generators) gens.push_back(format_cycles(x, al));
  return {{"kind", to_string(g.classification.kind)}, {"order", g.order()}, {"generators", gens}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path + "'");
}

/// Loads the cache when it holds p's class for this flavor, otherwise
/// enumerates and (re)writes it.
inline ClassEnumeration class_with_cache(const Pair& p, Flavor flavor, const Budget& b,
                                         const std::optional<std::string>& cache, bool& from_cache) {
  from_cache = false;
  if (cache && std::filesystem::exists(*cache)) {
    auto c = load_cache_text(read_file(*cache));
    if (c.flavor == flavor && *c.alphabet == p.alphabet() && c.contains(p)) {
      from_cache = true;
      return c;
    }
  }
  auto c = enumerate_class(p, flavor, {b.labeled, false});
  if (cache) write_file(*cache, cache_text(c));
  return c;
}

inline Outcome dispatch(const Command& cmd, Report& r, const Pair& p, const Budget& b) {
  const auto& al = p.alphabet();
  const auto& verb = cmd.verb;

  if (verb == "invariants") {
    basic_invariants(r, p);
    return r.finish(kOk, "ok", "", cmd.json);
  }

  if (verb == "class" || verb == "extended-class") {
    const auto flavor = verb == "class" ? Flavor::right_only : Flavor::extended;
    bool from_cache = false;
    const auto c = class_with_cache(p, flavor, b, cmd.cache, from_cache);
    r.sizes()["flavor"] = to_string(flavor);
    r.sizes()["labeled"] = c.size();
    r.sizes()["nonlabeled"] = c.nonlabeled_size;
    r.line("flavor", to_string(flavor));
    r.line("labeled", std::to_string(c.size()));
    r.line("non-labeled", std::to_string(c.nonlabeled_size));
    if (cmd.cache) r.line("cache", std::string(from_cache ? "loaded " : "stored ") + *cmd.cache);
    return r.finish(kOk, "ok", "", cmd.json, Json{{"cache", cmd.cache ? Json(from_cache ? "loaded" : "stored") : Json()}});
  }

  if (verb == "renamings") {
    const auto g = renaming_group(p, b.nonlabeled);
    r.group() = group_json(g, al);
    r.line("group", std::string(to_string(g.classification.kind)) + " of order " + std::to_string(g.order()));
    for (const auto& x : g.generators) r.line("generator", format_cycles(x, al));
    return r.finish(kOk, "ok", "", cmd.json);
  }

  if (verb == "verify-ratio") {
    basic_invariants(r, p);
    const auto rep = verify_ratio(p, b);
    r.sizes()["nonlabeled"] = rep.nonlabeled_size;
    r.sizes()["labeled"] = rep.labeled_size ? Json(*rep.labeled_size) : Json();
    r.group() = {{"kind", to_string(rep.group.kind)}, {"order", rep.computed}, {"predicted", rep.predicted}};
    r.line("predicted", std::to_string(rep.predicted));
    r.line("computed", std::to_string(rep.computed));
    r.line("group", to_string(rep.group.kind));
    r.line("non-labeled", std::to_string(rep.nonlabeled_size));
    r.line("labeled", rep.labeled_size ? std::to_string(*rep.labeled_size) : "skipped");
    return r.finish(rep.pass ? kOk : kFailed, rep.pass ? "pass" : "fail",
                    rep.pass ? "" : "computed group order or fiber count differs from the prediction", cmd.json);
  }

  if (verb == "spin") {
    basic_invariants(r, p);
    const auto s = spin_report(p, b.nonlabeled);
    r.invariants()["spin"] = to_string(s.value);
    r.invariants()["spin_representative"] = s.representative ? Json(format_pair(*s.representative)) : Json();
    r.line("spin", to_string(s.value));
    if (s.representative) r.line("representative", format_pair(*s.representative));
    if (!s.diagnostic.empty()) r.line("note", s.diagnostic);
    return r.finish(kOk, "ok", s.diagnostic, cmd.json);
  }

  if (verb == "decompose") {
    if (!is_standard(p)) return r.finish(kUsage, "error", "decompose needs a standard pair", cmd.json);
    basic_invariants(r, p);
    const auto d = decompose(p);
    const auto tag = d ? classify_type(*d) : TypeTag::none;
    Json blocks;
    if (d) {
      blocks = Json::array();
      for (const auto& blk : d->blocks) {
        Json letters = Json::array();
        std::string shown;
        for (auto l : blk.letters) {
          letters.push_back(al.name(l));
          shown += (shown.empty() ? "" : " ") + al.name(l);
        }
        blocks.push_back({{"letters", letters}, {"form", blk.form}, {"params", {{"m", blk.m}, {"n", blk.n}}}});
        r.line("block", "form " + std::to_string(blk.form) + " m=" + std::to_string(blk.m) + " n=" +
                            std::to_string(blk.n) + " [" + shown + "]");
      }
    } else {
      r.line("blocks", "none (some segment is not a reversal)");
    }
    r.invariants()["decomposition"] = blocks;
    r.invariants()["type"] = to_string(tag);
    r.line("type", to_string(tag));
    return r.finish(kOk, "ok", "", cmd.json);
  }

  if (verb == "find-pattern") {
    if (!cmd.target) return r.finish(kUsage, "error", "find-pattern needs a target pair", cmd.json);
    const auto target = parse_pair(*cmd.target, p.alphabet_ptr());
    const auto word = find_pattern(p, target, cmd.flavor, b.labeled);
    if (!word) {
      r.line("path", "none");
      return r.finish(kFailed, "fail", "target is not in the class", cmd.json, Json{{"path", Json()}});
    }
    const auto shown = format_word(*word);
    r.line("path", word->empty() ? "(empty)" : shown);
    r.line("length", std::to_string(word->size()));
    return r.finish(kOk, "pass", "", cmd.json, Json{{"path", shown}, {"length", word->size()}});
  }

  return r.finish(kUsage, "error", "unknown verb '" + verb + "'", cmd.json);
}

}  // namespace detail

/// Runs one verb. Never throws for input problems: parse errors, reducible
/// pairs and bad flags give exit 2, exhausted budgets or size caps give 3.
inline Outcome run(const Command& cmd) {
  const auto budget = cmd.budget ? Budget::from_labeled(*cmd.budget) : Budget::from_environment();
  detail::Report r(cmd, budget);
  try {
    const auto p = parse_pair(cmd.pair);
    if (!is_irreducible(p)) {
      r.invariants()["irreducible"] = false;
      r.line("irreducible", "no");
      return r.finish(kUsage, "error", "pair is reducible", cmd.json);
    }
    return detail::dispatch(cmd, r, p, budget);
  } catch (const BudgetExceeded& e) {
    return r.finish(kBudget, "budget_exceeded", e.what(), cmd.json);
  } catch (const CapExceeded& e) {
    return r.finish(kBudget, "budget_exceeded", e.what(), cmd.json);
  } catch (const std::invalid_argument& e) {
    return r.finish(kUsage, "error", e.what(), cmd.json);
  } catch (const std::runtime_error& e) {
    return r.finish(kUsage, "error", e.what(), cmd.json);
  }
}

}  // namespace rauzy::cli
