#pragma once

// Dispatch of text queries to the decision procedures, with human-readable and
// JSON renderings of the result.

#include "wreathkit/dsl.hpp"

#include <json.hpp>  // vendored nlohmann/json

#include <chrono>
#include <limits>

namespace wreathkit {

/// Rejected command names or argument counts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QueryResult {
  std::string command;
  std::string group;
  std::vector<std::string> inputs;
  /// Boolean for decision commands, a string otherwise (order, normal form).
  nlohmann::json verdict;
  std::optional<std::string> witness;
  std::optional<BigInt> k;
  /// Extra lines of the human-readable form (support table, words).
  std::vector<std::string> details;
  double time_ms = 0;

  /// The answer of a yes/no query, for --exit-verdict.
  std::optional<bool> boolean() const {
    if (verdict.is_boolean()) return verdict.get<bool>();
    return std::nullopt;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"command", command}, {"group", group}, {"inputs", inputs},
                     {"verdict", verdict}};
    if (witness) j["witness"] = *witness;
    if (k) {
      // Plain numbers when they fit, decimal strings otherwise.
      if (abs(*k) <= BigInt(std::numeric_limits<long long>::max()))
        j["k"] = k->convert_to<long long>();
      else
        j["k"] = k->str();
    }
    j["time_ms"] = time_ms;
    return j;
  }

  std::string to_text() const {
    std::string out = command + ": ";
    if (verdict.is_boolean())
      out += verdict.get<bool>() ? "true" : "false";
    else
      out += verdict.get<std::string>();
    if (k) out += " (k = " + k->str() + ")";
    if (witness) out += " (witness " + *witness + ")";
    for (const auto& line : details) out += "\n  " + line;
    return out;
  }
};

inline const std::vector<std::string>& query_commands() {
  static const std::vector<std::string> list{"wp",    "cp",      "pp",     "csgmp",
                                             "csmmp", "order",   "collect", "embed"};
  return list;
}

inline std::size_t query_arity(const std::string& command) {
  if (command == "cp" || command == "pp" || command == "csgmp" || command == "csmmp") return 2;
  if (std::find(query_commands().begin(), query_commands().end(), command) ==
      query_commands().end())
    throw UsageError("unknown command '" + command + "'");
  return 1;
}

/// Errors: UsageError, ParseError, UnknownGenerator, Unsupported, NotSmooth.
inline QueryResult run_query(const Group& g, const std::string& command,
                             const std::vector<std::string>& words) {
  const std::size_t arity = query_arity(command);
  if (words.size() != arity)
    throw UsageError(command + " takes " + std::to_string(arity) + " word argument" +
                     (arity == 1 ? "" : "s"));

  QueryResult r;
  r.command = command;
  r.group = g.name();
  r.inputs = words;
  const auto start = std::chrono::steady_clock::now();

  std::vector<Element> xs;
  for (const auto& w : words) xs.push_back(g.evaluate(parse_word(g, w)));
  const Element& x = xs[0];

  if (command == "wp") {
    r.verdict = g.wp(x);
  } else if (command == "cp") {
    const ConjugacyAnswer a = g.conjugacy(x, xs[1]);
    r.verdict = a.conjugate;
    if (a.witness) {
      // Wreath products report the top component of a conjugator.
      if (auto w = dynamic_cast<const WreathGroup*>(&g))
        r.witness = w->top().render(*a.witness);
      else
        r.witness = g.render(*a.witness);
    }
  } else if (command == "pp") {
    r.k = g.pp(x, xs[1]);
    r.verdict = r.k.has_value();
    if (!r.k) r.details.push_back("no solution");
  } else if (command == "csgmp") {
    r.verdict = g.csgmp(x, xs[1]);
  } else if (command == "csmmp") {
    r.verdict = g.csmmp(x, xs[1]);
  } else if (command == "order") {
    r.verdict = g.order(x).str();
  } else if (command == "collect") {
    auto w = dynamic_cast<const WreathGroup*>(&g);
    if (!w) throw Unsupported("collect needs a wreath product, got " + g.name());
    const WreathElement e = w->to_wreath(x);
    r.verdict = g.render(x);
    r.details.push_back("top: " + w->top().render(e.top));
    r.details.push_back(e.support.empty() ? "support: empty" : "support:");
    for (const auto& [key, value] : e.support)
      r.details.push_back("  " + w->top().render(key) + " -> " + w->base().render(value));
    r.details.push_back("word: " + format_word(g, g.to_word(x)));
  } else if (command == "embed") {
    auto s = dynamic_cast<const FreeSolvableGroup*>(&g);
    if (!s) throw Unsupported("embed needs a free solvable group, got " + g.name());
    r.verdict = s->render(x);
    r.details.push_back("in " + s->inner().name());
  }

  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace wreathkit
