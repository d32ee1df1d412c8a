// wreathkit: word, conjugacy and power problems from the command line.
//
//   wreathkit --group "wr(Z/2, Z)" cp "a1 t1" "t1 a1" [--json] [--beta N] [--radius N]
//   wreathkit --group "freesolvable(2,2)" --batch queries.txt
//   wreathkit selftest [--full]

#include "wreathkit/query.hpp"
#include "wreathkit/selftest.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace wreathkit;

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2, kCapability = 3 };

struct Failure {
  int code;
  std::string message;
};

/// Maps library exceptions onto exit codes.
Failure classify(const std::exception& e) {
  if (dynamic_cast<const Unsupported*>(&e) || dynamic_cast<const SmoothnessError*>(&e) ||
      dynamic_cast<const NotSmooth*>(&e))
    return {kCapability, e.what()};
  return {kUsage, e.what()};
}

/// Splits a batch line into whitespace-separated tokens; single or double
/// quotes group a token, so words are written as "a1 t1".
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        current += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += ch;
      in_token = true;
    }
  }
  if (quote) throw UsageError("unterminated quote");
  if (in_token) out.push_back(std::move(current));
  return out;
}

struct Outcome {
  std::optional<QueryResult> result;
  std::optional<Failure> failure;
  std::vector<std::string> tokens;
};

Outcome answer(const Group& g, const std::vector<std::string>& tokens) {
  Outcome out;
  out.tokens = tokens;
  try {
    if (tokens.empty()) throw UsageError("missing command");
    out.result =
        run_query(g, tokens[0], std::vector<std::string>(tokens.begin() + 1, tokens.end()));
  } catch (const std::exception& e) {
    out.failure = classify(e);
  }
  return out;
}

void print(const Outcome& o, const std::string& group, bool json, std::ostream& os) {
  if (o.result) {
    os << (json ? o.result->to_json().dump() : o.result->to_text()) << '\n';
    return;
  }
  if (json) {
    nlohmann::json j{{"command", o.tokens.empty() ? "" : o.tokens[0]},
                     {"group", group},
                     {"inputs", o.tokens.empty()
                                    ? std::vector<std::string>{}
                                    : std::vector<std::string>(o.tokens.begin() + 1,
                                                               o.tokens.end())},
                     {"error", o.failure->message}};
    os << j.dump() << '\n';
  } else {
    os << "error: " << o.failure->message << '\n';
  }
}

int run_batch(const Group& g, const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "wreathkit: cannot open batch file " << path << '\n';
    return kUsage;
  }
  std::vector<std::vector<std::string>> queries;
  std::vector<std::optional<Failure>> bad_lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      queries.push_back(split_line(line));
      bad_lines.emplace_back();
    } catch (const std::exception& e) {
      queries.emplace_back();
      bad_lines.push_back(Failure{kUsage, e.what()});
    }
  }

  // Queries are independent; workers take them in turn and results are
  // printed in input order.
  std::vector<Outcome> outcomes(queries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < queries.size();) {
      if (bad_lines[i]) {
        outcomes[i].failure = bad_lines[i];
      } else {
        outcomes[i] = answer(g, queries[i]);
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), queries.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (const auto& o : outcomes) {
    print(o, g.name(), json, std::cout);
    if (o.failure) code = std::max(code, o.failure->code);
  }
  return code;
}

int run_selftest(bool full, bool inject_fault, std::uint64_t seed) {
  SelftestOptions options;
  options.scale = full ? Scale::kFull : Scale::kQuick;
  options.inject_fault = inject_fault;
  options.seed = seed;
  int passed = 0;
  for (const auto& c : criteria()) {
    const CriterionResult r = run_criterion(c, options);
    std::cout << format_result(r) << std::endl;
    passed += r.passed;
  }
  const int total = static_cast<int>(criteria().size());
  std::cout << passed << "/" << total << " criteria passed (" << (full ? "full" : "quick")
            << ")\n";
  return passed == total ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for wreath products and free solvable groups"};
  app.require_subcommand(0, 1);

  std::string group_text, batch_path;
  std::vector<std::string> positional;
  bool json = false, exit_verdict = false;
  int beta = kDefaultBeta, radius = 8;
  app.add_option("--group,-g", group_text, "group description, e.g. \"wr(Z/2, Z)\"");
  app.add_option("--batch", batch_path, "file with one query per line")->check(CLI::ExistingFile);
  app.add_flag("--json", json, "emit one JSON object per query");
  app.add_option("--beta", beta, "smoothness bound for torsion orders")
      ->check(CLI::Range(2, 1 << 20));
  app.add_option("--radius", radius, "ball radius for witness searches")->check(CLI::Range(0, 16));
  app.add_flag("--exit-verdict", exit_verdict, "exit with status 1 when a yes/no answer is no");
  app.add_option("query", positional, "command (wp cp pp csgmp csmmp order collect embed) and words");

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  bool full = false, inject_fault = false;
  std::uint64_t seed = SelftestOptions{}.seed;
  selftest->add_flag("--full", full, "full-size instances and time budgets");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (selftest->parsed()) return run_selftest(full, inject_fault, seed);

  if (group_text.empty()) {
    std::cerr << "wreathkit: --group is required\n";
    return kUsage;
  }
  GroupHandle g;
  try {
    g = parse_group(group_text, {beta, radius});
  } catch (const std::exception& e) {
    const Failure f = classify(e);
    std::cerr << "wreathkit: " << f.message << '\n';
    return f.code;
  }

  if (!batch_path.empty()) {
    if (!positional.empty()) {
      std::cerr << "wreathkit: --batch takes no query arguments\n";
      return kUsage;
    }
    return run_batch(*g, batch_path, json);
  }

  const Outcome o = answer(*g, positional);
  if (o.failure) {
    std::cerr << "wreathkit: " << o.failure->message << '\n';
    return o.failure->code;
  }
  print(o, g->name(), json, std::cout);
  if (exit_verdict) {
    if (auto b = o.result->boolean(); b && !*b) return kFalse;
  }
  return kOk;
}
