// seedlearn: command-line front end for the experiment runner.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seedlearn/runner.hpp"

namespace {

using nlohmann::json;

// Flag values land here, keyed by parameter name; only flags the user passed
// are copied into the config.
struct Bindings {
  std::map<std::string, std::string> strings;
  std::map<std::string, std::vector<std::string>> lists;
  std::map<std::string, bool> flags;
  std::vector<std::pair<std::string, CLI::Option*>> options;
};

void add(CLI::App* app, Bindings& b, const std::string& name, const std::string& help, bool required = false) {
  std::string key = name;
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  CLI::Option* opt = app->add_option("--" + name, b.strings[key], help);
  if (required) opt->required();
  b.options.emplace_back(key, opt);
}

void add_list(CLI::App* app, Bindings& b, const std::string& name, const std::string& help) {
  CLI::Option* opt = app->add_option("--" + name, b.lists[name], help)->required()->expected(1, -1);
  b.options.emplace_back(name, opt);
}

void add_flag(CLI::App* app, Bindings& b, const std::string& name, const std::string& help) {
  std::string key = name;
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  CLI::Option* opt = app->add_flag("--" + name, b.flags[key], help);
  b.options.emplace_back(key, opt);
}

json collect(const Bindings& b) {
  json params = json::object();
  for (const auto& [key, opt] : b.options) {
    if (opt->count() == 0) continue;
    if (auto it = b.flags.find(key); it != b.flags.end()) {
      params[key] = it->second;
    } else if (auto lt = b.lists.find(key); lt != b.lists.end()) {
      params[key] = lt->second;
    } else {
      params[key] = b.strings.at(key);
    }
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper DNF learning with seeds: seed search, covering, EQ learning, certificates and tradeoffs"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string seed_text = "0";
  std::string caps_text;
  bool no_time = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed_text, "RNG seed (decimal unsigned 64-bit)");
  app.add_option("--caps", caps_text, "Resource caps, e.g. max_n=12,max_class=100000");
  app.add_flag("--no-time", no_time, "Omit wall time from the report");

  std::map<std::string, Bindings> bind;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  {
    CLI::App* s = sub("find-seed", "Find a seed of a partial function");
    Bindings& b = bind["find-seed"];
    add(s, b, "input", "tt, dnf, sample or dtree file", true);
    add(s, b, "s", "DNF size; the size bound is ceil(2 sqrt(n ln s))");
    add(s, b, "q", "Explicit seed size bound");
    add(s, b, "method", "lemma2 or enumerate (default)");
  }
  {
    CLI::App* s = sub("learn-pac", "PAC-learn a DNF by seed covering");
    Bindings& b = bind["learn-pac"];
    add(s, b, "target", "Target dnf file", true);
    add(s, b, "s", "Target size bound", true);
    add(s, b, "eps", "Accuracy", true);
    add(s, b, "delta", "Confidence", true);
    add(s, b, "dist", "uniform (default) or product:<p1>,...,<pn>");
    add(s, b, "trials", "Independent trials (default 1)");
  }
  {
    CLI::App* s = sub("learn-eq", "Learn a DNF properly from equivalence queries");
    Bindings& b = bind["learn-eq"];
    add(s, b, "target", "Target dnf, tt or dtree file", true);
    add(s, b, "s", "Target size bound (start value with --auto-s)");
    add_flag(s, b, "auto-s", "Double s whenever the learner runs out of levels");
    add(s, b, "teacher", "lex (default) or random");
  }
  {
    CLI::App* s = sub("learn-dtree", "Seed a decision tree and cover its truth table");
    Bindings& b = bind["learn-dtree"];
    add(s, b, "tree", "dtree file", true);
  }
  {
    CLI::App* s = sub("certify", "Cover a function or certify that its DNF size exceeds s");
    Bindings& b = bind["certify"];
    add(s, b, "target", "tt, dnf or dtree file", true);
    add(s, b, "s", "Size to certify against", true);
  }
  {
    CLI::App* s = sub("mindnf", "Exact minimum DNF");
    Bindings& b = bind["mindnf"];
    add(s, b, "input", "tt, dnf, sample or dtree file", true);
    add(s, b, "budget", "Give up above this many terms");
  }
  {
    CLI::App* s = sub("adversary", "Run fingerprint counterexamples against scripted queries over M(n,t,s)");
    Bindings& b = bind["adversary"];
    add(s, b, "n", "Variables", true);
    add(s, b, "t", "Terms per formula", true);
    add(s, b, "s", "Variables per term", true);
    add_list(s, b, "script", "Query dnf files, in order");
  }
  {
    CLI::App* s = sub("halving", "Majority-vote halving learner over an enumerated class");
    Bindings& b = bind["halving"];
    add(s, b, "universe", "m:<n>,<t>,<s>", true);
    add(s, b, "k", "Z threshold exponent (default 1)");
    add(s, b, "t-sample", "Formulas per majority vote (default ceil(3n / (k log2 n)))");
    add(s, b, "teacher", "worst (default) or lex");
    add(s, b, "target", "Target dnf file for the lex teacher");
    add(s, b, "target-index", "Target class member for the lex teacher (default 0)");
  }
  {
    CLI::App* s = sub("fact1", "Exact fraction of M(n,t,s) that is 0 on z, against the closed-form bound");
    Bindings& b = bind["fact1"];
    add(s, b, "n", "Variables", true);
    add(s, b, "t", "Terms per formula", true);
    add(s, b, "s", "Variables per term", true);
    add(s, b, "z", "Bitstring", true);
  }
  {
    CLI::App* s = sub("gen", "Generate a random dnf, tt, tree or sample file");
    Bindings& b = bind["gen"];
    add(s, b, "kind", "dnf (default), tt, tree or sample");
    add(s, b, "n", "Variables", true);
    add(s, b, "terms", "Terms (dnf, tt)");
    add(s, b, "min-size", "Smallest term (dnf, tt)");
    add(s, b, "max-size", "Largest term (dnf, tt)");
    add(s, b, "depth", "Maximum depth (tree)");
    add(s, b, "leaf-prob", "Early leaf probability (tree)");
    add(s, b, "p-pos", "Positive probability (sample)");
    add(s, b, "p-neg", "Negative probability (sample)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return seedlearn::kExitUsage;
  }

  seedlearn::RunConfig config;
  config.format = format;
  config.no_time = no_time;
  try {
    std::size_t used = 0;
    if (seed_text.empty() || seed_text[0] == '-') throw std::invalid_argument("negative");
    config.rng_seed = std::stoull(seed_text, &used);
    if (used != seed_text.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    std::cerr << "--seed must be a decimal unsigned 64-bit integer\n";
    return seedlearn::kExitUsage;
  }
  try {
    config.caps = seedlearn::parse_caps(caps_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "--caps: " << e.what() << '\n';
    return seedlearn::kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  config.params = collect(bind[config.command]);

  seedlearn::Report report = seedlearn::run_experiment(config);
  std::cout << report.render(format);
  return report.exit_status;
}
