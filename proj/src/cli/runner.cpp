#include "seedlearn/runner.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seedlearn/certs.hpp"
#include "seedlearn/codec.hpp"
#include "seedlearn/cover.hpp"
#include "seedlearn/eq_learner.hpp"
#include "seedlearn/errors.hpp"
#include "seedlearn/min_dnf.hpp"
#include "seedlearn/random.hpp"
#include "seedlearn/seeds.hpp"
#include "seedlearn/term_enum.hpp"
#include "seedlearn/tradeoff.hpp"

namespace seedlearn {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Read-only view over the parameter object with typed getters.
class Params {
 public:
  explicit Params(const json& j) : j_(j) {}

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  std::string str(const char* key) const {
    need(key);
    const json& v = j_.at(key);
    if (!v.is_string()) throw UsageError(std::string("--") + flag(key) + " must be a string");
    return v.get<std::string>();
  }
  std::string str(const char* key, const std::string& fallback) const { return has(key) ? str(key) : fallback; }

  long integer(const char* key) const {
    need(key);
    const json& v = j_.at(key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
      std::size_t used = 0;
      long out = std::stol(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return out;
    }
    throw UsageError(std::string("--") + flag(key) + " must be an integer");
  }
  long integer(const char* key, long fallback) const { return has(key) ? integer(key) : fallback; }

  double real(const char* key) const {
    need(key);
    const json& v = j_.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return std::stod(v.get<std::string>());
    throw UsageError(std::string("--") + flag(key) + " must be a number");
  }
  double real(const char* key, double fallback) const { return has(key) ? real(key) : fallback; }

  bool boolean(const char* key) const { return has(key) && j_.at(key).get<bool>(); }

  std::vector<std::string> strings(const char* key) const {
    need(key);
    const json& v = j_.at(key);
    if (v.is_string()) return {v.get<std::string>()};
    return v.get<std::vector<std::string>>();
  }

 private:
  static std::string flag(const char* key) {
    std::string f = key;
    for (char& c : f) {
      if (c == '_') c = '-';
    }
    return f;
  }
  void need(const char* key) const {
    if (!has(key)) throw UsageError("missing required --" + flag(key));
  }
  const json& j_;
};

struct Loaded {
  int n = 0;
  codec::AnyInput value;
};

Loaded load(const std::string& path, const Caps& caps) {
  std::string text = codec::read_file(path);
  return {codec::parse_dimension(text), codec::parse_any(text, caps)};
}

TruthTable table_of(const Loaded& in, const Caps& caps) {
  return std::visit(
      [&](const auto& v) -> TruthTable {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TruthTable>) {
          return v;
        } else if constexpr (std::is_same_v<V, PartialFn>) {
          throw UsageError("a sample file does not define a total function");
        } else {
          return truth_table(v, in.n, caps);
        }
      },
      in.value);
}

PartialFn partial_of(const Loaded& in, const Caps& caps) {
  if (const auto* f = std::get_if<PartialFn>(&in.value)) return *f;
  return PartialFn::from_table(table_of(in, caps));
}

Dnf dnf_of(const Loaded& in) {
  if (const auto* f = std::get_if<Dnf>(&in.value)) return *f;
  throw UsageError("expected a dnf file");
}

json terms_json(const Dnf& f) {
  json out = json::array();
  for (const Term& t : f.terms()) out.push_back(t.to_string());
  return out;
}

json rational_json(const Rational& r) {
  json out;
  out["num"] = numerator(r).str();
  out["den"] = denominator(r).str();
  out["text"] = numerator(r).str() + "/" + denominator(r).str();
  out["decimal"] = r.convert_to<double>();
  return out;
}

// Pointwise re-check of a seed: the residual must match every defined point
// the seed term covers, and the witness must be a covered positive.
bool seed_valid(const PartialFn& f, const Seed& seed) {
  if (!seed.term.covers(seed.witness) || f.value(seed.witness) != std::optional<bool>(true)) return false;
  for (const Assignment& a : f.positives()) {
    if (seed.term.covers(a) && !seed.residual.covers(a)) return false;
  }
  for (const Assignment& a : f.negatives()) {
    if (seed.term.covers(a) && seed.residual.covers(a)) return false;
  }
  return true;
}

struct Outcome {
  json outputs = json::object();
  json checks = json::object();
  int status = kExitOk;
};

Outcome find_seed(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("input"), cfg.caps);
  PartialFn f = partial_of(in, cfg.caps);
  std::string method = p.str("method", "enumerate");
  Outcome out;
  out.outputs["n"] = in.n;
  out.outputs["method"] = method;
  std::optional<Seed> seed;
  int bound = 0;
  if (method == "lemma2") {
    Dnf phi;
    if (const auto* d = std::get_if<Dnf>(&in.value)) {
      phi = *d;
    } else {
      auto min = exact_min_dnf(f, std::nullopt, cfg.caps);
      phi = *min;
    }
    bound = seed_bound(in.n, std::max(1, phi.size()));
    SeedProcState state;
    seed = find_seed_lemma2(f, phi, &state);
    out.outputs["phi_terms"] = phi.size();
    json trace = json::array();
    for (const auto& e : state.trace) {
      json step;
      switch (e.step) {
        case SeedProcState::Step::kOutput: step["step"] = "output"; break;
        case SeedProcState::Step::kCommonLiteral: step["step"] = "common-literal"; break;
        case SeedProcState::Step::kEliminate: step["step"] = "eliminate"; break;
      }
      if (e.step != SeedProcState::Step::kOutput) step["literal"] = Term::from_literals({e.literal}).to_string();
      step["terms_left"] = e.terms_left;
      trace.push_back(step);
    }
    out.outputs["trace"] = trace;
  } else if (method == "enumerate") {
    if (p.has("q")) {
      bound = static_cast<int>(p.integer("q"));
    } else if (p.has("s")) {
      bound = seed_bound(in.n, p.integer("s"));
    } else {
      bound = in.n;
    }
    if (bound < 0 || bound > in.n) throw UsageError("--q must lie in [0, n]");
    seed = find_seed_enumerate(f, bound);
  } else {
    throw UsageError("--method must be lemma2 or enumerate");
  }
  out.outputs["bound"] = bound;
  out.outputs["found"] = seed.has_value();
  if (!seed) {
    out.status = kExitLearnerFail;
    return out;
  }
  out.outputs["seed"] = seed->term.to_string();
  out.outputs["size"] = seed->term.size();
  out.outputs["witness"] = seed->witness.to_string();
  out.outputs["residual"] = seed->residual.to_string();
  out.checks["seed_valid"] = seed_valid(f, *seed);
  out.checks["within_bound"] = seed->term.size() <= bound;
  return out;
}

Outcome learn_pac(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("target"), cfg.caps);
  Dnf target = dnf_of(in);
  long s = p.integer("s");
  double eps = p.real("eps");
  double delta = p.real("delta");
  long trials = p.integer("trials", 1);
  if (s < 1 || trials < 1 || !(eps > 0 && eps < 1) || !(delta > 0 && delta < 1)) {
    throw UsageError("need s >= 1, trials >= 1 and eps, delta in (0, 1)");
  }
  std::string dist = p.str("dist", "uniform");
  std::vector<double> probs;
  ExampleSource source;
  if (dist == "uniform") {
    source = uniform_source(target);
  } else if (dist.rfind("product:", 0) == 0) {
    std::stringstream ss(dist.substr(8));
    std::string item;
    while (std::getline(ss, item, ',')) probs.push_back(std::stod(item));
    if (static_cast<int>(probs.size()) != in.n) throw UsageError("product distribution needs n probabilities");
    for (double q : probs) {
      if (!(q >= 0 && q <= 1)) throw UsageError("product probabilities must lie in [0, 1]");
    }
    source = product_source(target, probs);
  } else {
    throw UsageError("--dist must be uniform or product:<p1>,...,<pn>");
  }

  Outcome out;
  json rows = json::array();
  long good = 0;
  bool all_consistent = true;
  for (long trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(trial)));
    PacResult r = pac_learn(source, in.n, s, eps, delta, rng, cfg.caps);
    json row;
    row["trial"] = trial;
    row["m"] = r.m;
    row["queries"] = 0;
    if (r.hypothesis) {
      double err = exact_error(*r.hypothesis, target, probs, cfg.caps);
      row["error_exact"] = err;
      row["size_h"] = r.hypothesis->size();
      row["ok"] = err <= eps;
      if (err <= eps) ++good;
    } else {
      all_consistent = false;
      row["error_exact"] = nullptr;
      row["size_h"] = nullptr;
      row["ok"] = false;
    }
    rows.push_back(row);
  }
  out.outputs["trials"] = rows;
  out.outputs["ok_trials"] = good;
  out.outputs["m"] = pac_sample_size(in.n, s, eps, delta);
  out.checks["covering_succeeded"] = all_consistent;
  if (!all_consistent) out.status = kExitLearnerFail;
  return out;
}

Outcome learn_eq_cmd(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("target"), cfg.caps);
  TruthTable target = table_of(in, cfg.caps);
  EqOptions options;
  options.auto_s = p.boolean("auto_s");
  long s = options.auto_s ? p.integer("s", 1) : p.integer("s");
  if (s < 1) throw UsageError("--s must be >= 1");
  std::string kind = p.str("teacher", "lex");
  std::unique_ptr<Teacher> teacher;
  if (kind == "lex") {
    teacher = std::make_unique<LexTeacher>(target, cfg.caps);
  } else if (kind == "random") {
    teacher = std::make_unique<RandomTeacher>(target, derive_seed(cfg.rng_seed, 0), cfg.caps);
  } else {
    throw UsageError("--teacher must be lex or random");
  }

  EqResult r = learn_eq(*teacher, in.n, s, options, cfg.caps);
  Outcome out;
  json log = json::array();
  for (const QueryRecord& q : r.log) {
    json row;
    row["query_index"] = q.query_index;
    row["hyp_terms"] = q.hyp_terms;
    row["counterexample"] = q.counterexample ? json(q.counterexample->to_string()) : json(nullptr);
    row["label"] = q.counterexample ? json(q.label ? 1 : 0) : json(nullptr);
    row["s"] = q.s;
    log.push_back(row);
  }
  bool equal = truth_table(r.hypothesis, in.n, cfg.caps) == target;
  std::uint64_t ceiling = eq_query_ceiling(in.n, count_terms(in.n, seed_bound(in.n, r.s_used)));
  std::uint64_t final_run = 0;
  for (const QueryRecord& q : r.log) final_run += q.s == r.s_used;
  out.outputs["log"] = log;
  out.outputs["queries"] = r.log.size();
  out.outputs["equal"] = equal;
  out.outputs["hypothesis"] = terms_json(r.hypothesis);
  out.outputs["s_used"] = r.s_used;
  out.outputs["restarts"] = r.restarts;
  out.outputs["ceiling"] = ceiling;
  out.checks["equal"] = equal;
  out.checks["under_ceiling"] = final_run <= ceiling;
  return out;
}

Outcome learn_dtree(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("tree"), cfg.caps);
  const auto* tree = std::get_if<DecisionTree>(&in.value);
  if (!tree) throw UsageError("expected a dtree file");
  DecisionTree reduced = tree->collapse_zero_subtrees();
  int s1 = reduced.s1();
  if (s1 == 0) throw UsageError("the tree has no 1-leaf");
  int bound = std::bit_width(static_cast<unsigned>(s1)) - 1;
  Seed seed = dtree_seed(*tree, in.n);
  TruthTable table = truth_table(*tree, in.n, cfg.caps);
  PartialFn f = PartialFn::from_table(table);
  CoverResult cover = cover_sample_with_bound(f, bound);

  Outcome out;
  out.outputs["s1"] = s1;
  out.outputs["bound"] = bound;
  out.outputs["seed"] = seed.term.to_string();
  out.outputs["size"] = seed.term.size();
  out.outputs["witness"] = seed.witness.to_string();
  out.outputs["residual"] = seed.residual.to_string();
  out.outputs["cover_success"] = cover.success();
  out.outputs["hypothesis"] = terms_json(cover.hypothesis);
  bool exact = cover.success() && truth_table(cover.hypothesis, in.n, cfg.caps) == table;
  out.checks["seed_valid"] = seed_valid(f, seed);
  out.checks["within_bound"] = seed.term.size() <= bound;
  out.checks["cover_exact"] = exact;
  if (!cover.success()) out.status = kExitLearnerFail;
  return out;
}

Outcome certify_cmd(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("target"), cfg.caps);
  TruthTable table = table_of(in, cfg.caps);
  long s = p.integer("s");
  if (s < 1) throw UsageError("--s must be >= 1");
  CertifyResult r = certify(table, s, cfg.caps);
  Outcome out;
  out.outputs["q"] = r.q;
  if (const auto* cover = std::get_if<Dnf>(&r.outcome)) {
    out.outputs["cover"] = terms_json(*cover);
    out.outputs["terms"] = cover->size();
    out.checks["cover_exact"] = truth_table(*cover, in.n, cfg.caps) == table;
    return out;
  }
  const Certificate& cert = std::get<Certificate>(r.outcome);
  json points = json::array();
  for (const auto& [a, label] : cert.points) points.push_back({a.to_string(), label ? 1 : 0});
  json triples = json::array();
  for (const NonSeedWitness& w : cert.provenance) {
    json row;
    row["term"] = w.term.to_string();
    json pos = json::array();
    for (const Assignment& a : w.positives) pos.push_back(a.to_string());
    row["positives"] = pos;
    row["negative"] = w.negative.to_string();
    triples.push_back(row);
  }
  bool verified = verify_certificate(table, cert, s, cfg.caps);
  std::uint64_t limit = 3 * count_terms(in.n, r.q);
  out.outputs["certificate"] = points;
  out.outputs["triples"] = triples;
  out.outputs["verified"] = verified;
  out.outputs["points"] = cert.points.size();
  out.outputs["point_limit"] = limit;
  out.checks["verified"] = verified;
  out.checks["within_limit"] = cert.points.size() <= limit;
  return out;
}

Outcome mindnf(const Params& p, const RunConfig& cfg) {
  Loaded in = load(p.str("input"), cfg.caps);
  PartialFn f = partial_of(in, cfg.caps);
  std::optional<int> budget;
  if (p.has("budget")) budget = static_cast<int>(p.integer("budget"));
  auto best = exact_min_dnf(f, budget, cfg.caps);
  Outcome out;
  out.outputs["found"] = best.has_value();
  if (!best) {
    out.outputs["budget"] = *budget;
    out.status = kExitLearnerFail;
    return out;
  }
  out.outputs["size"] = best->size();
  out.outputs["dnf"] = terms_json(*best);
  out.checks["consistent"] = f.consistent_with(*best);
  return out;
}

Outcome adversary(const Params& p, const RunConfig& cfg) {
  int n = static_cast<int>(p.integer("n"));
  int t = static_cast<int>(p.integer("t"));
  int s = static_cast<int>(p.integer("s"));
  MonotoneClass m = enumerate_M(n, t, s, cfg.caps);
  if (m.size() == 0) throw UsageError("M(n,t,s) is empty");
  FiniteClass universe = FiniteClass::from(m, cfg.caps);
  VersionSpace space(universe);
  Outcome out;
  json rows = json::array();
  bool answered_yes = false;
  int index = 0;
  for (const std::string& path : p.strings("script")) {
    ++index;
    Loaded in = load(path, cfg.caps);
    Dnf h = dnf_of(in);
    if (in.n != n) throw UsageError(path + ": query dimension differs from n");
    json row;
    row["query_index"] = index;
    row["query"] = path;
    row["hyp_terms"] = h.size();
    row["before"] = space.size();
    auto cx = fingerprint_counterexample(space, h);
    if (!cx) {
      row["answer"] = "yes";
      row["after"] = space.size();
      rows.push_back(row);
      answered_yes = true;
      break;
    }
    bool label = !h.eval(*cx);
    std::size_t before = space.size();
    space.apply(h, *cx, label);
    row["counterexample"] = cx->to_string();
    row["label"] = label ? 1 : 0;
    row["after"] = space.size();
    row["eliminated"] = before - space.size();
    row["eliminated_fraction"] = static_cast<double>(before - space.size()) / static_cast<double>(before);
    rows.push_back(row);
  }
  out.outputs["class_size"] = m.size();
  out.outputs["queries"] = rows;
  out.outputs["remaining"] = space.size();
  out.outputs["answered_yes"] = answered_yes;
  return out;
}

// n^k, saturating.
std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

Outcome halving(const Params& p, const RunConfig& cfg) {
  std::string spec = p.str("universe");
  int n = 0, t = 0, s = 0;
  char tail = 0;
  if (spec.rfind("m:", 0) != 0 || std::sscanf(spec.c_str() + 2, "%d,%d,%d%c", &n, &t, &s, &tail) != 3) {
    throw UsageError("--universe must look like m:<n>,<t>,<s>");
  }
  MonotoneClass m = enumerate_M(n, t, s, cfg.caps);
  if (m.size() == 0) throw UsageError("M(n,t,s) is empty");
  FiniteClass universe = FiniteClass::from(m, cfg.caps);

  HalvingOptions options;
  options.k = static_cast<int>(p.integer("k", 1));
  options.t_sample = static_cast<int>(p.integer("t_sample", 0));
  options.max_retries = cfg.caps.max_retries;
  if (options.k < 1 || options.t_sample < 0) throw UsageError("need k >= 1 and t-sample >= 0");

  std::string kind = p.str("teacher", "worst");
  std::unique_ptr<Teacher> teacher;
  FingerprintTeacher* worst = nullptr;
  TruthTable target;
  if (kind == "worst") {
    auto ft = std::make_unique<FingerprintTeacher>(universe);
    worst = ft.get();
    teacher = std::move(ft);
  } else if (kind == "lex") {
    if (p.has("target")) {
      Loaded in = load(p.str("target"), cfg.caps);
      if (in.n != n) throw UsageError("target dimension differs from the universe");
      target = table_of(in, cfg.caps);
    } else {
      target = universe.table(static_cast<std::size_t>(p.integer("target_index", 0)) % universe.size());
    }
    teacher = std::make_unique<LexTeacher>(target, cfg.caps);
  } else {
    throw UsageError("--teacher must be worst or lex");
  }

  Rng rng(derive_seed(cfg.rng_seed, 0));
  HalvingResult r = halving_learn(universe, *teacher, options, rng);
  const std::uint64_t nk = ipow(static_cast<std::uint64_t>(n), options.k);

  Outcome out;
  json rows = json::array();
  bool shrink_ok = true;
  for (const ShrinkRecord& rec : r.log) {
    json row;
    row["before"] = rec.before;
    row["after"] = rec.after;
    row["in_z"] = rec.in_z;
    row["retries"] = rec.retries;
    row["fallback"] = rec.fallback;
    row["hyp_terms"] = rec.hyp_terms;
    row["counterexample"] = rec.counterexample ? json(rec.counterexample->to_string()) : json(nullptr);
    if (rec.counterexample) {
      row["ratio"] = static_cast<double>(rec.after) / static_cast<double>(rec.before);
      // after / before <= 1 - 1/n^k, kept in integers.
      bool ok = static_cast<long double>(rec.after) * nk <= static_cast<long double>(rec.before) * (nk - 1);
      row["within_bound"] = ok;
      shrink_ok = shrink_ok && ok;
    }
    rows.push_back(row);
  }
  TruthTable h = truth_table(r.hypothesis, n, cfg.caps);
  bool correct = true;
  if (worst) {
    for (std::size_t i : worst->space().remaining()) correct = correct && universe.table(i) == h;
  } else {
    correct = h == target;
  }
  out.outputs["class_size"] = universe.size();
  out.outputs["t_sample"] = options.t_sample > 0 ? options.t_sample : default_t_sample(n, options.k);
  out.outputs["log"] = rows;
  out.outputs["queries"] = r.log.size();
  out.outputs["final_con"] = r.final_con;
  out.outputs["hypothesis_terms"] = r.hypothesis.size();
  out.checks["shrink_bound"] = shrink_ok;
  out.checks["correct"] = correct;
  return out;
}

Outcome fact1(const Params& p, const RunConfig& cfg) {
  int n = static_cast<int>(p.integer("n"));
  int t = static_cast<int>(p.integer("t"));
  int s = static_cast<int>(p.integer("s"));
  Assignment z = Assignment::from_string(p.str("z"));
  if (z.dimension() != n) throw UsageError("--z must have n bits");
  Fact1Result r = fact1_check(n, t, s, z, cfg.caps);
  Outcome out;
  out.outputs["bound"] = rational_json(r.bound);
  out.outputs["exact"] = rational_json(r.exact);
  out.outputs["ok"] = r.ok;
  out.checks["exact_within_bound"] = r.ok;
  return out;
}

Outcome gen(const Params& p, const RunConfig& cfg) {
  std::string kind = p.str("kind", "dnf");
  int n = static_cast<int>(p.integer("n"));
  if (n < 1 || n > cfg.caps.max_n) throw UsageError("--n out of range");
  Rng rng(derive_seed(cfg.rng_seed, 0));
  auto random_formula = [&] {
    int terms = static_cast<int>(p.integer("terms", 3));
    int lo = static_cast<int>(p.integer("min_size", 1));
    int hi = static_cast<int>(p.integer("max_size", std::min(n, 3)));
    if (terms < 0 || lo < 0 || hi < lo || hi > n) throw UsageError("bad term count or size range");
    return random_dnf(n, terms, lo, hi, rng);
  };
  std::string text;
  if (kind == "dnf") {
    text = codec::serialize(random_formula());
  } else if (kind == "tt") {
    text = codec::serialize(truth_table(random_formula(), n, cfg.caps));
  } else if (kind == "tree") {
    int depth = static_cast<int>(p.integer("depth", std::min(n, 4)));
    if (depth < 0 || depth > n) throw UsageError("--depth must lie in [0, n]");
    text = codec::serialize(random_tree(n, depth, p.real("leaf_prob", 0.3), rng), n);
  } else if (kind == "sample") {
    double pos = p.real("p_pos", 0.3);
    double neg = p.real("p_neg", 0.3);
    if (pos < 0 || neg < 0 || pos + neg > 1) throw UsageError("need p_pos, p_neg >= 0 with sum <= 1");
    text = codec::serialize_sample(random_partial(n, pos, neg, rng));
  } else {
    throw UsageError("--kind must be dnf, tt, tree or sample");
  }
  Outcome out;
  out.outputs["kind"] = kind;
  out.outputs["text"] = text;
  return out;
}

using Handler = Outcome (*)(const Params&, const RunConfig&);

Handler handler_for(const std::string& command) {
  static const std::pair<const char*, Handler> table[] = {
      {"find-seed", find_seed}, {"learn-pac", learn_pac}, {"learn-eq", learn_eq_cmd},
      {"learn-dtree", learn_dtree}, {"certify", certify_cmd}, {"mindnf", mindnf},
      {"adversary", adversary}, {"halving", halving}, {"fact1", fact1}, {"gen", gen},
  };
  for (const auto& [name, fn] : table) {
    if (command == name) return fn;
  }
  return nullptr;
}

json caps_json(const Caps& c) {
  return {{"max_n", c.max_n},
          {"max_exact_n", c.max_exact_n},
          {"max_class", c.max_class},
          {"max_retries", c.max_retries},
          {"max_samples", c.max_samples}};
}

void render_value(std::ostream& out, const std::string& key, const json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render_value(out, k, sub, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out << pad << key << ":\n";
    for (const json& row : v) {
      out << pad << "  -";
      for (const auto& [k, sub] : row.items()) out << ' ' << k << '=' << (sub.is_string() ? sub.get<std::string>() : sub.dump());
      out << '\n';
    }
  } else if (v.is_string()) {
    out << pad << key << ": " << v.get<std::string>() << '\n';
  } else {
    out << pad << key << ": " << v.dump() << '\n';
  }
}

}  // namespace

Caps parse_caps(const std::string& text, Caps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("caps entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || used == 0 || v == 0) {
      throw std::invalid_argument("caps value for " + key + " must be a positive integer");
    }
    if (key == "max_n") {
      base.max_n = static_cast<int>(std::min<unsigned long long>(v, kMaxVars));
    } else if (key == "max_exact_n") {
      base.max_exact_n = static_cast<int>(std::min<unsigned long long>(v, kMaxVars));
    } else if (key == "max_class") {
      base.max_class = v;
    } else if (key == "max_retries") {
      base.max_retries = v;
    } else if (key == "max_samples") {
      base.max_samples = v;
    } else {
      throw std::invalid_argument("unknown caps key '" + key + "'");
    }
  }
  return base;
}

Report run_experiment(const RunConfig& config) {
  auto start = std::chrono::steady_clock::now();
  Report report;
  json& j = report.json;
  j["command"] = config.command;
  j["inputs"] = config.params;
  j["rng_seed"] = config.rng_seed;
  j["caps"] = caps_json(config.caps);

  auto fail = [&](int status, const std::string& kind, const std::string& what) {
    report.exit_status = status;
    j["ok"] = false;
    j["error"] = {{"kind", kind}, {"message", what}};
  };

  Handler fn = handler_for(config.command);
  if (!fn) {
    fail(kExitUsage, "usage", "unknown command '" + config.command + "'");
  } else {
    try {
      Outcome out = fn(Params(config.params), config);
      bool checks_pass = true;
      for (const auto& [name, value] : out.checks.items()) checks_pass = checks_pass && value.get<bool>();
      j["outputs"] = out.outputs;
      j["checks"] = out.checks;
      j["ok"] = out.status == kExitOk && checks_pass;
      report.exit_status = out.status != kExitOk ? out.status : (checks_pass ? kExitOk : kExitLearnerFail);
    } catch (const ResourceError& e) {
      fail(kExitResource, "resource", e.what());
    } catch (const ProtocolError& e) {
      fail(kExitLearnerFail, "protocol", e.what());
    } catch (const InternalError& e) {
      fail(kExitLearnerFail, "internal", e.what());
    } catch (const ParseError& e) {
      fail(kExitUsage, "parse", e.what());
    } catch (const ContractViolation& e) {
      fail(kExitUsage, "contract", e.what());
    } catch (const std::invalid_argument& e) {
      fail(kExitUsage, "usage", e.what());
    } catch (const std::out_of_range& e) {
      fail(kExitUsage, "usage", e.what());
    } catch (const json::exception& e) {
      fail(kExitUsage, "usage", e.what());
    }
  }
  j["status"] = report.exit_status;
  if (!config.no_time) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    j["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return report;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return json.dump(2) + "\n";
  std::ostringstream out;
  if (json.value("command", "") == "gen" && json.contains("outputs")) {
    return json["outputs"]["text"].get<std::string>();
  }
  out << json.value("command", "") << (json.value("ok", false) ? ": ok" : ": FAILED") << '\n';
  if (json.contains("error")) {
    out << "  error (" << json["error"]["kind"].get<std::string>() << "): " << json["error"]["message"].get<std::string>()
        << '\n';
  }
  if (json.contains("outputs")) {
    for (const auto& [k, v] : json["outputs"].items()) render_value(out, k, v, 2);
  }
  if (json.contains("checks") && !json["checks"].empty()) render_value(out, "checks", json["checks"], 2);
  if (json.contains("wall_ms")) out << "  wall_ms: " << json["wall_ms"].dump() << '\n';
  return out.str();
}

}  // namespace seedlearn
