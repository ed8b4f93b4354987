#include "seedlearn/codec.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "seedlearn/errors.hpp"

namespace seedlearn::codec {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Reads "<kind> n=<n>" from the first content line.
int parse_header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) throw ParseError(1, "missing header '" + std::string(kind) + " n=<n>'");
  auto toks = tokens(lines.front().text);
  if (toks.size() != 2 || toks[0] != kind || toks[1].substr(0, 2) != "n=") {
    throw ParseError(lines.front().number, "expected header '" + std::string(kind) + " n=<n>'");
  }
  long n = parse_int(toks[1].substr(2), lines.front().number);
  if (n < 0 || n > kMaxVars) throw ParseError(lines.front().number, "n out of range");
  return static_cast<int>(n);
}

Assignment parse_bits(std::string_view tok, int n, std::size_t line) {
  if (tok.size() != static_cast<std::size_t>(n)) {
    throw ParseError(line, "bitstring '" + std::string(tok) + "' does not have length " + std::to_string(n));
  }
  for (char c : tok) {
    if (c != '0' && c != '1') throw ParseError(line, "bitstring contains '" + std::string(1, c) + "'");
  }
  return Assignment::from_string(tok);
}

}  // namespace

Dnf parse_dnf(std::string_view text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "dnf");
  Dnf f(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens(lines[i].text);
    Term t;
    if (toks.size() == 1 && toks[0] == "0") {
      f.add_term(t);
      continue;
    }
    for (auto tok : toks) {
      long lit = parse_int(tok, lines[i].number);
      if (lit == 0) throw ParseError(lines[i].number, "0 is only valid alone, as the empty term");
      if (std::labs(lit) > n) throw ParseError(lines[i].number, "variable index " + std::string(tok) + " exceeds n");
      t = t.with({static_cast<int>(std::labs(lit)), lit < 0});
    }
    f.add_term(t);
  }
  return f;
}

std::string serialize(const Dnf& f) {
  std::ostringstream out;
  out << "dnf n=" << f.dimension() << '\n';
  for (const Term& t : f.terms()) {
    if (t.empty()) {
      out << "0\n";
      continue;
    }
    bool first = true;
    for (const Literal& l : t.literals()) {
      out << (first ? "" : " ") << (l.negated ? -l.var : l.var);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

PartialFn parse_sample(std::string_view text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "sample");
  std::map<Assignment, bool> labels;
  std::vector<Assignment> pos;
  std::vector<Assignment> neg;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens(lines[i].text);
    if (toks.size() != 2) throw ParseError(lines[i].number, "expected '<bitstring> <0|1>'");
    Assignment a = parse_bits(toks[0], n, lines[i].number);
    if (toks[1] != "0" && toks[1] != "1") throw ParseError(lines[i].number, "label must be 0 or 1");
    bool label = toks[1] == "1";
    auto [it, inserted] = labels.emplace(a, label);
    if (!inserted && it->second != label) {
      throw ParseError(lines[i].number, "conflicting labels for " + a.to_string());
    }
    if (inserted) (label ? pos : neg).push_back(a);
  }
  return {n, std::move(pos), std::move(neg)};
}

std::string serialize_sample(const PartialFn& f) {
  std::vector<std::pair<Assignment, bool>> rows;
  for (const Assignment& a : f.positives()) rows.emplace_back(a, true);
  for (const Assignment& a : f.negatives()) rows.emplace_back(a, false);
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << "sample n=" << f.dimension() << '\n';
  for (const auto& [a, label] : rows) out << a.to_string() << ' ' << (label ? 1 : 0) << '\n';
  return out.str();
}

TruthTable parse_tt(std::string_view text, const Caps& caps) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "tt");
  if (lines.size() < 2) throw ParseError(lines.front().number + 1, "missing table line");
  if (lines.size() > 2) throw ParseError(lines[2].number, "unexpected line after the table");
  std::string_view body = lines[1].text;
  if (n > caps.max_n) throw ResourceError("truth table over " + std::to_string(n) + " variables exceeds cap");
  if (body.size() != (std::size_t{1} << n)) {
    throw ParseError(lines[1].number, "table has " + std::to_string(body.size()) + " entries, expected 2^" + std::to_string(n));
  }
  for (char c : body) {
    if (c != '0' && c != '1') throw ParseError(lines[1].number, "table contains '" + std::string(1, c) + "'");
  }
  return TruthTable::from_string(body, caps);
}

std::string serialize(const TruthTable& t) {
  return "tt n=" + std::to_string(t.dimension()) + "\n" + t.to_string() + "\n";
}

DecisionTree parse_dtree(std::string_view text) {
  auto lines = content_lines(text);
  int n = parse_header(lines, "dtree");
  std::vector<std::pair<std::string_view, std::size_t>> toks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (auto tok : tokens(lines[i].text)) toks.emplace_back(tok, lines[i].number);
  }
  std::size_t pos = 0;
  std::function<DecisionTree()> rec = [&]() -> DecisionTree {
    if (pos >= toks.size()) throw ParseError(lines.back().number, "tree ends early");
    auto [tok, line] = toks[pos++];
    if (tok == "0" || tok == "1") return DecisionTree::leaf(tok == "1");
    if (tok.size() < 2 || tok[0] != 'x') throw ParseError(line, "expected x<i>, 0 or 1, got '" + std::string(tok) + "'");
    long var = parse_int(tok.substr(1), line);
    if (var < 1 || var > n) throw ParseError(line, "variable " + std::string(tok) + " out of range");
    DecisionTree c0 = rec();
    DecisionTree c1 = rec();
    try {
      return DecisionTree::node(static_cast<int>(var), c0, c1);
    } catch (const ContractViolation& e) {
      throw ParseError(line, e.what());
    }
  };
  DecisionTree tree = rec();
  if (pos != toks.size()) throw ParseError(toks[pos].second, "trailing tokens after tree");
  return tree;
}

std::string serialize(const DecisionTree& tree, int n) {
  return "dtree n=" + std::to_string(n) + "\n" + tree.to_string() + "\n";
}

AnyInput parse_any(std::string_view text, const Caps& caps) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto toks = tokens(lines.front().text);
  std::string_view kind = toks.empty() ? std::string_view{} : toks.front();
  if (kind == "dnf") return parse_dnf(text);
  if (kind == "sample") return parse_sample(text);
  if (kind == "tt") return parse_tt(text, caps);
  if (kind == "dtree") return parse_dtree(text);
  throw ParseError(lines.front().number, "unknown file kind '" + std::string(kind) + "'");
}

int parse_dimension(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto toks = tokens(lines.front().text);
  return parse_header(lines, toks.empty() ? std::string_view{} : toks.front());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace seedlearn::codec
