#include "seedlearn/decision_tree.hpp"

#include <algorithm>
#include <functional>

#include "seedlearn/errors.hpp"

namespace seedlearn {

namespace {

bool tests_var(const std::vector<DecisionTree::Node>& nodes, int var) {
  return std::any_of(nodes.begin(), nodes.end(), [&](const auto& node) { return node.var == var; });
}

}  // namespace

DecisionTree DecisionTree::leaf(bool label) {
  DecisionTree t;
  t.nodes_.push_back({0, label, -1, -1});
  return t;
}

DecisionTree DecisionTree::node(int var, const DecisionTree& when0, const DecisionTree& when1) {
  if (var < 1 || var > kMaxVars) throw ContractViolation("decision tree variable out of range");
  if (tests_var(when0.nodes_, var) || tests_var(when1.nodes_, var)) {
    throw ContractViolation("x" + std::to_string(var) + " tested twice on one path");
  }
  DecisionTree t;
  t.nodes_.push_back({var, false, -1, -1});
  int c0 = t.append(when0);
  int c1 = t.append(when1);
  t.nodes_[0].child0 = c0;
  t.nodes_[0].child1 = c1;
  return t;
}

int DecisionTree::append(const DecisionTree& sub) {
  int offset = static_cast<int>(nodes_.size());
  for (Node n : sub.nodes_) {
    if (!n.is_leaf()) {
      n.child0 += offset;
      n.child1 += offset;
    }
    nodes_.push_back(n);
  }
  return offset;
}

bool DecisionTree::eval(const Assignment& a) const {
  const Node* cur = &nodes_.front();
  while (!cur->is_leaf()) {
    if (cur->var > a.dimension()) throw ContractViolation("tree eval: dimension mismatch");
    cur = &nodes_[static_cast<std::size_t>(a[cur->var] ? cur->child1 : cur->child0)];
  }
  return cur->label;
}

int DecisionTree::count_leaves(bool label) const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [&](const Node& n) { return n.is_leaf() && n.label == label; }));
}

int DecisionTree::max_var() const {
  int m = 0;
  for (const Node& n : nodes_) m = std::max(m, n.var);
  return m;
}

int DecisionTree::depth() const {
  std::function<int(int)> rec = [&](int id) -> int {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    return n.is_leaf() ? 0 : 1 + std::max(rec(n.child0), rec(n.child1));
  };
  return rec(0);
}

DecisionTree DecisionTree::collapse_zero_subtrees() const {
  std::function<DecisionTree(int)> rec = [&](int id) -> DecisionTree {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (n.is_leaf()) return leaf(n.label);
    DecisionTree c0 = rec(n.child0);
    DecisionTree c1 = rec(n.child1);
    bool zero0 = c0.nodes_.size() == 1 && !c0.root().label;
    bool zero1 = c1.nodes_.size() == 1 && !c1.root().label;
    if (zero0 && zero1) return leaf(false);
    return node(n.var, c0, c1);
  };
  return rec(0);
}

std::vector<Literal> DecisionTree::path_literals(int leaf_id) const {
  std::vector<int> parent(nodes_.size(), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].is_leaf()) {
      parent[static_cast<std::size_t>(nodes_[i].child0)] = static_cast<int>(i);
      parent[static_cast<std::size_t>(nodes_[i].child1)] = static_cast<int>(i);
    }
  }
  std::vector<Literal> out;
  for (int cur = leaf_id; parent[static_cast<std::size_t>(cur)] >= 0; cur = parent[static_cast<std::size_t>(cur)]) {
    const Node& p = nodes_[static_cast<std::size_t>(parent[static_cast<std::size_t>(cur)])];
    out.push_back({p.var, p.child0 == cur});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string DecisionTree::to_string() const {
  std::string out;
  std::function<void(int)> rec = [&](int id) {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (!out.empty()) out += ' ';
    if (n.is_leaf()) {
      out += n.label ? '1' : '0';
      return;
    }
    out += "x" + std::to_string(n.var);
    rec(n.child0);
    rec(n.child1);
  };
  rec(0);
  return out;
}

}  // namespace seedlearn
