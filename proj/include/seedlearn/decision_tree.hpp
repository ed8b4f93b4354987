#pragma once

#include <string>
#include <vector>

#include "seedlearn/assignment.hpp"
#include "seedlearn/term.hpp"

namespace seedlearn {

/// Binary decision tree over x1..xn with Boolean leaves.
///
/// Nodes live in a flat vector; node 0 is the root. Along any root-to-leaf
/// path each variable is tested at most once.
class DecisionTree {
 public:
  struct Node {
    int var = 0;  // 0 for leaves
    bool label = false;
    int child0 = -1;
    int child1 = -1;
    bool is_leaf() const { return var == 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  static DecisionTree leaf(bool label);
  /// Throws ContractViolation if `var` is already tested inside a child.
  static DecisionTree node(int var, const DecisionTree& when0, const DecisionTree& when1);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }

  bool eval(const Assignment& a) const;
  int count_leaves(bool label) const;
  /// Number of leaves labeled 1.
  int s1() const { return count_leaves(true); }
  int max_var() const;
  int depth() const;

  /// Replaces every subtree computing the constant 0 by a single 0-leaf.
  DecisionTree collapse_zero_subtrees() const;

  /// Literals satisfied along the path from the root to `leaf_id`.
  std::vector<Literal> path_literals(int leaf_id) const;

  /// Prefix tokens "var child0 child1"; "x1 0 x2 0 1" is x1 & x2.
  std::string to_string() const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  int append(const DecisionTree& sub);

  std::vector<Node> nodes_;
};

}  // namespace seedlearn
