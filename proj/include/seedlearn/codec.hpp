#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "seedlearn/decision_tree.hpp"
#include "seedlearn/dnf.hpp"
#include "seedlearn/partial_fn.hpp"
#include "seedlearn/truth_table.hpp"

namespace seedlearn::codec {

// Text formats. Every file starts with a header line naming the kind and n:
//   dnf n=<n>     one term per line as signed indices ("1 -3"); "0" is the
//                 empty term; no term lines is the constant 0
//   sample n=<n>  lines "<bitstring> <0|1>"
//   tt n=<n>      one line of 2^n '0'/'1' characters in index order
//   dtree n=<n>   prefix tokens, "x<i> <child0> <child1>" or "0"/"1"
// Blank lines and lines starting with '#' are ignored.

Dnf parse_dnf(std::string_view text);
std::string serialize(const Dnf& f);

PartialFn parse_sample(std::string_view text);
std::string serialize_sample(const PartialFn& f);

TruthTable parse_tt(std::string_view text, const Caps& caps = {});
std::string serialize(const TruthTable& t);

DecisionTree parse_dtree(std::string_view text);
std::string serialize(const DecisionTree& tree, int n);

using AnyInput = std::variant<Dnf, PartialFn, TruthTable, DecisionTree>;
/// Dispatches on the header keyword.
AnyInput parse_any(std::string_view text, const Caps& caps = {});

/// The n from any file's header line.
int parse_dimension(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace seedlearn::codec
