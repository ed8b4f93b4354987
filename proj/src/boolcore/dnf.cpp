#include "seedlearn/dnf.hpp"

#include <algorithm>

#include "seedlearn/errors.hpp"

namespace seedlearn {

Dnf::Dnf(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.max_var() > n_) throw ContractViolation("term " + t.to_string() + " exceeds dimension " + std::to_string(n_));
  }
}

Dnf Dnf::constant(int n, bool value) {
  Dnf f(n);
  if (value) f.terms_.emplace_back();
  return f;
}

void Dnf::add_term(const Term& t) {
  if (t.max_var() > n_) throw ContractViolation("term " + t.to_string() + " exceeds dimension " + std::to_string(n_));
  terms_.push_back(t);
}

bool Dnf::eval(const Assignment& a) const {
  if (a.dimension() != n_) throw ContractViolation("dnf eval: dimension mismatch");
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.covers(a); });
}

Dnf Dnf::canonical() const {
  std::vector<Term> sorted = terms_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return {n_, std::move(sorted)};
}

std::string Dnf::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " | ";
    out += terms_.size() > 1 && t.size() > 1 ? "(" + t.to_string() + ")" : t.to_string();
  }
  return out;
}

bool eval(const Term& t, const Assignment& a) {
  if (t.max_var() > a.dimension()) throw ContractViolation("term eval: dimension mismatch");
  return t.covers(a);
}

}  // namespace seedlearn
