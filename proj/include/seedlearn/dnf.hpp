#pragma once

#include <string>
#include <vector>

#include "seedlearn/term.hpp"

namespace seedlearn {

/// Disjunction of terms over x1..xn. No terms is the constant 0; a single
/// empty term is the constant 1.
class Dnf {
 public:
  Dnf() = default;
  explicit Dnf(int n) : n_(n) {}
  Dnf(int n, std::vector<Term> terms);

  static Dnf constant(int n, bool value);

  int dimension() const { return n_; }
  int size() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(const Term& t);
  bool eval(const Assignment& a) const;

  /// Same terms in canonical order with duplicates removed.
  Dnf canonical() const;
  std::string to_string() const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Term evaluation with a dimension check.
bool eval(const Term& t, const Assignment& a);
inline bool eval(const Dnf& f, const Assignment& a) { return f.eval(a); }

}  // namespace seedlearn
