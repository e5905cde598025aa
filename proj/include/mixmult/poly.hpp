#ifndef MIXMULT_POLY_HPP
#define MIXMULT_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/monomial.hpp"

namespace mixmult {

// Polynomial with coefficients in Field; zero coefficients are never stored.
template <typename Field>
class Polynomial {
 public:
  using Coeff = typename Field::value_type;
  using Terms = std::map<Monomial, Coeff>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : nvars_(num_vars) {}

  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Field& f, const Monomial& m, const Coeff& c) {
    if (m.num_vars() != nvars_) throw InputError("term length does not match the polynomial's ring");
    if (f.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) terms_.erase(it);
    }
  }

  // Lowest total degree among the terms (the m-adic order); nullopt for zero.
  std::optional<Exponent> order() const {
    std::optional<Exponent> o;
    for (const auto& [m, c] : terms_) {
      Exponent d = m.degree();
      if (!o || d < *o) o = d;
    }
    return o;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const Field& f, const std::vector<std::string>* names = nullptr) const {
    if (terms_.empty()) return "0";
    std::vector<const typename Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });
    std::string s;
    for (auto* t : order) {
      if (!s.empty()) s += " + ";
      s += f.to_string(t->second);
      if (!t->first.is_one()) s += "*" + t->first.to_string(names);
    }
    return s;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace mixmult

#endif  // MIXMULT_POLY_HPP
