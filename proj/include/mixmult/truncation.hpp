#ifndef MIXMULT_TRUNCATION_HPP
#define MIXMULT_TRUNCATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mixmult/linalg.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/poly.hpp"

namespace mixmult {

// Monomial basis of (a + den) / ((m^D ∩ a) + den): the monomials of `a`
// outside `den` of total degree below D. For homogeneous data this is exactly
// the part of degree < D.
class TruncatedPiece {
 public:
  TruncatedPiece(const MonomialIdeal& a, const MonomialIdeal& den, Exponent bound) : bound_(bound) {
    require_same_ring(a, den);
    if (a.is_zero() || bound == 0) return;
    Monomial cur(a.num_vars());
    enumerate(a, den, cur, 0, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  Exponent bound() const { return bound_; }

  std::optional<std::size_t> index_of(const Monomial& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void enumerate(const MonomialIdeal& a, const MonomialIdeal& den, Monomial& cur, std::size_t var, Exponent deg) {
    if (var == cur.num_vars()) {
      if (a.contains(cur) && !den.contains(cur)) basis_.push_back(cur);
      return;
    }
    for (Exponent e = 0; deg + e < bound_; ++e) {
      cur[var] = e;
      enumerate(a, den, cur, var + 1, deg + e);
    }
    cur[var] = 0;
  }

  Exponent bound_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// Coordinates of x*u in `target`, dropping terms that vanish there.
template <typename Field>
SparseVector<Field> multiply_into(const Field& f, const Polynomial<Field>& x, const Monomial& u, const TruncatedPiece& target) {
  std::map<std::size_t, typename Field::value_type> acc;
  for (const auto& [a, c] : x.terms()) {
    if (auto idx = target.index_of(a * u)) {
      auto [it, fresh] = acc.try_emplace(*idx, c);
      if (!fresh) it->second = f.add(it->second, c);
    }
  }
  SparseVector<Field> v;
  for (auto& [i, c] : acc)
    if (!f.is_zero(c)) v.emplace_back(i, c);
  return v;
}

}  // namespace mixmult

#endif  // MIXMULT_TRUNCATION_HPP
