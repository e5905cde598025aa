#ifndef MIXMULT_TESTS_UTIL_HPP
#define MIXMULT_TESTS_UTIL_HPP

#include <fstream>
#include <iterator>
#include <string>

#include "mixmult/mixmult.hpp"
#include "oracle.hpp"

namespace testutil {

inline mixmult::MonomialIdeal to_ideal(const oracle::Gens& g, std::size_t m) {
  std::vector<mixmult::Monomial> gens;
  for (const auto& x : g) gens.emplace_back(std::vector<mixmult::Exponent>(x.begin(), x.end()));
  return mixmult::MonomialIdeal(m, gens);
}

inline oracle::Exps to_exps(const mixmult::Monomial& u) { return oracle::Exps(u.exponents().begin(), u.exponents().end()); }

inline mixmult::Monomial to_monomial(const oracle::Exps& u) {
  return mixmult::Monomial(std::vector<mixmult::Exponent>(u.begin(), u.end()));
}

inline oracle::Gens maximal(std::size_t m) {
  oracle::Gens g;
  for (std::size_t i = 0; i < m; ++i) {
    oracle::Exps x(m, 0);
    x[i] = 1;
    g.push_back(x);
  }
  return g;
}

inline mixmult::MultiIndex idx(const std::vector<int>& v) { return mixmult::MultiIndex(std::vector<std::int64_t>(v.begin(), v.end())); }

inline std::vector<int> ints(const mixmult::MultiIndex& x) { return std::vector<int>(x.c.begin(), x.c.end()); }

template <typename Field>
std::vector<oracle::Element> to_elements(const mixmult::ReductionCandidate<Field>& c) {
  std::vector<oracle::Element> out;
  for (std::size_t coord = 0; coord < c.lists.size(); ++coord)
    for (const auto& x : c.lists[coord]) {
      oracle::Element e{{}, coord};
      for (const auto& [mono, coeff] : x.terms()) e.terms[to_exps(mono)] = static_cast<std::int64_t>(coeff);
      out.push_back(e);
    }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline std::string corpus(const std::string& name) { return read_file(std::string(MIXMULT_CORPUS_DIR) + "/" + name); }

}  // namespace testutil

#endif
