#ifndef MIXMULT_PROBLEM_HPP
#define MIXMULT_PROBLEM_HPP

// JSON problem files (schema_version 1). Needs nlohmann_json.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixmult/error.hpp"
#include "mixmult/field.hpp"
#include "mixmult/length.hpp"
#include "mixmult/poly.hpp"
#include "mixmult/reductions.hpp"

namespace mixmult {

struct TermSpec {
  std::string coeff;
  Monomial exps;
};
using ElementSpec = std::vector<TermSpec>;

struct CandidateSpec {
  std::vector<ElementSpec> j;
  std::vector<std::vector<ElementSpec>> ideals;
};

struct Problem {
  std::string name;
  std::vector<std::string> variables;
  FieldSpec field = PrimeFieldSpec{};
  Subquotient module;
  std::optional<Subquotient> submodule;
  MonomialIdeal j;
  std::vector<MonomialIdeal> ideals;
  std::optional<CandidateSpec> candidate;
  std::optional<Box> window;
  std::optional<Exponent> truncation;
  std::uint64_t seed = 1;
  std::optional<TypeIndex> type;
  nlohmann::ordered_json expect;  // optional expectations used by the corpus runner

  std::size_t num_vars() const { return variables.size(); }
  IdealFamily family() const { return IdealFamily(j, ideals); }

  // N, defaulting to the zero submodule
  Subquotient sub() const { return submodule.value_or(Subquotient(module.den(), module.den())); }
};

// 64-bit FNV-1a
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
  return s;
}

namespace detail {

using json = nlohmann::json;

inline void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw InputError(where + ": unknown key '" + it.key() + "'");
}

inline const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing '" + key + "'");
  return *it;
}

inline std::uint64_t natural(const json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw InputError(where + " must be a natural number");
  return v.get<std::uint64_t>();
}

inline std::vector<std::int64_t> naturals(const json& v, const std::string& where, std::size_t len) {
  if (!v.is_array() || v.size() != len)
    throw InputError(where + " must be an array of " + std::to_string(len) + " natural numbers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t x = natural(v[i], where);
    if (x > static_cast<std::uint64_t>(INT32_MAX)) throw InputError(where + ": value too large");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

inline Monomial exponent_vector(const json& v, const std::string& where, std::size_t m) {
  if (!v.is_array() || v.size() != m)
    throw InputError(where + ": exponent vector must have length " + std::to_string(m));
  std::vector<Exponent> e;
  for (const json& x : v) {
    std::uint64_t k = natural(x, where);
    if (k > 1000000) throw InputError(where + ": exponent too large");
    e.push_back(k);
  }
  return Monomial(std::move(e));
}

inline MonomialIdeal ideal(const json& v, const std::string& where, std::size_t m) {
  if (v.is_string()) {
    if (v.get<std::string>() == "unit") return MonomialIdeal::unit(m);
    throw InputError(where + ": the only string allowed is \"unit\"");
  }
  if (!v.is_array()) throw InputError(where + " must be \"unit\" or a list of exponent vectors");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < v.size(); ++i) gens.push_back(exponent_vector(v[i], where + "[" + std::to_string(i) + "]", m));
  return MonomialIdeal(m, std::move(gens));
}

inline ElementSpec element(const json& v, const std::string& where, std::size_t m) {
  if (!v.is_array() || v.empty()) throw InputError(where + " must be a nonempty list of terms");
  ElementSpec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    only_keys(v[i], w, {"coeff", "exps"});
    const json& c = need(v[i], "coeff", w);
    std::string coeff;
    if (c.is_string()) coeff = c.get<std::string>();
    else if (c.is_number_integer()) coeff = c.dump();
    else throw InputError(w + ".coeff must be a decimal string");
    out.push_back({coeff, exponent_vector(need(v[i], "exps", w), w + ".exps", m)});
  }
  return out;
}

inline std::vector<ElementSpec> elements(const json& v, const std::string& where, std::size_t m) {
  if (!v.is_array()) throw InputError(where + " must be a list of elements");
  std::vector<ElementSpec> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(element(v[i], where + "[" + std::to_string(i) + "]", m));
  return out;
}

}  // namespace detail

inline Problem parse_problem(const std::string& text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  detail::only_keys(doc, "problem",
                    {"schema_version", "name", "description", "ring", "module", "submodule", "J", "ideals", "candidate",
                     "window", "truncation", "seed", "type", "expect"});
  if (detail::natural(detail::need(doc, "schema_version", "problem"), "schema_version") != 1)
    throw InputError("unsupported schema_version (expected 1)");

  Problem p;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("name must be a string");
    p.name = doc["name"].get<std::string>();
  }
  if (doc.contains("description") && !doc["description"].is_string()) throw InputError("description must be a string");

  const json& ring = detail::need(doc, "ring", "problem");
  detail::only_keys(ring, "ring", {"variables", "field"});
  const json& vars = detail::need(ring, "variables", "ring");
  if (!vars.is_array() || vars.empty()) throw InputError("ring.variables must be a nonempty list of names");
  std::set<std::string> seen;
  for (const json& v : vars) {
    if (!v.is_string() || v.get<std::string>().empty()) throw InputError("ring.variables must be names");
    if (!seen.insert(v.get<std::string>()).second) throw InputError("ring.variables has a repeated name");
    p.variables.push_back(v.get<std::string>());
  }
  const std::size_t m = p.variables.size();
  if (ring.contains("field")) {
    const json& fld = ring["field"];
    detail::only_keys(fld, "ring.field", {"prime", "rationals"});
    if (fld.contains("prime") == fld.contains("rationals")) throw InputError("ring.field needs exactly one of prime, rationals");
    if (fld.contains("prime")) {
      std::uint64_t prime = detail::natural(fld["prime"], "ring.field.prime");
      PrimeField check(prime);
      p.field = PrimeFieldSpec{prime};
    } else {
      if (fld["rationals"] != true) throw InputError("ring.field.rationals must be true");
      p.field = RationalFieldSpec{};
    }
  }

  const json& mod = detail::need(doc, "module", "problem");
  detail::only_keys(mod, "module", {"num", "den"});
  MonomialIdeal num = mod.contains("num") ? detail::ideal(mod["num"], "module.num", m) : MonomialIdeal::unit(m);
  MonomialIdeal den = mod.contains("den") ? detail::ideal(mod["den"], "module.den", m) : MonomialIdeal::zero(m);
  p.module = Subquotient(num, den);
  if (doc.contains("submodule")) {
    const json& sub = doc["submodule"];
    detail::only_keys(sub, "submodule", {"num"});
    MonomialIdeal sn = detail::ideal(detail::need(sub, "num", "submodule"), "submodule.num", m);
    MonomialIdeal sn_full = ideal_sum(sn, den);
    if (!num.contains(sn_full)) throw InputError("submodule.num is not inside module.num");
    p.submodule = Subquotient(sn_full, den);
  }

  p.j = detail::ideal(detail::need(doc, "J", "problem"), "J", m);
  const json& ideals = detail::need(doc, "ideals", "problem");
  if (!ideals.is_array() || ideals.empty()) throw InputError("ideals must be a nonempty list of ideals");
  for (std::size_t i = 0; i < ideals.size(); ++i) p.ideals.push_back(detail::ideal(ideals[i], "ideals[" + std::to_string(i) + "]", m));
  p.family();  // validates J
  const std::size_t d = p.ideals.size();

  if (doc.contains("candidate")) {
    const json& c = doc["candidate"];
    detail::only_keys(c, "candidate", {"J", "ideals"});
    CandidateSpec cs;
    if (c.contains("J")) cs.j = detail::elements(c["J"], "candidate.J", m);
    cs.ideals.resize(d);
    if (c.contains("ideals")) {
      if (!c["ideals"].is_array() || c["ideals"].size() != d)
        throw InputError("candidate.ideals must hold one element list per ideal");
      for (std::size_t i = 0; i < d; ++i) cs.ideals[i] = detail::elements(c["ideals"][i], "candidate.ideals[" + std::to_string(i) + "]", m);
    }
    p.candidate = std::move(cs);
  }
  if (doc.contains("window")) {
    const json& w = doc["window"];
    detail::only_keys(w, "window", {"lo", "hi"});
    Box b{MultiIndex(detail::naturals(detail::need(w, "lo", "window"), "window.lo", d + 1)),
          MultiIndex(detail::naturals(detail::need(w, "hi", "window"), "window.hi", d + 1))};
    require_window(p.family(), b);
    p.window = b;
  }
  if (doc.contains("truncation")) {
    std::uint64_t t = detail::natural(doc["truncation"], "truncation");
    if (t == 0) throw InputError("truncation must be positive");
    p.truncation = t;
  }
  if (doc.contains("seed")) p.seed = detail::natural(doc["seed"], "seed");
  if (doc.contains("type")) p.type = TypeIndex(detail::naturals(doc["type"], "type", d + 1));
  if (doc.contains("expect")) {
    if (!doc["expect"].is_object()) throw InputError("expect must be an object");
    p.expect = nlohmann::ordered_json::parse(doc["expect"].dump());
  }
  return p;
}

template <typename Field>
Polynomial<Field> build_element(const Field& f, const ElementSpec& spec, std::size_t m) {
  Polynomial<Field> x(m);
  for (const TermSpec& t : spec) x.add_term(f, t.exps, f.parse(t.coeff));
  if (x.is_zero()) throw InputError("candidate element is zero");
  return x;
}

template <typename Field>
ReductionCandidate<Field> build_candidate(const Field& f, const CandidateSpec& spec, const Problem& p) {
  ReductionCandidate<Field> c;
  c.lists.resize(p.ideals.size() + 1);
  for (const ElementSpec& e : spec.j) c.lists[0].push_back(build_element(f, e, p.num_vars()));
  for (std::size_t i = 0; i < spec.ideals.size(); ++i)
    for (const ElementSpec& e : spec.ideals[i]) c.lists[i + 1].push_back(build_element(f, e, p.num_vars()));
  validate_candidate(c, p.family());
  return c;
}

}  // namespace mixmult

#endif  // MIXMULT_PROBLEM_HPP
