#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maschke/algebra/rational.hpp"

namespace maschke::algebra {

// sparse polynomial over C; exponent vectors ordered lexicographically with the
// first variable most significant, so terms().rbegin() is the leading term
template <class C>
class MultiPoly {
 public:
  using T = CoeffTraits<C>;
  using Exponent = std::vector<std::uint32_t>;
  using Terms = std::map<Exponent, C>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const C& c) {
    MultiPoly f(std::move(vars));
    f.add_term(Exponent(f.vars_.size(), 0), c);
    return f;
  }
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name, std::uint32_t e = 1) {
    MultiPoly f(std::move(vars));
    Exponent ex(f.vars_.size(), 0);
    ex[f.var_index(name)] = e;
    f.add_term(ex, T::one());
    return f;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(const Exponent& e, const C& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
    if (T::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (T::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T::zero() : it->second;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_deg(terms_.begin()->first) == 0);
  }
  C constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_deg(e));
    return d;
  }
  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
    return d;
  }

  // coefficient of var^deg, as a polynomial in the same variable list
  MultiPoly coefficient_in(std::size_t v, std::uint32_t deg) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] != deg) continue;
      Exponent ex = e;
      ex[v] = 0;
      out.add_term(ex, c);
    }
    return out;
  }

  // drop terms with var-degree above maxdeg
  MultiPoly truncated(std::size_t v, std::uint32_t maxdeg) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
      if (e[v] <= maxdeg) out.terms_.emplace(e, c);
    return out;
  }

  template <class D, class Fn>
  MultiPoly<D> map_coeffs(Fn fn) const {
    MultiPoly<D> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(e, T::zero() - c);
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, T::zero() - c);
    return out;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.mul(b, std::nullopt); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = mul(o, std::nullopt); }
  friend MultiPoly operator*(const C& s, const MultiPoly& a) {
    MultiPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }

  // product with terms of var-degree above the cap discarded
  MultiPoly mul(const MultiPoly& b, std::optional<std::pair<std::size_t, std::uint32_t>> cap) const {
    MultiPoly out(vars_);
    out.unify(b);
    const std::size_t n = out.vars_.size();
    Exponent ex(n);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) ex[i] = (ea.empty() ? 0 : ea[i]) + (eb.empty() ? 0 : eb[i]);
        if (cap && ex[cap->first] > cap->second) continue;
        out.add_term(ex, ca * cb);
      }
    }
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(vars_, T::one());
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    if (a.vars_ != b.vars_) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + T::str(it->second) + ")";
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (it->first[i] == 0) continue;
        s += "*" + vars_[i];
        if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
      }
    }
    return s;
  }

 private:
  template <class D>
  friend class MultiPoly;

  static unsigned total_deg(const Exponent& e) {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
  }

  // constants built without variables adopt the other operand's list
  void unify(const MultiPoly& o) {
    if (vars_ == o.vars_ || o.vars_.empty()) return;
    if (vars_.empty()) {
      Terms moved;
      for (auto& [e, c] : terms_) moved.emplace(Exponent(o.vars_.size(), 0), c);
      terms_ = std::move(moved);
      vars_ = o.vars_;
      return;
    }
    throw std::invalid_argument("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

// exact composite f(assignment); with a cap, products discard terms above the
// given degree in the named target variable (truncated arithmetic, e.g. eps^2 = 0)
template <class C>
MultiPoly<C> poly_substitute(const MultiPoly<C>& f, const std::map<std::string, MultiPoly<C>>& assignment,
                             std::optional<std::pair<std::string, std::uint32_t>> cap = std::nullopt) {
  using T = CoeffTraits<C>;
  std::vector<const MultiPoly<C>*> images;
  std::vector<std::string> target;
  for (const auto& v : f.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw std::invalid_argument("variable " + v + " missing from assignment");
    images.push_back(&it->second);
    if (!it->second.variables().empty()) {
      if (target.empty()) target = it->second.variables();
      else if (target != it->second.variables())
        throw std::invalid_argument("substitution images over different variable lists");
    }
  }
  std::optional<std::pair<std::size_t, std::uint32_t>> icap;
  MultiPoly<C> probe(target);
  if (cap) icap = std::make_pair(probe.var_index(cap->first), cap->second);

  // powers of each image, built on demand
  std::vector<std::vector<MultiPoly<C>>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly<C>& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(MultiPoly<C>::constant(target, T::one()));
    while (pv.size() <= e) pv.push_back(pv.back().mul(*images[v], icap));
    return pv[e];
  };

  MultiPoly<C> out(target);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly<C> term = MultiPoly<C>::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term.mul(power(v, e[v]), icap);
    out += term;
  }
  return out;
}

// division by a single divisor with respect to the lexicographic order; for
// univariate inputs this is ordinary long division. The leading coefficient
// of g must be invertible.
template <class C>
std::pair<MultiPoly<C>, MultiPoly<C>> poly_divrem(const MultiPoly<C>& f, const MultiPoly<C>& g) {
  using T = CoeffTraits<C>;
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!f.is_zero() && !g.variables().empty() && f.variables() != g.variables())
    throw std::invalid_argument("polynomials over different variable lists");
  const auto& vars = g.variables().empty() ? f.variables() : g.variables();
  auto lead = g.terms().rbegin();
  const auto& lt = lead->first;
  C inv = T::inverse(lead->second);
  MultiPoly<C> q(vars), r(vars), p = f;
  while (!p.is_zero()) {
    auto top = p.terms().rbegin();
    auto e = top->first;
    C c = top->second;
    bool divisible = !lt.empty() || e.empty();
    typename MultiPoly<C>::Exponent shift(e.size(), 0);
    for (std::size_t i = 0; i < e.size() && divisible; ++i) {
      std::uint32_t li = lt.empty() ? 0 : lt[i];
      if (e[i] < li) divisible = false;
      else shift[i] = e[i] - li;
    }
    if (!divisible) {
      r.add_term(e, c);
      MultiPoly<C> drop(vars);
      drop.add_term(e, c);
      p -= drop;
      continue;
    }
    MultiPoly<C> m(vars);
    m.add_term(shift, c * inv);
    q += m;
    p -= m * g;
  }
  return {q, r};
}

using QMultiPoly = MultiPoly<BigRational>;
using GMultiPoly = MultiPoly<GaussRational>;

}  // namespace maschke::algebra
