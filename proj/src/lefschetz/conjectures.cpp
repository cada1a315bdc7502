// conjectured identities between counts and the newform tables. Where a
// table has no entry, the identity is checked through what it implies for
// counted quantities alone: b(f24B) is recovered from C3, the sum c + d (or
// 2c + d) from the Prym trace, and the rest has to be consistent with them
#include <sstream>

#include "maschke/lefschetz/lefschetz.hpp"

namespace maschke::lefschetz {

using counting::VarietyId;

namespace {

std::int64_t get(const CountMap& counts, VarietyId id) {
  auto it = counts.find(id);
  if (it == counts.end()) throw MissingCount("identity needs a count of " + counting::to_string(id));
  return it->second;
}

struct Forms {
  std::optional<std::int64_t> a, b, c, d;     // f120, f24B, f120E, f15C
  std::optional<std::int64_t> b1, c1, d1;     // f210, f840, f1680
};

Forms forms_at(const Tables& t, std::uint64_t p) {
  return {t["f120"].at(p), t["f24B"].at(p), t["f120E"].at(p), t["f15C"].at(p),
          t["f210"].at(p), t["f840"].at(p), t["f1680"].at(p)};
}

bool sq_le(std::int64_t v, std::int64_t bound_sq) { return v * v <= bound_sq; }

// b(f24B) from tr H1(C3) = (2 + s) b
std::optional<std::int64_t> b_from_C3(std::int64_t trC3, int s) {
  if (trC3 % (2 + s) != 0) return std::nullopt;
  return trC3 / (2 + s);
}

std::string kv(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

IdentityCheck check_X(Identity id, std::uint64_t p, const CountMap& counts, const Tables& tables) {
  IdentityCheck r{id, p, 1, false, false, false, {}};
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t cube_sum = 1 + P + P * P + P * P * P;
  const std::int64_t nX = get(counts, VarietyId::X);
  const Forms f = forms_at(tables, p);
  const bool one_mod_4 = p % 4 == 1;
  if (f.a && f.b && f.c && f.d) {
    r.from_fixtures = true;
    std::int64_t lin = 0;
    if (one_mod_4)
      lin = 54 * *f.b + 50 * *f.c + 45 * *f.d;
    else if (id == Identity::XPrinted)
      lin = 18 * *f.b + 23 * *f.c + 9 * *f.d;
    else
      lin = 18 * *f.b + 14 * *f.c + 9 * *f.d;
    const std::int64_t expect = cube_sum - (*f.a + P * lin);
    r.pass = nX == expect;
    r.detail = kv({{"count", nX}, {"formula", expect}});
    return r;
  }
  const int s = sigma(kSigma100, p);
  const std::int64_t trYhat = cube_sum - get(counts, VarietyId::Y);
  const std::int64_t trc = (cube_sum - nX) - trYhat;
  const std::int64_t prym = get(counts, VarietyId::Cplus) - get(counts, VarietyId::Ctilde);
  const auto b = b_from_C3(P + 1 - get(counts, VarietyId::C3), s);
  if (!b) {
    r.detail = "tr H1(C3) not divisible by 2 + sigma";
    return r;
  }
  if (one_mod_4) {
    // prym = 12 b + 6 (c + d), tr_c = 45 p (b + c + d)
    if ((prym - 12 * *b) % 6 != 0) {
      r.detail = kv({{"prym", prym}, {"b", *b}}) + " prym - 12b not divisible by 6";
      return r;
    }
    const std::int64_t expect = 45 * P * (*b + (prym - 12 * *b) / 6);
    r.pass = trc == expect;
    r.detail = kv({{"tr_c", trc}, {"expected", expect}, {"b", *b}, {"prym", prym}});
    return r;
  }
  if (id == Identity::XPrinted) {
    // printed coefficients with the Yhat identity: tr_c = 9 p (b + 2c + d), and prym = 6b + 2(2c + d)
    if ((prym - 6 * *b) % 2 != 0) {
      r.detail = kv({{"prym", prym}, {"b", *b}}) + " prym - 6b odd";
      return r;
    }
    const std::int64_t expect = 9 * P * (*b + (prym - 6 * *b) / 2);
    r.pass = trc == expect;
    r.detail = kv({{"tr_c", trc}, {"expected", expect}, {"b", *b}, {"prym", prym}});
    return r;
  }
  // composed: tr_c = 9 p (b + c + d); solve c, d from prym and check Weil bounds,
  // then a = trYhat - p (9b + 5c) must be a weight 4 trace
  if (trc % (9 * P) != 0) {
    r.detail = kv({{"tr_c", trc}}) + " not divisible by 9p";
    return r;
  }
  const std::int64_t sum = trc / (9 * P);
  const std::int64_t twice_c = prym - 6 * *b - 2 * (sum - *b);
  if (twice_c % 2 != 0) {
    r.detail = kv({{"tr_c", trc}, {"prym", prym}, {"b", *b}}) + " c not integral";
    return r;
  }
  const std::int64_t c = twice_c / 2, d = sum - *b - c;
  const std::int64_t a = trYhat - P * (9 * *b + 5 * c);
  r.pass = sq_le(c, 4 * P) && sq_le(d, 4 * P) && sq_le(*b, 4 * P) && sq_le(a, 4 * P * P * P);
  r.detail = kv({{"a", a}, {"b", *b}, {"c", c}, {"d", d}}) + " (solved, Weil-checked)";
  return r;
}

}  // namespace

std::string to_string(Identity id) {
  switch (id) {
    case Identity::XPrinted: return "X count, printed coefficients";
    case Identity::XComposed: return "X count, composed coefficients";
    case Identity::YhatForms: return "Yhat trace vs forms";
    case Identity::Div45: return "45 | tr H3_c(X)";
    case Identity::Prym: return "Prym trace vs forms";
    case Identity::CplusForms: return "C+ trace vs forms";
    case Identity::C3Forms: return "C3 trace vs f24B";
  }
  return "?";
}

std::vector<VarietyId> identity_inputs(Identity id) {
  switch (id) {
    case Identity::XPrinted:
    case Identity::XComposed:
      return {VarietyId::X, VarietyId::Y, VarietyId::Cplus, VarietyId::Ctilde, VarietyId::C3};
    case Identity::YhatForms:
      return {VarietyId::Y};
    case Identity::Div45:
      return {VarietyId::X, VarietyId::Y};
    case Identity::Prym:
      return {VarietyId::Cplus, VarietyId::Ctilde, VarietyId::C3};
    case Identity::CplusForms:
      return {VarietyId::Cplus};
    case Identity::C3Forms:
      return {VarietyId::C3};
  }
  return {};
}

IdentityCheck check_identity(Identity id, std::uint64_t p, const CountMap& counts, const Tables& tables,
                             unsigned k) {
  const auto P = static_cast<std::int64_t>(p);
  const int s = sigma(kSigma100, p);
  IdentityCheck r{id, p, k, false, false, false, {}};
  switch (id) {
    case Identity::XPrinted:
    case Identity::XComposed:
      return check_X(id, p, counts, tables);
    case Identity::YhatForms: {
      const Forms f = forms_at(tables, p);
      if (!(f.a && f.b && f.c)) {
        r.pass = r.skipped = true;
        r.detail = "no table entries";
        return r;
      }
      r.from_fixtures = true;
      const std::int64_t tr = extract_trace(Target::trYhat, static_cast<std::uint32_t>(p), 1, counts).value;
      const std::int64_t expect = *f.a + P * (9 * *f.b + 5 * *f.c);
      r.pass = tr == expect;
      r.detail = kv({{"trace", tr}, {"forms", expect}});
      return r;
    }
    case Identity::Div45: {
      std::int64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= P;
      const std::int64_t trc = extract_trace(Target::trXc, static_cast<std::uint32_t>(p), k, counts).value;
      if (q % 4 != 1) {
        r.pass = r.skipped = true;
        r.detail = "q = 3 mod 4";
        return r;
      }
      r.pass = trc % 45 == 0;
      r.detail = kv({{"q", q}, {"tr_c", trc}});
      return r;
    }
    case Identity::Prym: {
      const std::int64_t prym = get(counts, VarietyId::Cplus) - get(counts, VarietyId::Ctilde);
      const Forms f = forms_at(tables, p);
      if (f.b && f.c && f.d) {
        r.from_fixtures = true;
        const std::int64_t expect = (9 + 3 * s) * *f.b + (5 + s) * *f.c + (4 + 2 * s) * *f.d;
        r.pass = prym == expect;
        r.detail = kv({{"prym", prym}, {"forms", expect}});
        return r;
      }
      const auto b = b_from_C3(P + 1 - get(counts, VarietyId::C3), s);
      if (!b) {
        r.detail = "tr H1(C3) not divisible by 2 + sigma";
        return r;
      }
      // s = 1: prym - 12b = 6(c + d), s = -1: prym - 6b = 2(2c + d)
      const std::int64_t rest = prym - (9 + 3 * s) * *b, unit = s > 0 ? 6 : 2, weight = s > 0 ? 2 : 3;
      r.pass = rest % unit == 0 && sq_le(rest / unit, weight * weight * 4 * P);
      r.detail = kv({{"prym", prym}, {"b", *b}}) + " (C3-derived b, Weil-checked remainder)";
      return r;
    }
    case Identity::CplusForms: {
      const std::int64_t tr = P + 1 - get(counts, VarietyId::Cplus);
      const Forms f = forms_at(tables, p);
      if (f.b1 && f.c1 && f.d1) {
        r.from_fixtures = true;
        const std::int64_t expect = 3 * *f.b1 + (2 + s) * *f.c1 + (1 + 2 * s) * *f.d1;
        r.pass = tr == expect;
        r.detail = kv({{"trace", tr}, {"forms", expect}});
        return r;
      }
      // s = 1 forces 3 | trace
      r.pass = within_weil_bound(Target::trCplus, p, tr) && (s < 0 || tr % 3 == 0);
      r.detail = kv({{"trace", tr}}) + " (no table entries; divisibility and Weil bound)";
      return r;
    }
    case Identity::C3Forms: {
      const std::int64_t tr = P + 1 - get(counts, VarietyId::C3);
      if (auto b = tables["f24B"].at(p)) {
        r.from_fixtures = true;
        r.pass = tr == (2 + s) * *b;
        r.detail = kv({{"trace", tr}, {"forms", (2 + s) * *b}});
        return r;
      }
      const auto b = b_from_C3(tr, s);
      r.pass = b && sq_le(*b, 4 * P);
      r.detail = kv({{"trace", tr}}) + " (no table entry; divisibility and Weil bound)";
      return r;
    }
  }
  return r;
}

}  // namespace maschke::lefschetz
