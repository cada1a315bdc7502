#include "maschke/lefschetz/lefschetz.hpp"

namespace maschke::lefschetz {

using counting::VarietyId;

namespace {

std::int64_t power(std::uint64_t p, unsigned k) {
  std::int64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= static_cast<std::int64_t>(p);
  return q;
}

std::int64_t need(const CountMap& counts, VarietyId id, Target t) {
  auto it = counts.find(id);
  if (it == counts.end()) throw MissingCount(to_string(t) + " needs a count of " + counting::to_string(id));
  return it->second;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, Target t, std::uint64_t q) {
  if (den == 0 || num % den != 0)
    throw InconsistentCounts(to_string(t) + " at q=" + std::to_string(q) + ": " + std::to_string(num) +
                             " not divisible by " + std::to_string(den));
  return num / den;
}

int curve_genus(Target t) {
  switch (t) {
    case Target::trCplus:
    case Target::trCminus:
      return 9;
    case Target::trCtilde:
      return 33;
    case Target::trC3:
    case Target::trCbar:
      return 3;
    case Target::trC7:
      return 7;
    case Target::prym:
      return 24;  // H^1 of the double cover minus H^1 of the base
    default:
      return 0;
  }
}

}  // namespace

std::string to_string(Target t) {
  switch (t) {
    case Target::aW: return "a_q(W)";
    case Target::aSbar: return "a_p(Sbar)";
    case Target::aU: return "a_p(U)";
    case Target::bS: return "b_q(S)";
    case Target::trYhat: return "tr H3(Yhat)";
    case Target::trXc: return "tr H3_c(X)";
    case Target::trCplus: return "tr H1(C+)";
    case Target::trCminus: return "tr H1(C-)";
    case Target::trCtilde: return "tr H1(C~+)";
    case Target::trC3: return "tr H1(C3)";
    case Target::trCbar: return "tr H1(Cbar)";
    case Target::trC7: return "tr H1(C7)";
    case Target::prym: return "tr H1(C~+)_-";
  }
  return "?";
}

std::int64_t resolved_W(std::int64_t countW, std::uint64_t p, unsigned k) {
  const std::int64_t q = power(p, k);
  return q % 3 == 1 ? countW + 12 * q : countW;
}

std::int64_t resolved_U(std::int64_t countU, std::uint64_t p, unsigned k) {
  const std::int64_t q = power(p, k);
  return q % 3 == 1 ? countU + 30 * q : countU;
}

std::int64_t resolved_Yhat(std::int64_t countY, std::uint64_t q) {
  const auto qq = static_cast<std::int64_t>(q);
  return countY + 15 * (qq * qq + qq);
}

bool within_weil_bound(Target t, std::uint64_t q, std::int64_t value) {
  using algebra::BigInt;
  const BigInt v = BigInt(static_cast<long>(value)) * value;
  const BigInt qq(static_cast<unsigned long>(q));
  switch (t) {
    case Target::aW:
    case Target::aSbar:
    case Target::aU:
      return v <= 4 * qq * qq;
    case Target::bS:
      return v <= 9 * qq * qq;
    case Target::trYhat:
      return v <= 900 * qq * qq * qq;
    case Target::trXc:
      return v <= 270 * 270 * qq * qq * qq;
    default: {
      const int g2 = 2 * curve_genus(t);
      return v <= BigInt(g2 * g2) * qq;
    }
  }
}

TraceRecord extract_trace(Target t, std::uint32_t p, unsigned k, const CountMap& counts) {
  const std::int64_t q = power(p, k);
  const std::int64_t cube_sum = 1 + q + q * q + q * q * q;
  std::int64_t v = 0;
  switch (t) {
    case Target::aW: {
      const std::int64_t w = resolved_W(need(counts, VarietyId::W, t), p, k);
      v = w - 1 - 10 * (1 + sigma(kSigma010, p, k)) * q - q * q;
      break;
    }
    case Target::aSbar: {
      // n = 4 + 4 s010 + 6 s100 + 3 s101 + 3 s110
      const int n = 4 + 4 * sigma(kSigma010, p, k) + 6 * sigma(kSigma100, p, k) + 3 * sigma(kSigma101, p, k) +
                    3 * sigma({1, 1, 0}, p, k);
      v = need(counts, VarietyId::Sbar, t) - 1 - n * q - q * q;
      break;
    }
    case Target::aU: {
      const std::int64_t u = resolved_U(need(counts, VarietyId::U, t), p, k);
      const int n = 26 + 25 * sigma(kSigma010, p, k) + sigma(kSigma001, p, k);
      v = exact_div(u - 1 - n * q - q * q, 5, t, q);
      break;
    }
    case Target::bS: {
      const TraceRecord a = extract_trace(Target::aW, p, k, counts);
      const std::int64_t rest = need(counts, VarietyId::S, t) - 1 - 5 * a.value - line_lattice_trace(p, k) - q * q;
      v = exact_div(rest, 18 + 12 * sigma(kSigma100, p, k), t, q);
      break;
    }
    case Target::trYhat:
      v = cube_sum - need(counts, VarietyId::Y, t);
      break;
    case Target::trXc:
      v = (cube_sum - need(counts, VarietyId::X, t)) - (cube_sum - need(counts, VarietyId::Y, t));
      break;
    case Target::trCplus:
      v = q + 1 - need(counts, VarietyId::Cplus, t);
      break;
    case Target::trCminus:
      v = q + 1 - need(counts, VarietyId::Cminus, t);
      break;
    case Target::trCtilde:
      v = q + 1 - need(counts, VarietyId::Ctilde, t);
      break;
    case Target::trC3:
      v = q + 1 - need(counts, VarietyId::C3, t);
      break;
    case Target::trCbar:
      v = q + 1 - need(counts, VarietyId::Cbar, t);
      break;
    case Target::trC7:
      v = q + 1 - need(counts, VarietyId::C7, t);
      break;
    case Target::prym:
      v = need(counts, VarietyId::Cplus, t) - need(counts, VarietyId::Ctilde, t);
      break;
  }
  if (!within_weil_bound(t, static_cast<std::uint64_t>(q), v))
    throw WeilBoundError(to_string(t) + " = " + std::to_string(v) + " at q=" + std::to_string(q) +
                         " violates the Weil bound");
  return {t, p, k, static_cast<std::uint64_t>(q), v};
}

}  // namespace maschke::lefschetz
