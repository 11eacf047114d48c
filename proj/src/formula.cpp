#include "hgcount/formula.hpp"

#include <numeric>

#include "hgcount/numtheory.hpp"

namespace hg {

namespace {

Int pow2_omega(Int n) { return Int{1} << prime_support(n).size(); }

std::vector<std::string> check_preconditions(const DihCycParams& gamma, const DihCycParams& g) {
  std::vector<std::string> used;
  if (gamma.k < 1 || gamma.l < 1 || g.k < 1 || g.l < 1 || gamma.k % 2 == 0 ||
      gamma.l % 2 == 0 || g.k % 2 == 0 || g.l % 2 == 0)
    throw PreconditionError("odd-order", "parameters must be odd and positive");
  used.push_back("odd-order");
  if (gamma.n() != g.n())
    throw PreconditionError("order-mismatch", "group orders differ: 2*" + std::to_string(gamma.n()) +
                                                  " vs 2*" + std::to_string(g.n()));
  const Int n = gamma.n();
  used.push_back("order-match(N=" + std::to_string(n) + ")");
  if (std::gcd(gamma.k, gamma.l) != 1 || std::gcd(g.k, g.l) != 1)
    throw PreconditionError("coprimality", "(k, l) must be coprime for the closed forms");
  used.push_back("coprimality");
  if (gamma.l == 1) {
    used.push_back("dihedral-gamma(l1=1, Burnside hypothesis not needed)");
  } else {
    Int rad = radical(n);
    if (!is_burnside(rad))
      throw PreconditionError("burnside",
                              "radical(" + std::to_string(n) + ") = " + std::to_string(rad) +
                                  " is not a Burnside number and l1 > 1");
    used.push_back("burnside(rad(" + std::to_string(n) + ")=" + std::to_string(rad) + ")");
  }
  return used;
}

Int exact_div(Int num, Int den, const char* what) {
  if (den == 0 || num % den != 0)
    throw InternalError(std::string(what) + ": non-exact division " + std::to_string(num) + "/" +
                        std::to_string(den));
  return num / den;
}

}  // namespace

std::optional<std::string> formula_violation(const DihCycParams& gamma, const DihCycParams& g) {
  try {
    check_preconditions(gamma, g);
    return std::nullopt;
  } catch (const PreconditionError& err) {
    return err.condition;
  }
}

Int e_prime_formula(const DihCycParams& gamma, const DihCycParams& g) {
  check_preconditions(gamma, g);
  Int num = checked_mul(checked_mul(gamma.l, gamma.n()), pow2_omega(g.k));
  Int den = checked_mul(checked_mul(gamma.k, std::gcd(gamma.l, g.l)), radical(gamma.l));
  return exact_div(num, den, "e_prime_formula");
}

Int e_formula(const DihCycParams& gamma, const DihCycParams& g) {
  auto used = check_preconditions(gamma, g);
  Int num = checked_mul(checked_mul(gamma.l, g.l), pow2_omega(g.k));
  Int den = checked_mul(std::gcd(gamma.l, g.l), radical(gamma.l));
  Int e = exact_div(num, den, "e_formula");
  // e * |Aut(G)| = e' * |Aut(Gamma)| must hold exactly
  Int ep = e_prime_formula(gamma, g);
  if (checked_mul(e, aut_order(g)) != checked_mul(ep, aut_order(gamma)))
    throw InternalError("e_formula: conversion identity violated");
  return e;
}

CountReport count_report(const DihCycParams& gamma, const DihCycParams& g) {
  CountReport rep;
  rep.gamma = gamma;
  rep.g = g;
  rep.preconditions_used = check_preconditions(gamma, g);
  rep.e_prime = e_prime_formula(gamma, g);
  rep.e = e_formula(gamma, g);
  return rep;
}

Int e_dihedral_noncoprime(Int n, Int k, Int l) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("N must be odd and positive");
  if (k < 1 || l < 1 || checked_mul(k, l) != n) throw std::invalid_argument("k*l must equal N");
  if (std::gcd(k, l) == 1)
    throw std::invalid_argument("(k, l) is coprime; use e_formula for that case");
  return 0;
}

DihedralBound dihedral_total_lower_bound(Int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("N must be odd and positive");
  DihedralBound bound;
  DihCycParams dihedral{n, 1};
  for (auto [k, l] : coprime_factorizations(n))
    bound.authoritative = checked_add(bound.authoritative, e_formula(dihedral, DihCycParams{k, l}));

  auto coeffs = prime_power_polynomial(n);
  for (std::size_t deg = 0; deg < coeffs.size(); ++deg) {
    Int pw = 1;
    for (std::size_t i = 0; i < deg; ++i) pw = checked_mul(pw, 2);
    bound.poly = checked_add(bound.poly, checked_mul(pw, coeffs[deg]));
  }

  // literal reading: the M-th term is 2^M * coeff(n - M), nonzero only when
  // n - M lands inside the polynomial degree range
  try {
    Int literal = 0;
    for (std::size_t deg = 0; deg < coeffs.size(); ++deg) {
      Int m = n - static_cast<Int>(deg);
      if (m < 0) continue;
      Int pw = 1;
      for (Int i = 0; i < m; ++i) pw = checked_mul(pw, 2);
      literal = checked_add(literal, checked_mul(pw, coeffs[deg]));
    }
    bound.literal = literal;
  } catch (const Error&) {
    bound.literal.reset();  // exceeds 64 bits; the comparison value is moot anyway
  }
  return bound;
}

Int skew_brace_formula(const DihCycParams& additive, const DihCycParams& multiplicative) {
  return e_prime_formula(additive, multiplicative);
}

}  // namespace hg
