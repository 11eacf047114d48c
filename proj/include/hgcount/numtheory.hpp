#pragma once

// Exact integer and modular arithmetic used by the counting formulas and the
// enumeration oracle.  Everything is exact 64-bit arithmetic with 128-bit
// intermediates; there is no floating point anywhere in this library.

#include <utility>
#include <vector>

#include "hgcount/errors.hpp"

namespace hg {

// (prime, exponent) pairs, ascending by prime; empty for n = 1.
struct Factorization {
  std::vector<std::pair<Int, Int>> pairs;

  Int value() const;  // product of p^a over all pairs
};

Factorization factorize(Int n);

// Distinct primes dividing n, ascending.
std::vector<Int> prime_support(Int n);

// Product of the distinct primes dividing n; radical(1) = 1.
Int radical(Int n);

Int totient(Int n);

// Largest e with p^e | n.  Rejects non-prime p.
Int p_valuation(Int n, Int p);

// True iff gcd(n, totient(n)) = 1.
bool is_burnside(Int n);

// All ordered pairs (k, l) with k*l = n, gcd(k, l) = 1; each prime power of n
// goes wholly to one side.  Exactly 2^omega(n) pairs, ascending by k.
std::vector<std::pair<Int, Int>> coprime_factorizations(Int n);

// f_gamma(delta) = sum_{i<delta} gamma^i reduced mod modulus; f(0) = 0.
// Divide-and-conquer via f(2d) = f(d)*(1 + gamma^d), so log(delta) time.
Int geometric_sum(Int gamma, Int delta, Int modulus);

// Image of x in the p-primary component of Z_n, i.e. x mod p^{v_p(n)}.
// Rejects p not dividing n.
Int crt_project(Int x, Int n, Int p);

// Unique x mod prod(moduli) with the given projections; moduli must be
// pairwise coprime.  Inverse of crt_project when the moduli are the primary
// components of n.
Int crt_combine(const std::vector<std::pair<Int, Int>>& components);

// Coefficients of prod_{p | n} (x + p^{v_p(n)}), index = power of x.
// Length omega(n) + 1; n = 1 gives {1}.
std::vector<Int> prime_power_polynomial(Int n);

// Helpers shared with the group/holomorph modules.  mod_norm maps any integer
// into [0, m); mod_mul/mod_pow use 128-bit intermediates.
Int mod_norm(Int x, Int m);
Int mod_mul(Int a, Int b, Int m);
Int mod_pow(Int base, Int exp, Int m);
Int mod_inverse(Int a, Int m);  // rejects non-units

Int checked_mul(Int a, Int b);  // throws Error on int64 overflow
Int checked_add(Int a, Int b);

}  // namespace hg
