#include "hgcount/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace hg {

Int Factorization::value() const {
  Int n = 1;
  for (auto [p, a] : pairs)
    for (Int i = 0; i < a; ++i) n = checked_mul(n, p);
  return n;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in addition");
  return r;
}

Factorization factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  // trial division; inputs here stay at desk scale
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    Int a = 0;
    while (n % p == 0) n /= p, ++a;
    f.pairs.emplace_back(p, a);
  }
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

std::vector<Int> prime_support(Int n) {
  std::vector<Int> ps;
  for (auto [p, a] : factorize(n).pairs) ps.push_back(p);
  return ps;
}

Int radical(Int n) {
  Int r = 1;
  for (Int p : prime_support(n)) r = checked_mul(r, p);
  return r;
}

Int totient(Int n) {
  Int t = 1;
  for (auto [p, a] : factorize(n).pairs) {
    t = checked_mul(t, p - 1);
    for (Int i = 1; i < a; ++i) t = checked_mul(t, p);
  }
  return t;
}

Int p_valuation(Int n, Int p) {
  if (n <= 0) throw std::invalid_argument("p_valuation: n must be positive");
  if (p < 2 || factorize(p).pairs.size() != 1 || factorize(p).pairs[0].second != 1)
    throw std::invalid_argument("p_valuation: p must be prime");
  Int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

bool is_burnside(Int n) { return std::gcd(n, totient(n)) == 1; }

std::vector<std::pair<Int, Int>> coprime_factorizations(Int n) {
  auto f = factorize(n);
  const std::size_t m = f.pairs.size();
  std::vector<Int> ks;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Int k = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) {
        auto [p, a] = f.pairs[i];
        for (Int j = 0; j < a; ++j) k = checked_mul(k, p);
      }
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  std::vector<std::pair<Int, Int>> out;
  out.reserve(ks.size());
  for (Int k : ks) out.emplace_back(k, n / k);
  return out;
}

Int mod_norm(Int x, Int m) {
  if (m <= 0) throw std::invalid_argument("mod_norm: modulus must be positive");
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int mod_mul(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(mod_norm(a, m)) * mod_norm(b, m) % m);
}

Int mod_pow(Int base, Int exp, Int m) {
  if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
  Int r = mod_norm(1, m), b = mod_norm(base, m);
  while (exp) {
    if (exp & 1) r = mod_mul(r, b, m);
    b = mod_mul(b, b, m);
    exp >>= 1;
  }
  return r;
}

namespace {

// extended gcd: returns g and x with a*x = g mod m (b-coefficient dropped)
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (b == 0) {
    x = 1, y = 0;
    return a;
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// f_gamma(delta) together with gamma^delta, both mod m
std::pair<Int, Int> geom_sum_pow(Int gamma, Int delta, Int m) {
  if (delta == 0) return {0, mod_norm(1, m)};
  if (delta % 2 == 0) {
    auto [f, p] = geom_sum_pow(gamma, delta / 2, m);
    return {mod_mul(f, 1 + p, m), mod_mul(p, p, m)};
  }
  auto [f, p] = geom_sum_pow(gamma, delta - 1, m);
  return {mod_norm(f + p, m), mod_mul(p, gamma, m)};
}

}  // namespace

Int mod_inverse(Int a, Int m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  Int x, y;
  Int g = ext_gcd(mod_norm(a, m), m, x, y);
  if (g != 1 && m != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return mod_norm(x, m);
}

Int geometric_sum(Int gamma, Int delta, Int modulus) {
  if (delta < 0) throw std::invalid_argument("geometric_sum: delta must be non-negative");
  if (modulus <= 0) throw std::invalid_argument("geometric_sum: modulus must be positive");
  return geom_sum_pow(mod_norm(gamma, modulus), delta, modulus).first;
}

Int crt_project(Int x, Int n, Int p) {
  Int v = p_valuation(n, p);
  if (v == 0) throw std::invalid_argument("crt_project: p does not divide n");
  Int q = 1;
  for (Int i = 0; i < v; ++i) q = checked_mul(q, p);
  return mod_norm(x, q);
}

Int crt_combine(const std::vector<std::pair<Int, Int>>& components) {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].second <= 0)
      throw std::invalid_argument("crt_combine: moduli must be positive");
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (std::gcd(components[i].second, components[j].second) != 1)
        throw std::invalid_argument("crt_combine: moduli must be pairwise coprime");
  }
  Int x = 0, big = 1;
  for (auto [r, m] : components) {
    // solve x + big*t = r mod m
    Int t = mod_mul(mod_norm(r - x, m), mod_inverse(big, m), m);
    x = checked_add(x, checked_mul(big, t));
    big = checked_mul(big, m);
  }
  return mod_norm(x, big);
}

std::vector<Int> prime_power_polynomial(Int n) {
  std::vector<Int> coeffs{1};
  for (auto [p, a] : factorize(n).pairs) {
    Int q = 1;
    for (Int i = 0; i < a; ++i) q = checked_mul(q, p);
    std::vector<Int> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = checked_add(next[i + 1], coeffs[i]);
      next[i] = checked_add(next[i], checked_mul(coeffs[i], q));
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace hg
