#include "hgcount/holomorph.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

#include "hgcount/numtheory.hpp"

namespace hg {

HolElement hol_identity(const DihCycParams& p) {
  return HolElement{identity_element(), identity_aut(p)};
}

Int hol_size(const DihCycParams& p) { return checked_mul(p.order(), aut_order(p)); }

HolElement hol_mul(const DihCycParams& p, const HolElement& x, const HolElement& y) {
  return HolElement{mul(p, x.g, aut_apply(p, x.f, y.g)), aut_compose(p, x.f, y.f)};
}

HolElement hol_inverse(const DihCycParams& p, const HolElement& x) {
  AutElement fi = aut_inverse(p, x.f);
  return HolElement{aut_apply(p, fi, inverse(p, x.g)), fi};
}

HolElement hol_pow(const DihCycParams& p, const HolElement& x, Int exp) {
  if (exp < 0) return hol_pow(p, hol_inverse(p, x), -exp);
  HolElement r = hol_identity(p), b = x;
  while (exp) {
    if (exp & 1) r = hol_mul(p, r, b);
    b = hol_mul(p, b, b);
    exp >>= 1;
  }
  return r;
}

Int hol_order(const DihCycParams& p, const HolElement& x) {
  Int o = hol_size(p);
  for (auto [q, a] : factorize(o).pairs)
    while (o % q == 0 && hol_pow(p, x, o / q) == hol_identity(p)) o /= q;
  return o;
}

Int hol_order_iterative(const DihCycParams& p, const HolElement& x) {
  HolElement y = x;
  Int n = 1;
  while (!(y == hol_identity(p))) {
    y = hol_mul(p, y, x);
    ++n;
  }
  return n;
}

GroupElement hol_act(const DihCycParams& p, const HolElement& h, const GroupElement& x) {
  return mul(p, h.g, aut_apply(p, h.f, x));
}

std::vector<HolElement> all_hol_elements(const DihCycParams& p, Int size_guard) {
  HolContext ctx(p, size_guard);
  std::vector<HolElement> out;
  out.reserve(static_cast<std::size_t>(ctx.size()));
  for (Int i = 0; i < ctx.size(); ++i) out.push_back(ctx.hol_at(i));
  return out;
}

std::map<Int, Int> order_census(const DihCycParams& p, Int size_guard) {
  HolContext ctx(p, size_guard);
  std::map<Int, Int> census;
  for (Int i = 0; i < ctx.size(); ++i) ++census[ctx.order_h(i)];
  return census;
}

MatrixTriple to_matrix_triple(const DihCycParams&, const HolElement& h) {
  return MatrixTriple{h.f.b, h.g.texp, h.g.rexp, h.g.sexp, h.f.d, h.f.c};
}

HolElement from_matrix_triple(const DihCycParams& p, const MatrixTriple& t) {
  return HolElement{make_element(p, t.i, t.j, t.a), make_aut(p, t.b, t.d, t.c)};
}

std::string render_matrix_triple(const MatrixTriple& t) {
  std::ostringstream os;
  os << "((" << t.b << " " << t.a << ";0 1), r^" << t.i << " s^" << t.j << ", (" << t.d << " "
     << t.c << ";0 1))";
  return os.str();
}

MatrixTriple parse_matrix_triple(const std::string& s) {
  MatrixTriple t;
  int consumed = 0;
  long long b, a, i, j, d, c;
  if (std::sscanf(s.c_str(), "((%lld %lld;0 1), r^%lld s^%lld, (%lld %lld;0 1))%n", &b, &a, &i,
                  &j, &d, &c, &consumed) != 6 ||
      static_cast<std::size_t>(consumed) != s.size())
    throw std::invalid_argument("unparsable matrix triple: " + s);
  t.b = b, t.a = a, t.i = i, t.j = j, t.d = d, t.c = c;
  return t;
}

HolContext::HolContext(const DihCycParams& params, Int size_guard) : p_(params) {
  Int total = hol_size(p_);
  if (total > size_guard)
    throw SizeGuardError(total, size_guard, "holomorph of " + group_name(p_));
  ng_ = p_.order();

  unit_pos_l_.assign(static_cast<std::size_t>(p_.l), -1);
  unit_inv_l_.assign(static_cast<std::size_t>(p_.l), -1);
  for (Int b = 0; b < p_.l; ++b)
    if (std::gcd(b, p_.l) == 1) {
      unit_pos_l_[static_cast<std::size_t>(b)] = static_cast<Int>(units_l_.size());
      unit_inv_l_[static_cast<std::size_t>(b)] = mod_inverse(b, p_.l);
      units_l_.push_back(b);
    }
  unit_pos_k_.assign(static_cast<std::size_t>(p_.k), -1);
  unit_inv_k_.assign(static_cast<std::size_t>(p_.k), -1);
  for (Int d = 0; d < p_.k; ++d)
    if (std::gcd(d, p_.k) == 1) {
      unit_pos_k_[static_cast<std::size_t>(d)] = static_cast<Int>(units_k_.size());
      unit_inv_k_[static_cast<std::size_t>(d)] = mod_inverse(d, p_.k);
      units_k_.push_back(d);
    }
  nd_ = static_cast<Int>(units_k_.size());
  na_ = static_cast<Int>(units_l_.size()) * nd_ * p_.k;
  if (na_ != aut_order(p_)) throw InternalError("automorphism index layout mismatch");
  hol_primes_ = factorize(total).pairs;
}

Int HolContext::aut_index(const AutElement& f) const {
  Int pb = unit_pos_l_[static_cast<std::size_t>(f.b)];
  Int pd = unit_pos_k_[static_cast<std::size_t>(f.d)];
  return (pb * nd_ + pd) * p_.k + f.c;
}

AutElement HolContext::aut_at(Int idx) const {
  Int c = idx % p_.k;
  idx /= p_.k;
  return AutElement{units_l_[static_cast<std::size_t>(idx / nd_)],
                    units_k_[static_cast<std::size_t>(idx % nd_)], c};
}

Int HolContext::hol_index(const HolElement& h) const {
  return element_index(p_, h.g) * na_ + aut_index(h.f);
}

HolElement HolContext::hol_at(Int idx) const {
  return HolElement{element_at(p_, idx / na_), aut_at(idx % na_)};
}

Int HolContext::mul_g(Int x, Int y) const {
  Int xr = x % p_.k, yr = y % p_.k;
  Int xs = (x / p_.k) % 2, ys = (y / p_.k) % 2;
  Int xt = x / (2 * p_.k), yt = y / (2 * p_.k);
  Int r = xs ? mod_norm(xr - yr, p_.k) : mod_norm(xr + yr, p_.k);
  return r + p_.k * (((xs + ys) % 2) + 2 * ((xt + yt) % p_.l));
}

Int HolContext::apply(Int f, Int x) const {
  Int c = f % p_.k;
  Int fd = units_k_[static_cast<std::size_t>((f / p_.k) % nd_)];
  Int fb = units_l_[static_cast<std::size_t>(f / (p_.k * nd_))];
  Int xr = x % p_.k, xs = (x / p_.k) % 2, xt = x / (2 * p_.k);
  return (fd * xr + xs * c) % p_.k + p_.k * (xs + 2 * ((fb * xt) % p_.l));
}

Int HolContext::mul_f(Int f, Int g) const {
  Int fc = f % p_.k, gc = g % p_.k;
  Int fdp = (f / p_.k) % nd_, gdp = (g / p_.k) % nd_;
  Int fbp = f / (p_.k * nd_), gbp = g / (p_.k * nd_);
  Int fd = units_k_[static_cast<std::size_t>(fdp)];
  Int b = (units_l_[static_cast<std::size_t>(fbp)] * units_l_[static_cast<std::size_t>(gbp)]) % p_.l;
  Int d = (fd * units_k_[static_cast<std::size_t>(gdp)]) % p_.k;
  Int c = (fd * gc + fc) % p_.k;
  return (unit_pos_l_[static_cast<std::size_t>(b)] * nd_ + unit_pos_k_[static_cast<std::size_t>(d)]) * p_.k + c;
}

Int HolContext::inv_f(Int f) const {
  Int c = f % p_.k;
  Int d = units_k_[static_cast<std::size_t>((f / p_.k) % nd_)];
  Int b = units_l_[static_cast<std::size_t>(f / (p_.k * nd_))];
  Int bi = unit_inv_l_[static_cast<std::size_t>(b)];
  Int di = unit_inv_k_[static_cast<std::size_t>(d)];
  Int ci = mod_norm(-di * c, p_.k);
  return (unit_pos_l_[static_cast<std::size_t>(bi)] * nd_ + unit_pos_k_[static_cast<std::size_t>(di)]) * p_.k + ci;
}

Int HolContext::mul_h(Int x, Int y) const {
  Int xg = x / na_, xf = x % na_;
  Int yg = y / na_, yf = y % na_;
  return mul_g(xg, apply(xf, yg)) * na_ + mul_f(xf, yf);
}

Int HolContext::inv_h(Int x) const {
  Int xg = x / na_, xf = x % na_;
  Int fi = inv_f(xf);
  // inverse of g, then pushed through f^-1
  Int gr = xg % p_.k, gs = (xg / p_.k) % 2, gt = xg / (2 * p_.k);
  Int ig = (gs ? gr : mod_norm(-gr, p_.k)) + p_.k * (gs + 2 * mod_norm(-gt, p_.l));
  return apply(fi, ig) * na_ + fi;
}

Int HolContext::pow_h(Int x, Int e) const {
  Int r = 0, b = x;
  while (e) {
    if (e & 1) r = mul_h(r, b);
    b = mul_h(b, b);
    e >>= 1;
  }
  return r;
}

Int HolContext::order_h(Int x) const {
  Int o = size();
  for (auto [q, a] : hol_primes_)
    while (o % q == 0 && pow_h(x, o / q) == 0) o /= q;
  return o;
}

}  // namespace hg
