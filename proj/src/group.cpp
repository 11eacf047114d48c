#include "hgcount/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hgcount/numtheory.hpp"

namespace hg {

DihCycParams make_params(Int k, Int l) {
  if (k < 1 || l < 1 || k % 2 == 0 || l % 2 == 0)
    throw std::invalid_argument("parameters k, l must be odd and positive");
  return DihCycParams{k, l};
}

std::string group_name(const DihCycParams& p) {
  if (p.k == 1) return "C" + std::to_string(2 * p.l);
  if (p.l == 1) return "D" + std::to_string(2 * p.k);
  return "D" + std::to_string(2 * p.k) + "xC" + std::to_string(p.l);
}

GroupElement identity_element() { return GroupElement{0, 0, 0}; }

GroupElement make_element(const DihCycParams& p, Int rexp, Int sexp, Int texp) {
  return GroupElement{mod_norm(rexp, p.k), mod_norm(sexp, 2), mod_norm(texp, p.l)};
}

GroupElement mul(const DihCycParams& p, const GroupElement& x, const GroupElement& y) {
  Int sign = x.sexp ? -1 : 1;
  return GroupElement{mod_norm(x.rexp + sign * y.rexp, p.k), mod_norm(x.sexp + y.sexp, 2),
                      mod_norm(x.texp + y.texp, p.l)};
}

GroupElement inverse(const DihCycParams& p, const GroupElement& x) {
  // reflections are involutions in the dihedral part
  Int r = x.sexp ? x.rexp : mod_norm(-x.rexp, p.k);
  return GroupElement{r, x.sexp, mod_norm(-x.texp, p.l)};
}

Int element_order(const DihCycParams& p, const GroupElement& x) {
  GroupElement y = x;
  Int n = 1;
  while (!(y == identity_element())) {
    y = mul(p, y, x);
    ++n;
  }
  return n;
}

Int element_index(const DihCycParams& p, const GroupElement& x) {
  return x.rexp + p.k * (x.sexp + 2 * x.texp);
}

GroupElement element_at(const DihCycParams& p, Int index) {
  Int rexp = index % p.k;
  index /= p.k;
  return GroupElement{rexp, index % 2, index / 2};
}

std::vector<GroupElement> all_elements(const DihCycParams& p, Int size_guard) {
  Int n = p.order();
  if (n > size_guard) throw SizeGuardError(n, size_guard, "element enumeration of " + group_name(p));
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i) out.push_back(element_at(p, i));
  return out;
}

AutElement identity_aut(const DihCycParams& p) {
  return AutElement{mod_norm(1, p.l), mod_norm(1, p.k), 0};
}

AutElement make_aut(const DihCycParams& p, Int b, Int d, Int c) {
  AutElement f{mod_norm(b, p.l), mod_norm(d, p.k), mod_norm(c, p.k)};
  if (std::gcd(f.b, p.l) != 1 || std::gcd(f.d, p.k) != 1)
    throw std::invalid_argument("automorphism parameters must be units");
  return f;
}

GroupElement aut_apply(const DihCycParams& p, const AutElement& f, const GroupElement& x) {
  return GroupElement{mod_norm(f.d * x.rexp + x.sexp * f.c, p.k), x.sexp,
                      mod_norm(f.b * x.texp, p.l)};
}

AutElement aut_compose(const DihCycParams& p, const AutElement& f, const AutElement& g) {
  return AutElement{mod_mul(f.b, g.b, p.l), mod_mul(f.d, g.d, p.k),
                    mod_norm(f.d * g.c + f.c, p.k)};
}

AutElement aut_inverse(const DihCycParams& p, const AutElement& f) {
  Int bi = mod_inverse(f.b, p.l);
  Int di = mod_inverse(f.d, p.k);
  return AutElement{bi, di, mod_norm(-mod_mul(di, f.c, p.k), p.k)};
}

std::vector<AutElement> all_automorphisms(const DihCycParams& p, Int size_guard) {
  Int count = aut_order(p);
  if (count > size_guard)
    throw SizeGuardError(count, size_guard, "automorphism enumeration of " + group_name(p));
  std::vector<AutElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int b = 0; b < std::max<Int>(p.l, 1); ++b) {
    if (std::gcd(b, p.l) != 1) continue;
    for (Int d = 0; d < std::max<Int>(p.k, 1); ++d) {
      if (std::gcd(d, p.k) != 1) continue;
      for (Int c = 0; c < p.k; ++c) out.push_back(AutElement{b, d, c});
    }
  }
  if (static_cast<Int>(out.size()) != count)
    throw InternalError("automorphism count mismatch for " + group_name(p));
  return out;
}

Int aut_order(const DihCycParams& p) {
  // phi(l) * k * phi(k); the k = 1 corner collapses to phi(l) on its own
  return checked_mul(totient(p.l), checked_mul(p.k, totient(p.k)));
}

TypeTag TypeTag::dih_cyc(Int k, Int l) {
  TypeTag t;
  t.kind = Kind::DihCyc;
  t.k = k;
  t.l = l;
  return t;
}

TypeTag TypeTag::other(std::vector<std::pair<Int, Int>> profile) {
  TypeTag t;
  t.kind = Kind::Other;
  t.profile = std::move(profile);
  return t;
}

bool operator<(const TypeTag& a, const TypeTag& b) {
  if (a.kind != b.kind) return a.kind == TypeTag::Kind::DihCyc;
  if (a.kind == TypeTag::Kind::DihCyc) return std::pair{a.k, a.l} < std::pair{b.k, b.l};
  return a.profile < b.profile;
}

std::string to_string(const TypeTag& t) {
  if (t.kind == TypeTag::Kind::DihCyc)
    return group_name(DihCycParams{t.k, t.l}) + "(" + std::to_string(t.k) + "," +
           std::to_string(t.l) + ")";
  std::string s = "Other{";
  for (std::size_t i = 0; i < t.profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.profile[i].first) + ":" + std::to_string(t.profile[i].second);
  }
  return s + "}";
}

TypeTag classify_order_2n_group(Int n, const MulFn& mul) {
  if (n < 2 || n % 2 != 0 || (n / 2) % 2 == 0)
    throw std::invalid_argument("classification needs order 2N with N odd");
  const Int N = n / 2;

  // identity = the unique idempotent
  Int e = -1;
  for (Int x = 0; x < n && e < 0; ++x)
    if (mul(x, x) == x) e = x;
  if (e < 0) throw std::invalid_argument("input has no identity, not a group");

  std::vector<Int> order(static_cast<std::size_t>(n));
  for (Int x = 0; x < n; ++x) {
    Int y = x, m = 1;
    while (y != e) {
      y = mul(y, x);
      if (++m > n) throw std::invalid_argument("element order exceeds group order, not a group");
    }
    order[static_cast<std::size_t>(x)] = m;
  }

  std::map<Int, Int> profile_map;
  for (Int m : order) ++profile_map[m];
  std::vector<std::pair<Int, Int>> profile(profile_map.begin(), profile_map.end());

  bool has_order_n = std::find(order.begin(), order.end(), N) != order.end();

  bool abelian = true;
  for (Int x = 0; x < n && abelian; ++x)
    for (Int y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) {
        abelian = false;
        break;
      }

  if (abelian) return has_order_n ? TypeTag::dih_cyc(1, N) : TypeTag::other(std::move(profile));
  if (!has_order_n) return TypeTag::other(std::move(profile));

  Int center = 0;
  for (Int x = 0; x < n; ++x) {
    bool central = true;
    for (Int y = 0; y < n; ++y)
      if (mul(x, y) != mul(y, x)) {
        central = false;
        break;
      }
    if (central) ++center;
  }
  // non-abelian with cyclic odd part: the center is the fixed cyclic factor
  Int l = center, k = N / l;
  if (l < 1 || N % l != 0 || k <= 1 || std::gcd(k, l) != 1)
    throw InternalError("classification reached an inconsistent center decomposition");
  return TypeTag::dih_cyc(k, l);
}

TypeTag type_of_params(const DihCycParams& p) {
  return classify_order_2n_group(p.order(), [&p](Int x, Int y) {
    return element_index(p, mul(p, element_at(p, x), element_at(p, y)));
  });
}

}  // namespace hg
