#pragma once

// The groups D_{2k} x C_l for odd k, l, in exponent coordinates over the
// presentation <r, s, t : r^k, s^2, t^l, srsr, sts^-1t^-1, rtr^-1t^-1>,
// together with their automorphisms and an isomorphism-type classifier for
// abstract groups of order 2N, N odd.
//
// Conventions:
//   * all residues are canonical, in [0, modulus); residues mod 1 are 0,
//     so the "unit" 1 mod 1 is stored as 0 and gcd(0, 1) = 1 keeps the
//     unit checks uniform,
//   * k = 1 degenerates to the cyclic group C_{2l}, l = 1 to the dihedral
//     group D_{2k}; one parametrization covers both corners.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hgcount/errors.hpp"

namespace hg {

inline constexpr Int kDefaultEnumGuard = 1'000'000;

// Parameters (k, l) of D_{2k} x C_l.  Coprimality of (k, l) is NOT required
// here; the closed-form counts enforce it where their hypotheses do.
struct DihCycParams {
  Int k = 1;
  Int l = 1;

  Int n() const { return k * l; }            // odd part of the order
  Int order() const { return 2 * k * l; }    // group order

  friend bool operator==(const DihCycParams&, const DihCycParams&) = default;
};

// Throws unless both k and l are odd and positive.
DihCycParams make_params(Int k, Int l);

// "D6xC5", "C30", "D30" depending on the degenerate corners.
std::string group_name(const DihCycParams&);

// r^rexp s^sexp t^texp in canonical residue ranges.
struct GroupElement {
  Int rexp = 0;
  Int sexp = 0;
  Int texp = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// The automorphism t -> t^b, r -> r^d, s -> r^c s; needs gcd(b, l) =
// gcd(d, k) = 1.  These exhaust Aut(D_{2k} x C_l) for odd k, l: the two
// factors have no common direct factor and no nontrivial homomorphisms into
// each other's centers, so Aut splits as Aut(D_{2k}) x Aut(C_l).
struct AutElement {
  Int b = 1;
  Int d = 1;
  Int c = 0;

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

GroupElement identity_element();
GroupElement make_element(const DihCycParams&, Int rexp, Int sexp, Int texp);

// (i1,j1,m1)*(i2,j2,m2) = (i1 + (-1)^{j1} i2, j1+j2, m1+m2) componentwise
// mod (k, 2, l); the sign is forced by srsr = e.
GroupElement mul(const DihCycParams&, const GroupElement&, const GroupElement&);
GroupElement inverse(const DihCycParams&, const GroupElement&);
Int element_order(const DihCycParams&, const GroupElement&);

// All 2kl elements, ascending by the canonical encoding.
std::vector<GroupElement> all_elements(const DihCycParams&, Int size_guard = kDefaultEnumGuard);

// Canonical encoding rexp + k*(sexp + 2*texp); total order used everywhere
// a deterministic element order is needed.
Int element_index(const DihCycParams&, const GroupElement&);
GroupElement element_at(const DihCycParams&, Int index);

AutElement identity_aut(const DihCycParams&);
AutElement make_aut(const DihCycParams&, Int b, Int d, Int c);  // checks units

GroupElement aut_apply(const DihCycParams&, const AutElement&, const GroupElement&);

// Composition acts left-to-right through aut_apply: apply(compose(f,g), x) =
// apply(f, apply(g, x)); parameters compose as (bf*bg, df*dg, df*cg + cf).
AutElement aut_compose(const DihCycParams&, const AutElement&, const AutElement&);
AutElement aut_inverse(const DihCycParams&, const AutElement&);

// phi(l)*k*phi(k) automorphisms, lexicographic by (b, d, c) position.
std::vector<AutElement> all_automorphisms(const DihCycParams&, Int size_guard = kDefaultEnumGuard);
Int aut_order(const DihCycParams&);  // |Aut|, closed form

// Isomorphism type of an abstract group of order 2N (N odd): either a
// dihedral-cyclic product with coprime (k, l), or an "other" bucket
// described by its element-order profile.
struct TypeTag {
  enum class Kind { DihCyc, Other };
  Kind kind = Kind::Other;
  Int k = 0;
  Int l = 0;
  std::vector<std::pair<Int, Int>> profile;  // (order, count), ascending

  static TypeTag dih_cyc(Int k, Int l);
  static TypeTag other(std::vector<std::pair<Int, Int>> profile);

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
  friend bool operator<(const TypeTag& a, const TypeTag& b);
};

std::string to_string(const TypeTag&);

// Classifies a group given as labels 0..n-1 with a multiplication oracle.
//   * abelian with an element of order N        -> DihCyc(1, N)  (cyclic)
//   * non-abelian with cyclic odd part of order N -> DihCyc(N/|Z|, |Z|)
//   * odd part not cyclic                        -> Other(order profile)
// Rejects n that is not twice an odd number.  Returned DihCyc tags always
// have coprime (k, l): an order-2 automorphism of a cyclic group of odd
// order acts as +-1 on each primary component.
using MulFn = std::function<Int(Int, Int)>;
TypeTag classify_order_2n_group(Int n, const MulFn& mul);

// Type of the abstract group behind the given parameters (classified, so
// non-coprime inputs land in the bucket their group actually belongs to).
TypeTag type_of_params(const DihCycParams&);

}  // namespace hg
