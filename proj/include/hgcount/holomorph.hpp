#pragma once

// Hol(G) = G x| Aut(G) for G = D_{2k} x C_l, built explicitly.  An element is
// a pair (g, f); it acts on G by x -> g * f(x), and multiplication is
// (g1, f1)(g2, f2) = (g1 * f1(g2), f1 f2).
//
// Since Aut splits as Aut(D_{2k}) x Aut(C_l) for odd k, l, the holomorph
// decomposes as Hol(C_l) x Hol(D_{2k}); in coordinates the (texp, b) pair
// never mixes with (rexp, sexp, d, c) under multiplication.

#include <map>
#include <string>
#include <vector>

#include "hgcount/group.hpp"

namespace hg {

inline constexpr Int kDefaultHolSizeGuard = 100'000;

struct HolElement {
  GroupElement g;
  AutElement f;

  friend bool operator==(const HolElement&, const HolElement&) = default;
};

HolElement hol_identity(const DihCycParams&);
Int hol_size(const DihCycParams&);  // 2kl * phi(l) * k * phi(k)

HolElement hol_mul(const DihCycParams&, const HolElement&, const HolElement&);
HolElement hol_inverse(const DihCycParams&, const HolElement&);
HolElement hol_pow(const DihCycParams&, const HolElement&, Int exp);

// Least n >= 1 with x^n = identity; divides |Hol|.  Computed by stripping
// primes from |Hol| with fast exponentiation.
Int hol_order(const DihCycParams&, const HolElement&);
// Plain iteration; kept as an independent path for tests.
Int hol_order_iterative(const DihCycParams&, const HolElement&);

// The action of Hol(G) on the underlying set of G.
GroupElement hol_act(const DihCycParams&, const HolElement&, const GroupElement&);

// All |Hol| elements in the canonical order: lexicographic by (encoded g,
// position of b, position of d, c).
std::vector<HolElement> all_hol_elements(const DihCycParams&, Int size_guard = kDefaultHolSizeGuard);

// Element-order census; counts sum to |Hol|.
std::map<Int, Int> order_census(const DihCycParams&, Int size_guard = kDefaultHolSizeGuard);

// Display form ((b a;0 1), r^i s^j, (d c;0 1)): the Hol(C_l) component as a
// 2x2 affine matrix, the dihedral element, and the Aut(D_2k) matrix.
struct MatrixTriple {
  Int b = 1, a = 0;  // Hol(C_l): t-automorphism unit, t-translation
  Int i = 0, j = 0;  // dihedral element r^i s^j
  Int d = 1, c = 0;  // Aut(D_2k)
  friend bool operator==(const MatrixTriple&, const MatrixTriple&) = default;
};

MatrixTriple to_matrix_triple(const DihCycParams&, const HolElement&);
HolElement from_matrix_triple(const DihCycParams&, const MatrixTriple&);
std::string render_matrix_triple(const MatrixTriple&);
MatrixTriple parse_matrix_triple(const std::string&);

// Index-based kernel for the enumeration oracle: all operations are O(1)
// arithmetic on packed indices, no multiplication tables.
class HolContext {
 public:
  explicit HolContext(const DihCycParams& params, Int size_guard = kDefaultHolSizeGuard);

  const DihCycParams& params() const { return p_; }
  Int group_size() const { return ng_; }
  Int aut_size() const { return na_; }
  Int size() const { return ng_ * na_; }

  Int aut_index(const AutElement&) const;
  AutElement aut_at(Int idx) const;
  Int hol_index(const HolElement&) const;  // g_index * |Aut| + aut_index
  HolElement hol_at(Int idx) const;

  Int mul_g(Int x, Int y) const;
  Int apply(Int f, Int x) const;  // automorphism f applied to element x
  Int mul_f(Int f, Int g) const;
  Int inv_f(Int f) const;
  Int mul_h(Int x, Int y) const;
  Int inv_h(Int x) const;
  Int pow_h(Int x, Int e) const;
  Int order_h(Int x) const;
  Int identity_h() const { return 0; }

 private:
  DihCycParams p_;
  Int ng_, na_, nd_;  // |G|, |Aut|, #units mod k
  std::vector<Int> units_l_, units_k_;
  std::vector<Int> unit_pos_l_, unit_pos_k_;  // value -> position, -1 if not a unit
  std::vector<Int> unit_inv_l_, unit_inv_k_;  // value -> inverse value
  std::vector<std::pair<Int, Int>> hol_primes_;
};

}  // namespace hg
