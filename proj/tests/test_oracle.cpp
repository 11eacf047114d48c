#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgcount/formula.hpp"
#include "hgcount/numtheory.hpp"
#include "hgcount/oracle.hpp"

using namespace hg;

namespace {

// independent validation of everything a regular subgroup promises
void validate_subgroup(const RegularSubgroup& sub) {
  const auto& p = sub.params;
  const Int n = p.order();
  REQUIRE(static_cast<Int>(sub.elements.size()) == n);
  REQUIRE(std::is_sorted(sub.element_indices.begin(), sub.element_indices.end()));
  CHECK(sub.element_indices.front() == 0);  // contains the identity

  HolContext ctx(p);
  std::set<Int> members(sub.element_indices.begin(), sub.element_indices.end());
  REQUIRE(members.size() == sub.element_indices.size());

  // closure under multiplication, full table
  for (Int x : sub.element_indices)
    for (Int y : sub.element_indices) CHECK(members.count(ctx.mul_h(x, y)) == 1);

  // regularity predicate: trivial stabilizer of the identity
  for (const auto& h : sub.elements)
    if (h.g == identity_element()) CHECK(h.f == identity_aut(p));

  // free and transitive, each checked directly
  auto elems = all_elements(p);
  std::set<Int> orbit;
  for (const auto& h : sub.elements)
    orbit.insert(element_index(p, hol_act(p, h, identity_element())));
  CHECK(static_cast<Int>(orbit.size()) == n);
  for (const auto& h : sub.elements) {
    if (h == hol_identity(p)) continue;
    for (const auto& x : elems) CHECK(hol_act(p, h, x) != x);
  }
}

std::map<TypeTag, Int> inventory_of(const std::vector<RegularSubgroup>& subs) {
  std::map<TypeTag, Int> inv;
  for (const auto& s : subs) ++inv[s.type_tag];
  return inv;
}

std::vector<std::vector<Int>> signatures(const std::vector<RegularSubgroup>& subs) {
  std::vector<std::vector<Int>> sigs;
  for (const auto& s : subs) sigs.push_back(s.element_indices);
  return sigs;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("regular subgroups of Hol(D6)") {
  auto p = make_params(3, 1);
  auto subs = find_regular_subgroups(p);
  for (const auto& s : subs) validate_subgroup(s);

  // the left-translation copy { (g, id) } is always found
  HolContext ctx(p);
  std::vector<Int> lambda;
  for (Int g = 0; g < p.order(); ++g) lambda.push_back(g * ctx.aut_size());
  CHECK(std::any_of(subs.begin(), subs.end(),
                    [&](const RegularSubgroup& s) { return s.element_indices == lambda; }));

  auto inv = inventory_of(subs);
  CHECK(inv == std::map<TypeTag, Int>{{TypeTag::dih_cyc(3, 1), 2}, {TypeTag::dih_cyc(1, 3), 6}});
}

TEST_CASE("regular subgroups of Hol(C6)") {
  auto subs = find_regular_subgroups(make_params(1, 3));
  for (const auto& s : subs) validate_subgroup(s);
  CHECK(inventory_of(subs) ==
        std::map<TypeTag, Int>{{TypeTag::dih_cyc(1, 3), 1}, {TypeTag::dih_cyc(3, 1), 1}});
}

TEST_CASE("backtracking and closure growth agree enumerate identically") {
  for (auto [k, l] : std::vector<std::pair<Int, Int>>{
           {1, 1}, {1, 3}, {3, 1}, {1, 5}, {5, 1}, {1, 7}, {7, 1}, {1, 9}, {9, 1}, {3, 3}}) {
    auto p = make_params(k, l);
    CAPTURE(k);
    CAPTURE(l);
    CHECK(signatures(find_regular_subgroups(p)) ==
          signatures(find_regular_subgroups_closure(p)));
  }
}

TEST_CASE("non-coprime product admits no dihedral regular subgroup") {
  auto p33 = make_params(3, 3);
  auto subs = find_regular_subgroups(p33);
  for (const auto& s : subs) validate_subgroup(s);
  auto inv = inventory_of(subs);
  CHECK(inv.count(TypeTag::dih_cyc(9, 1)) == 0);
  Int total = 0;
  for (const auto& [tag, c] : inv) total += c;
  CHECK(total == static_cast<Int>(subs.size()));
  CHECK(e_prime_oracle(make_params(9, 1), p33) == 0);

  // every type here has a non-cyclic odd part, hence lands in a profile
  // bucket; one of them needs three generators (the generalized dihedral
  // group over C3 x C3), which the growth cross-check must also find
  CHECK(total == 32);
  CHECK(inv.at(TypeTag::other({{1, 1}, {2, 9}, {3, 8}})) == 2);
  CHECK(e_prime_oracle(p33, p33) == 24);  // copies of D6 x C3 itself, lambda included
  CHECK(e_oracle(p33, p33) == 24);
}

TEST_CASE("subgroup counts convert through the Aut ratio") {
  auto c6 = make_params(1, 3), d6 = make_params(3, 1);
  CHECK(e_prime_oracle(d6, d6) == 2);
  CHECK(e_prime_oracle(c6, c6) == 1);
  CHECK(e_prime_oracle(c6, d6) == 6);
  CHECK(e_prime_oracle(d6, c6) == 1);
  CHECK(e_oracle(d6, c6) == 3);
  CHECK(e_oracle(c6, d6) == 2);
  CHECK(e_oracle(c6, c6) == 1);
  CHECK_THROWS_AS(e_prime_oracle(make_params(3, 1), make_params(3, 3)), std::invalid_argument);
}

TEST_CASE("dihedral self-count at order 30") {
  auto d30 = make_params(15, 1);
  CHECK(e_prime_oracle(d30, d30) == 4);  // 2^{omega(15)}
}

TEST_CASE("embedding enumeration bookkeeping") {
  auto d6 = make_params(3, 1), c6 = make_params(1, 3);
  auto embs = enumerate_regular_embeddings(d6, d6);
  CHECK(embs.size() == 12);  // e' * |Aut(Gamma)| = 2 * 6

  for (const auto& pair : std::vector<std::pair<DihCycParams, DihCycParams>>{
           {d6, d6}, {d6, c6}, {c6, d6}, {c6, c6}}) {
    auto records = enumerate_regular_embeddings(pair.first, pair.second);
    CHECK(static_cast<Int>(records.size()) ==
          e_prime_oracle(pair.first, pair.second) * aut_order(pair.first));
    for (const auto& rec : records) {
      CHECK(rec.image_s.g.sexp == 1);  // j' = 0 never yields a regular image
      CHECK(rec.image_r.g.sexp == 0);
      CHECK(rec.image_t.g.sexp == 0);
      // unit components of the r-image are forced to 1
      CHECK(rec.image_r.f.b == identity_aut(pair.second).b);
      CHECK(rec.image_r.f.d == identity_aut(pair.second).d);
    }
  }
}

TEST_CASE("relation congruences hold for genuine embeddings") {
  auto d6 = make_params(3, 1), c6 = make_params(1, 3);
  for (const auto& pair : std::vector<std::pair<DihCycParams, DihCycParams>>{
           {d6, d6}, {d6, c6}, {c6, d6}, {c6, c6}}) {
    for (const auto& rec : enumerate_regular_embeddings(pair.first, pair.second)) {
      auto rep = verify_embedding_congruences(rec);
      CHECK(rep.jprime == 1);
      CHECK(rep.all_hold);
      CHECK(rep.entries.size() == 26);  // e001..e013 plus the j'-block
    }
  }
}

TEST_CASE("congruences on the degenerate identity triple") {
  auto p = make_params(3, 1);
  EmbeddingRecord rec{hol_identity(p), hol_identity(p), hol_identity(p), p, p};
  auto rep = verify_embedding_congruences(rec);
  CHECK(rep.jprime == 0);
  CHECK(rep.all_hold);  // congruences hold; the order-2N requirement fails upstream
  CHECK(enumerate_regular_embeddings(p, p).size() == 12);  // and indeed it is not among these
}

TEST_CASE("perturbed records break congruences") {
  auto d6 = make_params(3, 1);
  auto records = enumerate_regular_embeddings(d6, d6);
  REQUIRE(!records.empty());
  bool saw_nontrivial_dprime = false;
  for (auto rec : records) {
    rec.image_t.f.c = mod_norm(rec.image_t.f.c + 1, rec.g.k);  // bump c''
    auto rep = verify_embedding_congruences(rec);
    CHECK_FALSE(rep.all_hold);
    auto holds = [&](const char* id) {
      for (const auto& e : rep.entries)
        if (e.id == id) return e.holds;
      FAIL("missing congruence entry");
      return true;
    };
    CHECK_FALSE(holds("e038"));
    if (mod_norm(rec.image_s.f.d, rec.g.k) != mod_norm(1, rec.g.k)) {
      saw_nontrivial_dprime = true;
      CHECK_FALSE(holds("e039"));
    }
  }
  CHECK(saw_nontrivial_dprime);
}

TEST_CASE("skew brace classes for additive D6") {
  auto classes = skew_brace_classes(make_params(3, 1));
  REQUIRE(classes.size() == 2);
  auto d = classes.at(TypeTag::dih_cyc(3, 1));
  auto c = classes.at(TypeTag::dih_cyc(1, 3));
  CHECK(d.subgroup_count == 2);
  CHECK(d.orbit_count == 2);    // translations and right-translations sit alone
  CHECK(c.subgroup_count == 6);
  CHECK(c.orbit_count == 2);
  for (const auto& [tag, counts] : classes) CHECK(counts.orbit_count <= counts.subgroup_count);
}

TEST_CASE("skew brace classes for additive C6") {
  auto classes = skew_brace_classes(make_params(1, 3));
  REQUIRE(classes.size() == 2);
  CHECK(classes.at(TypeTag::dih_cyc(1, 3)).subgroup_count == 1);
  CHECK(classes.at(TypeTag::dih_cyc(1, 3)).orbit_count == 1);
  CHECK(classes.at(TypeTag::dih_cyc(3, 1)).subgroup_count == 1);
  CHECK(classes.at(TypeTag::dih_cyc(3, 1)).orbit_count == 1);
}

TEST_CASE("parallel enumeration returns identical output") {
  auto p = make_params(9, 1);
  OracleConfig serial{kDefaultHolSizeGuard, 1};
  OracleConfig parallel{kDefaultHolSizeGuard, 4};
  CHECK(signatures(find_regular_subgroups(p, serial)) ==
        signatures(find_regular_subgroups(p, parallel)));

  auto gamma = make_params(1, 9);
  auto embs_serial = enumerate_regular_embeddings(gamma, p, serial);
  auto embs_parallel = enumerate_regular_embeddings(gamma, p, parallel);
  REQUIRE(embs_serial.size() == embs_parallel.size());
  for (std::size_t i = 0; i < embs_serial.size(); ++i) {
    CHECK(embs_serial[i].image_r == embs_parallel[i].image_r);
    CHECK(embs_serial[i].image_s == embs_parallel[i].image_s);
    CHECK(embs_serial[i].image_t == embs_parallel[i].image_t);
  }
}

TEST_CASE("size guard is reported") {
  try {
    find_regular_subgroups(make_params(15, 1), OracleConfig{100, 1});
    FAIL("guard not enforced");
  } catch (const SizeGuardError& e) {
    CHECK(e.required == 3600);
  }
}

}  // TEST_SUITE
