#pragma once

// Brute-force ground truth: exhaustive enumeration of the regular subgroups
// of Hol(G), regular generator-image triples, the congruences those triples
// satisfy, and skew-brace classes as Aut-conjugation orbits.
//
// A regular subgroup H <= Hol(G) has |H| = |G| and trivial stabilizer of the
// identity: every (g, f) in H with g = e has f = id.  Equivalently H is the
// graph of a map tau: G -> Aut(G) with tau(e) = id whose graph is closed, as
// closure forces tau(g1 * tau(g1)(g2)) = tau(g1) tau(g2).  The authoritative
// search backtracks over tau assignments with incremental closure
// propagation; a generator-growth search over the same state space is kept
// as an independent cross-check.

#include <map>
#include <string>
#include <vector>

#include "hgcount/holomorph.hpp"

namespace hg {

struct OracleConfig {
  Int max_hol_size = kDefaultHolSizeGuard;
  int threads = 1;  // 0 = hardware concurrency; output is identical either way
};

struct RegularSubgroup {
  DihCycParams params;               // the ambient G
  std::vector<Int> element_indices;  // sorted canonical Hol indices, size |G|
  std::vector<HolElement> elements;  // decoded, same order
  TypeTag type_tag;
};

// Every regular subgroup of Hol(G), deduplicated, sorted by signature.
std::vector<RegularSubgroup> find_regular_subgroups(const DihCycParams& g,
                                                    const OracleConfig& cfg = {});

// Independent path: grows subgroups generator by generator, pruning states
// that stop being sub-graphs of a regular subgroup.  Two-generator closure
// alone would miss types needing three generators (e.g. the generalized
// dihedral group over C3 x C3), so growth continues to any depth.
std::vector<RegularSubgroup> find_regular_subgroups_closure(const DihCycParams& g,
                                                            const OracleConfig& cfg = {});

// Subgroup counts of Hol(g) grouped by isomorphism type.
std::map<TypeTag, Int> regular_subgroup_inventory(const DihCycParams& g,
                                                  const OracleConfig& cfg = {});

// e'(Gamma, G): regular subgroups of Hol(G) isomorphic to Gamma.  Gamma's
// tag is normalized through classification first, so non-coprime parameters
// compare by the group they actually denote.
Int e_prime_oracle(const DihCycParams& gamma, const DihCycParams& g, const OracleConfig& cfg = {});

// e(Gamma, G) = |Aut(Gamma)| / |Aut(G)| * e'(Gamma, G); the division must be
// exact (InternalError otherwise).
Int e_oracle(const DihCycParams& gamma, const DihCycParams& g, const OracleConfig& cfg = {});

// Images of the three generators of Gamma = <r1, s1, t1> under a regular
// embedding into Hol(G).
struct EmbeddingRecord {
  HolElement image_r, image_s, image_t;
  DihCycParams gamma, g;
};

// All triples satisfying the six defining relations of Gamma whose image is
// a regular subgroup of order |Gamma|.  Candidates are pruned by element
// order: image_r^k1 = image_s^2 = image_t^l1 = identity.
std::vector<EmbeddingRecord> enumerate_regular_embeddings(const DihCycParams& gamma,
                                                          const DihCycParams& g,
                                                          const OracleConfig& cfg = {});

// Per-congruence evaluation of the relation system in matrix-triple
// variables.  Ids e001..e013 hold for any generator triple with rotation
// images of odd order; e014..e026 are the j'=0 block and e027..e039 the
// j'=1 block, where j' is the s-exponent of image_s.
struct CongruenceReport {
  struct Entry {
    std::string id;
    bool holds;
  };
  std::vector<Entry> entries;
  Int jprime = 0;
  bool all_hold = false;
};

CongruenceReport verify_embedding_congruences(const EmbeddingRecord&);

// Skew-brace classes with additive group Gamma: regular subgroups of
// Hol(Gamma) counted raw and up to conjugation by {(e, f)}.
struct BraceCounts {
  Int subgroup_count = 0;
  Int orbit_count = 0;
};

std::map<TypeTag, BraceCounts> skew_brace_classes(const DihCycParams& gamma,
                                                  const OracleConfig& cfg = {});

}  // namespace hg
