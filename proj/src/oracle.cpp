#include "hgcount/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "hgcount/numtheory.hpp"

namespace hg {

namespace {

int resolve_threads(int t) {
  if (t > 0) return t;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs body(job) for job in [0, njobs) on up to `threads` threads.  Callers
// write into per-job slots, so results are independent of scheduling.
template <typename F>
void parallel_for(Int njobs, int threads, F&& body) {
  threads = static_cast<int>(std::min<Int>(threads, njobs));
  if (threads <= 1) {
    for (Int j = 0; j < njobs; ++j) body(j);
    return;
  }
  std::atomic<Int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (Int j; (j = next.fetch_add(1)) < njobs;) body(j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Backtracking over tau: G -> Aut(G) with tau(e) = id.  The assigned set is
// kept closed under products (and inverses) of assigned pairs; a conflict
// prunes the branch.  Completed assignments are exactly the regular
// subgroups, each reached once.
class TransversalSearch {
 public:
  TransversalSearch(const HolContext& ctx, const std::vector<char>& admissible)
      : ctx_(ctx),
        ng_(ctx.group_size()),
        na_(ctx.aut_size()),
        admissible_(admissible),
        tau_(static_cast<std::size_t>(ctx.group_size()), -1) {
    tau_[0] = 0;
    assigned_.push_back(0);
  }

  // Explores the subtree below the forced assignment tau(g1) = f, where g1
  // is the first choice point.  Pass f = -1 to explore everything.
  std::vector<std::vector<Int>> run(Int first_aut = -1) {
    results_.clear();
    if (first_aut < 0) {
      search();
    } else {
      std::size_t mark = assigned_.size();
      if (admissible_[static_cast<std::size_t>(1 * na_ + first_aut)] &&
          assign_and_close(1, first_aut))
        search();
      rollback(mark);
    }
    return std::move(results_);
  }

 private:
  void search() {
    Int g = -1;
    for (Int i = 1; i < ng_; ++i)
      if (tau_[static_cast<std::size_t>(i)] < 0) {
        g = i;
        break;
      }
    if (g < 0) {
      std::vector<Int> sig;
      sig.reserve(static_cast<std::size_t>(ng_));
      for (Int i = 0; i < ng_; ++i) sig.push_back(i * na_ + tau_[static_cast<std::size_t>(i)]);
      results_.push_back(std::move(sig));
      return;
    }
    for (Int f = 0; f < na_; ++f) {
      if (!admissible_[static_cast<std::size_t>(g * na_ + f)]) continue;
      std::size_t mark = assigned_.size();
      if (assign_and_close(g, f)) search();
      rollback(mark);
    }
  }

  bool try_set(Int g, Int f) {
    Int& slot = tau_[static_cast<std::size_t>(g)];
    if (slot >= 0) return slot == f;
    if (!admissible_[static_cast<std::size_t>(g * na_ + f)]) return false;
    slot = f;
    assigned_.push_back(g);
    return true;
  }

  bool close_pair(Int x, Int y) {
    Int fx = tau_[static_cast<std::size_t>(x)], fy = tau_[static_cast<std::size_t>(y)];
    Int zg = ctx_.mul_g(x, ctx_.apply(fx, y));
    return try_set(zg, ctx_.mul_f(fx, fy));
  }

  bool assign_and_close(Int g, Int f) {
    std::size_t qstart = assigned_.size();
    if (!try_set(g, f)) return false;
    for (std::size_t qi = qstart; qi < assigned_.size(); ++qi) {
      Int x = assigned_[qi];
      Int hx = ctx_.inv_h(x * na_ + tau_[static_cast<std::size_t>(x)]);
      if (!try_set(hx / na_, hx % na_)) return false;
      for (std::size_t ai = 0; ai < assigned_.size(); ++ai) {
        Int y = assigned_[ai];
        if (!close_pair(x, y) || !close_pair(y, x)) return false;
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (assigned_.size() > mark) {
      tau_[static_cast<std::size_t>(assigned_.back())] = -1;
      assigned_.pop_back();
    }
  }

  const HolContext& ctx_;
  Int ng_, na_;
  const std::vector<char>& admissible_;
  std::vector<Int> tau_;
  std::vector<Int> assigned_;
  std::vector<std::vector<Int>> results_;
};

// (g, f) can lie in a subgroup of order |G| only if its own order divides |G|.
std::vector<char> admissible_table(const HolContext& ctx) {
  std::vector<char> adm(static_cast<std::size_t>(ctx.size()), 0);
  for (Int h = 0; h < ctx.size(); ++h)
    adm[static_cast<std::size_t>(h)] = ctx.pow_h(h, ctx.group_size()) == 0;
  return adm;
}

TypeTag classify_signature(const HolContext& ctx, const std::vector<Int>& sig) {
  return classify_order_2n_group(static_cast<Int>(sig.size()), [&](Int x, Int y) {
    Int z = ctx.mul_h(sig[static_cast<std::size_t>(x)], sig[static_cast<std::size_t>(y)]);
    auto it = std::lower_bound(sig.begin(), sig.end(), z);
    if (it == sig.end() || *it != z) throw InternalError("subgroup signature is not closed");
    return static_cast<Int>(it - sig.begin());
  });
}

std::vector<RegularSubgroup> package_subgroups(const HolContext& ctx,
                                               std::vector<std::vector<Int>> sigs) {
  std::sort(sigs.begin(), sigs.end());
  if (std::adjacent_find(sigs.begin(), sigs.end()) != sigs.end())
    throw InternalError("duplicate regular subgroup signatures");
  std::vector<RegularSubgroup> out;
  out.reserve(sigs.size());
  for (auto& sig : sigs) {
    RegularSubgroup sub;
    sub.params = ctx.params();
    sub.type_tag = classify_signature(ctx, sig);
    sub.elements.reserve(sig.size());
    for (Int h : sig) sub.elements.push_back(ctx.hol_at(h));
    sub.element_indices = std::move(sig);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::vector<RegularSubgroup> find_regular_subgroups(const DihCycParams& g,
                                                    const OracleConfig& cfg) {
  HolContext ctx(g, cfg.max_hol_size);
  const Int na = ctx.aut_size();
  const auto admissible = admissible_table(ctx);

  std::vector<std::vector<Int>> sigs;
  if (ctx.group_size() == 1) {
    // cannot happen (order is at least 2), kept for completeness
    sigs.push_back({0});
  } else {
    // split on the value of tau at the first choice point
    std::vector<Int> first_candidates;
    for (Int f = 0; f < na; ++f)
      if (admissible[static_cast<std::size_t>(na + f)]) first_candidates.push_back(f);

    std::vector<std::vector<std::vector<Int>>> per_job(first_candidates.size());
    parallel_for(static_cast<Int>(first_candidates.size()), resolve_threads(cfg.threads),
                 [&](Int job) {
                   TransversalSearch search(ctx, admissible);
                   per_job[static_cast<std::size_t>(job)] =
                       search.run(first_candidates[static_cast<std::size_t>(job)]);
                 });
    for (auto& part : per_job)
      for (auto& sig : part) sigs.push_back(std::move(sig));
  }
  return package_subgroups(ctx, std::move(sigs));
}

std::vector<RegularSubgroup> find_regular_subgroups_closure(const DihCycParams& g,
                                                            const OracleConfig& cfg) {
  HolContext ctx(g, cfg.max_hol_size);
  const Int ng = ctx.group_size(), na = ctx.aut_size();
  const auto admissible = admissible_table(ctx);

  std::vector<Int> cands;
  for (Int h = 1; h < ctx.size(); ++h)
    if (admissible[static_cast<std::size_t>(h)]) cands.push_back(h);

  // closure of members + extra; fails when the result stops being a
  // sub-graph (duplicate g-part), exceeds |G|, or has order not dividing |G|
  auto close_with = [&](const std::vector<Int>& members, Int extra,
                        std::vector<Int>& out) -> bool {
    std::vector<Int> tau(static_cast<std::size_t>(ng), -1);
    std::vector<Int> gs;
    auto add = [&](Int h) -> int {  // -1 conflict, 0 known, 1 added
      Int hg = h / na, hf = h % na;
      Int& slot = tau[static_cast<std::size_t>(hg)];
      if (slot >= 0) return slot == hf ? 0 : -1;
      if (!admissible[static_cast<std::size_t>(h)]) return -1;
      slot = hf;
      gs.push_back(hg);
      return 1;
    };
    for (Int h : members)
      if (add(h) < 0) return false;
    if (add(extra) < 0) return false;
    for (std::size_t qi = 0; qi < gs.size(); ++qi) {
      if (static_cast<Int>(gs.size()) > ng) return false;
      Int x = gs[qi] * na + tau[static_cast<std::size_t>(gs[qi])];
      if (add(ctx.inv_h(x)) < 0) return false;
      for (std::size_t ai = 0; ai < gs.size(); ++ai) {
        Int y = gs[ai] * na + tau[static_cast<std::size_t>(gs[ai])];
        if (add(ctx.mul_h(x, y)) < 0 || add(ctx.mul_h(y, x)) < 0) return false;
        if (static_cast<Int>(gs.size()) > ng) return false;
      }
    }
    if (ng % static_cast<Int>(gs.size()) != 0) return false;
    out.clear();
    for (Int gi : gs) out.push_back(gi * na + tau[static_cast<std::size_t>(gi)]);
    std::sort(out.begin(), out.end());
    return true;
  };

  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> stack{{0}};
  seen.insert({0});
  std::vector<std::vector<Int>> full;
  std::vector<Int> closed;
  while (!stack.empty()) {
    auto s = std::move(stack.back());
    stack.pop_back();
    if (static_cast<Int>(s.size()) == ng) {
      full.push_back(std::move(s));
      continue;
    }
    for (Int h : cands) {
      if (std::binary_search(s.begin(), s.end(), h)) continue;
      if (!close_with(s, h, closed)) continue;
      if (seen.insert(closed).second) stack.push_back(closed);
    }
  }
  return package_subgroups(ctx, std::move(full));
}

std::map<TypeTag, Int> regular_subgroup_inventory(const DihCycParams& g,
                                                  const OracleConfig& cfg) {
  std::map<TypeTag, Int> inv;
  for (const auto& sub : find_regular_subgroups(g, cfg)) ++inv[sub.type_tag];
  return inv;
}

Int e_prime_oracle(const DihCycParams& gamma, const DihCycParams& g, const OracleConfig& cfg) {
  if (gamma.order() != g.order())
    throw std::invalid_argument("e_prime_oracle: group orders differ");
  TypeTag want = type_of_params(gamma);
  Int count = 0;
  for (const auto& [tag, c] : regular_subgroup_inventory(g, cfg))
    if (tag == want) count += c;
  return count;
}

Int e_oracle(const DihCycParams& gamma, const DihCycParams& g, const OracleConfig& cfg) {
  Int num = checked_mul(aut_order(gamma), e_prime_oracle(gamma, g, cfg));
  Int den = aut_order(g);
  if (num % den != 0)
    throw InternalError("e_oracle: |Aut| conversion ratio is not integral");
  return num / den;
}

std::vector<EmbeddingRecord> enumerate_regular_embeddings(const DihCycParams& gamma,
                                                          const DihCycParams& g,
                                                          const OracleConfig& cfg) {
  if (gamma.order() != g.order())
    throw std::invalid_argument("enumerate_regular_embeddings: group orders differ");
  HolContext ctx(g, cfg.max_hol_size);
  const Int ng = ctx.group_size(), na = ctx.aut_size();

  std::vector<Int> r_cands, s_cands, t_cands;
  for (Int h = 0; h < ctx.size(); ++h) {
    if (ctx.pow_h(h, gamma.k) == 0) r_cands.push_back(h);
    if (ctx.pow_h(h, 2) == 0) s_cands.push_back(h);
    if (ctx.pow_h(h, gamma.l) == 0) t_cands.push_back(h);
  }

  // generated subgroup must be a full tau-graph: |G| elements, one per
  // g-part, with the identity's aut part trivial
  auto image_is_regular = [&](Int r, Int s, Int t) {
    std::vector<Int> tau(static_cast<std::size_t>(ng), -1);
    std::vector<Int> gs;
    auto add = [&](Int h) -> bool {
      Int hg = h / na, hf = h % na;
      Int& slot = tau[static_cast<std::size_t>(hg)];
      if (slot >= 0) return slot == hf;
      slot = hf;
      gs.push_back(hg);
      return true;
    };
    if (!add(0) || !add(r) || !add(s) || !add(t)) return false;
    for (std::size_t qi = 0; qi < gs.size(); ++qi) {
      Int x = gs[qi] * na + tau[static_cast<std::size_t>(gs[qi])];
      for (std::size_t ai = 0; ai < gs.size(); ++ai) {
        Int y = gs[ai] * na + tau[static_cast<std::size_t>(gs[ai])];
        if (!add(ctx.mul_h(x, y)) || !add(ctx.mul_h(y, x))) return false;
      }
    }
    return static_cast<Int>(gs.size()) == ng;
  };

  std::vector<std::vector<EmbeddingRecord>> per_job(r_cands.size());
  parallel_for(static_cast<Int>(r_cands.size()), resolve_threads(cfg.threads), [&](Int job) {
    Int r = r_cands[static_cast<std::size_t>(job)];
    auto& local = per_job[static_cast<std::size_t>(job)];
    for (Int t : t_cands) {
      if (ctx.mul_h(r, t) != ctx.mul_h(t, r)) continue;
      for (Int s : s_cands) {
        Int sr = ctx.mul_h(s, r);
        if (ctx.mul_h(sr, sr) != 0) continue;           // srsr = e
        if (ctx.mul_h(s, t) != ctx.mul_h(t, s)) continue;
        if (!image_is_regular(r, s, t)) continue;
        local.push_back(EmbeddingRecord{ctx.hol_at(r), ctx.hol_at(s), ctx.hol_at(t), gamma, g});
      }
    }
  });

  std::vector<EmbeddingRecord> out;
  for (auto& part : per_job)
    for (auto& rec : part) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [&](const EmbeddingRecord& x, const EmbeddingRecord& y) {
    auto key = [&](const EmbeddingRecord& e) {
      return std::array<Int, 3>{ctx.hol_index(e.image_r), ctx.hol_index(e.image_s),
                                ctx.hol_index(e.image_t)};
    };
    return key(x) < key(y);
  });
  return out;
}

CongruenceReport verify_embedding_congruences(const EmbeddingRecord& rec) {
  const Int k1 = rec.gamma.k, l1 = rec.gamma.l;
  const Int k2 = rec.g.k, l2 = rec.g.l;
  MatrixTriple mr = to_matrix_triple(rec.g, rec.image_r);
  MatrixTriple ms = to_matrix_triple(rec.g, rec.image_s);
  MatrixTriple mt = to_matrix_triple(rec.g, rec.image_t);

  const Int b = mr.b, a = mr.a, i = mr.i, d = mr.d, c = mr.c;
  const Int bp = ms.b, ap = ms.a, ip = ms.i, dp = ms.d, cp = ms.c;
  const Int bpp = mt.b, app = mt.a, ipp = mt.i, dpp = mt.d, cpp = mt.c;

  auto eq = [](Int lhs, Int rhs, Int m) { return mod_norm(lhs - rhs, m) == 0; };
  auto gs = [](Int x, Int n, Int m) { return geometric_sum(x, n, m); };

  CongruenceReport rep;
  rep.jprime = ms.j;
  auto push = [&rep](const char* id, bool holds) { rep.entries.push_back({id, holds}); };

  push("e001", eq(mod_pow(b, k1, l2), 1, l2));
  push("e002", eq(mod_mul(a, gs(b, k1, l2), l2), 0, l2));
  push("e003", eq(mod_mul(i, gs(d, k1, k2), k2), 0, k2));
  push("e004", eq(mod_pow(d, k1, k2), 1, k2));
  push("e005", eq(mod_mul(c, gs(d, k1, k2), k2), 0, k2));
  push("e006", eq(mod_pow(bpp, l1, l2), 1, l2));
  push("e007", eq(mod_mul(app, gs(bpp, l1, l2), l2), 0, l2));
  push("e008", eq(mod_mul(ipp, gs(dpp, l1, k2), k2), 0, k2));
  push("e009", eq(mod_pow(dpp, l1, k2), 1, k2));
  push("e010", eq(mod_mul(cpp, gs(dpp, l1, k2), k2), 0, k2));
  push("e011", eq(mod_mul(a, 1 - bpp, l2), 0, l2));
  push("e012", eq(mod_mul(i, 1 - dpp, k2), 0, k2));
  push("e013", eq(mod_mul(c, 1 - dpp, k2), 0, k2));

  if (ms.j == 0) {
    push("e014", eq(mod_mul(bp, bp, l2), 1, l2));
    push("e015", eq(mod_mul(ap, 1 + bp, l2), 0, l2));
    push("e016", eq(mod_mul(dp, dp, k2), 1, k2));
    push("e017", eq(mod_mul(cp, 1 + dp, k2), 0, k2));
    push("e018", eq(mod_mul(ip, 1 + dp, k2), 0, k2));
    push("e019", eq(mod_mul(b, b, l2), 1, l2));
    push("e020", eq(mod_mul(a, b + bp, l2) + mod_mul(ap, 1 + mod_mul(b, bp, l2), l2), 0, l2));
    push("e021", eq(mod_mul(i + ip, 1 + dp, k2), 0, k2));
    push("e022", eq(mod_mul(d, d, k2), 1, k2));
    push("e023", eq(mod_mul(c, d + dp, k2) + mod_mul(cp, 1 + mod_mul(d, dp, k2), k2), 0, k2));
    push("e024", eq(mod_mul(app, 1 - bp, l2), mod_mul(ap, 1 - bpp, l2), l2));
    push("e025", eq(mod_mul(ipp, 1 - dp, k2), mod_mul(ip, 1 - dpp, k2), k2));
    push("e026", eq(mod_mul(cpp, 1 - dp, k2), mod_mul(cp, 1 - dpp, k2), k2));
  } else {
    push("e027", eq(mod_mul(bp, bp, l2), 1, l2));
    push("e028", eq(mod_mul(ap, 1 + bp, l2), 0, l2));
    push("e029", eq(mod_mul(dp, dp, k2), 1, k2));
    push("e030", eq(mod_mul(cp, 1 + dp, k2), 0, k2));
    push("e031", eq(mod_mul(ip, 1 - dp, k2), cp, k2));
    push("e032", eq(mod_mul(b, b, l2), 1, l2));
    push("e033", eq(mod_mul(a, b + bp, l2) + mod_mul(ap, 1 + mod_mul(b, bp, l2), l2), 0, l2));
    push("e034", eq(mod_mul(i + ip, 1 - dp, k2), mod_mul(dp, c, k2) + cp, k2));
    push("e035", eq(mod_mul(d, d, k2), 1, k2));
    push("e036", eq(mod_mul(c, d + dp, k2) + mod_mul(cp, 1 + mod_mul(d, dp, k2), k2), 0, k2));
    push("e037", eq(mod_mul(app, 1 - bp, l2), mod_mul(ap, 1 - bpp, l2), l2));
    push("e038", eq(ip - mod_mul(ipp, dp, k2), ipp + mod_mul(ip, dpp, k2) + cpp, k2));
    push("e039", eq(mod_mul(cpp, 1 - dp, k2), mod_mul(cp, 1 - dpp, k2), k2));
  }

  rep.all_hold = std::all_of(rep.entries.begin(), rep.entries.end(),
                             [](const auto& e) { return e.holds; });
  return rep;
}

std::map<TypeTag, BraceCounts> skew_brace_classes(const DihCycParams& gamma,
                                                  const OracleConfig& cfg) {
  auto subs = find_regular_subgroups(gamma, cfg);
  HolContext ctx(gamma, cfg.max_hol_size);
  const Int na = ctx.aut_size();

  std::map<std::vector<Int>, std::size_t> position;
  for (std::size_t i = 0; i < subs.size(); ++i) position[subs[i].element_indices] = i;

  // conjugation by (e, f) sends (g, h) to (f(g), f h f^-1)
  auto conjugate = [&](const std::vector<Int>& sig, Int f) {
    std::vector<Int> out;
    out.reserve(sig.size());
    Int fi = ctx.inv_f(f);
    for (Int h : sig) {
      Int hg = h / na, hf = h % na;
      out.push_back(ctx.apply(f, hg) * na + ctx.mul_f(ctx.mul_f(f, hf), fi));
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::map<TypeTag, BraceCounts> report;
  std::vector<char> visited(subs.size(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    ++report[subs[i].type_tag].subgroup_count;
    if (visited[i]) continue;
    ++report[subs[i].type_tag].orbit_count;
    std::vector<std::size_t> frontier{i};
    visited[i] = 1;
    while (!frontier.empty()) {
      std::size_t cur = frontier.back();
      frontier.pop_back();
      for (Int f = 0; f < na; ++f) {
        auto image = conjugate(subs[cur].element_indices, f);
        auto it = position.find(image);
        if (it == position.end())
          throw InternalError("conjugate of a regular subgroup is not in the inventory");
        if (subs[it->second].type_tag != subs[cur].type_tag)
          throw InternalError("conjugation changed a subgroup's isomorphism type");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          frontier.push_back(it->second);
        }
      }
    }
  }
  return report;
}

}  // namespace hg
