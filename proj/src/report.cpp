#include "hgcount/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hgcount/numtheory.hpp"

namespace hg::cli {

using json = nlohmann::ordered_json;

namespace {

json params_json(const DihCycParams& p) { return json{{"k", p.k}, {"l", p.l}}; }

json type_json(const TypeTag& t) {
  json j;
  j["name"] = to_string(t);
  if (t.kind == TypeTag::Kind::DihCyc) {
    j["kind"] = "dih_cyc";
    j["k"] = t.k;
    j["l"] = t.l;
  } else {
    j["kind"] = "other";
    json prof = json::array();
    for (auto [o, c] : t.profile) prof.push_back(json{{"order", o}, {"count", c}});
    j["profile"] = prof;
  }
  return j;
}

std::string pair_str(const DihCycParams& p) {
  return group_name(p) + "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

std::vector<DihCycParams> types_of_order(Int n) {
  std::vector<DihCycParams> out;
  for (auto [k, l] : coprime_factorizations(n)) out.push_back(DihCycParams{k, l});
  return out;
}

Int order_2n(Int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("N must be odd and positive");
  return n;
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return std::nullopt;
}

CmdResult cmd_count(const DihCycParams& gamma, const DihCycParams& g, const RunConfig& cfg) {
  std::ostringstream out;
  try {
    CountReport rep = count_report(gamma, g);
    if (cfg.format == Format::Json) {
      json j{{"n", gamma.n()},
             {"gamma", params_json(gamma)},
             {"g", params_json(g)},
             {"e", rep.e},
             {"e_prime", rep.e_prime},
             {"status", "ok"},
             {"preconditions", rep.preconditions_used}};
      out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
      out << "n,gamma_k,gamma_l,g_k,g_l,e_prime,e,status\n";
      out << gamma.n() << "," << gamma.k << "," << gamma.l << "," << g.k << "," << g.l << ","
          << rep.e_prime << "," << rep.e << ",ok\n";
    } else {
      out << "gamma = " << pair_str(gamma) << ", type G = " << pair_str(g) << "\n";
      out << "e(gamma, G)  = " << rep.e << "\n";
      out << "e'(gamma, G) = " << rep.e_prime << "\n";
      out << "preconditions:";
      for (const auto& c : rep.preconditions_used) out << " " << c;
      out << "\n";
    }
    return {kExitOk, out.str()};
  } catch (const PreconditionError& err) {
    if (cfg.format == Format::Json) {
      json j{{"n", gamma.n()},
             {"gamma", params_json(gamma)},
             {"g", params_json(g)},
             {"status", "inapplicable"},
             {"condition", err.condition},
             {"message", err.what()}};
      out << j.dump(2) << "\n";
    } else if (cfg.format == Format::Csv) {
      out << "n,gamma_k,gamma_l,g_k,g_l,e_prime,e,status\n";
      out << gamma.n() << "," << gamma.k << "," << gamma.l << "," << g.k << "," << g.l
          << ",,,inapplicable\n";
    } else {
      out << "formula inapplicable: " << err.condition << " violation (" << err.what() << ")\n";
    }
    return {kExitInapplicable, out.str()};
  }
}

CmdResult cmd_table(Int n, const RunConfig& cfg) {
  order_2n(n);
  auto types = types_of_order(n);
  std::ostringstream out;

  json rows = json::array();
  std::ostringstream csv;
  csv << "n,gamma_k,gamma_l,g_k,g_l,e_prime,e,status\n";
  std::ostringstream text;
  text << "e(gamma, G) for order " << 2 * n << " (rows gamma, columns G)\n";
  text << "types:";
  for (const auto& t : types) text << " " << pair_str(t);
  text << "\n";

  for (const auto& gamma : types) {
    json entries = json::array();
    text << pair_str(gamma) << ":";
    for (const auto& g : types) {
      auto violation = formula_violation(gamma, g);
      if (!violation) {
        CountReport rep = count_report(gamma, g);
        entries.push_back(json{{"g", params_json(g)},
                               {"e", rep.e},
                               {"e_prime", rep.e_prime},
                               {"status", "ok"}});
        csv << n << "," << gamma.k << "," << gamma.l << "," << g.k << "," << g.l << ","
            << rep.e_prime << "," << rep.e << ",ok\n";
        text << " " << rep.e;
      } else {
        entries.push_back(
            json{{"g", params_json(g)}, {"status", "inapplicable"}, {"reason", *violation}});
        csv << n << "," << gamma.k << "," << gamma.l << "," << g.k << "," << g.l
            << ",,,inapplicable\n";
        text << " -";
      }
    }
    text << "\n";
    rows.push_back(json{{"gamma", params_json(gamma)}, {"entries", entries}});
  }

  if (cfg.format == Format::Json) {
    json j{{"N", n}, {"rows", rows}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << csv.str();
  } else {
    out << text.str();
  }
  return {kExitOk, out.str()};
}

namespace {

CmdResult oracle_one(const DihCycParams& g, bool dump, const RunConfig& cfg, std::ostream& text,
                     json& jout, std::ostream& csv) {
  auto subs = find_regular_subgroups(g, cfg.oracle());
  std::map<TypeTag, Int> inv;
  for (const auto& s : subs) ++inv[s.type_tag];

  text << "Hol(" << pair_str(g) << "), size " << hol_size(g) << ": " << subs.size()
       << " regular subgroups\n";
  json types = json::array();
  for (const auto& [tag, count] : inv) {
    text << "  " << to_string(tag) << ": " << count << "\n";
    types.push_back(json{{"type", type_json(tag)}, {"count", count}});
    csv << g.n() << "," << g.k << "," << g.l << "," << to_string(tag) << "," << count << "\n";
  }
  json j{{"g", params_json(g)},
         {"hol_size", hol_size(g)},
         {"total", subs.size()},
         {"types", types}};
  if (dump) {
    json all = json::array();
    for (const auto& s : subs) {
      json one{{"type", to_string(s.type_tag)}, {"elements", json::array()}};
      for (const auto& h : s.elements)
        one["elements"].push_back(render_matrix_triple(to_matrix_triple(g, h)));
      all.push_back(one);
    }
    j["subgroups"] = all;
  }
  jout = j;
  return {kExitOk, ""};
}

}  // namespace

CmdResult cmd_oracle(const std::optional<Int>& n, const std::optional<DihCycParams>& g, bool dump,
                     const RunConfig& cfg) {
  std::vector<DihCycParams> targets;
  if (g) targets.push_back(*g);
  if (n) {
    order_2n(*n);
    for (const auto& t : types_of_order(*n)) targets.push_back(t);
  }
  if (targets.empty()) throw std::invalid_argument("oracle needs --g or --n");

  std::ostringstream text, csv;
  csv << "n,g_k,g_l,type,count\n";
  json inventories = json::array();
  try {
    for (const auto& t : targets) {
      json j;
      oracle_one(t, dump, cfg, text, j, csv);
      inventories.push_back(j);
    }
  } catch (const SizeGuardError& err) {
    return {kExitGuard, std::string("size guard: ") + err.what() + " (use --allow-slow)\n"};
  }

  std::ostringstream out;
  if (cfg.format == Format::Json)
    out << json{{"inventories", inventories}}.dump(2) << "\n";
  else if (cfg.format == Format::Csv)
    out << csv.str();
  else
    out << text.str();
  return {kExitOk, out.str()};
}

VerifyReport build_verify_report(Int n, const RunConfig& cfg) {
  order_2n(n);
  VerifyReport rep;
  rep.n = n;
  auto types = types_of_order(n);

  std::map<std::pair<Int, Int>, std::map<TypeTag, Int>> inventories;
  for (const auto& g : types)
    inventories[{g.k, g.l}] = regular_subgroup_inventory(g, cfg.oracle());

  for (const auto& g : types) {
    const auto& inv = inventories[{g.k, g.l}];
    for (const auto& [tag, count] : inv)
      if (tag.kind != TypeTag::Kind::DihCyc)
        rep.other_buckets.emplace_back(pair_str(g) + " contains " + to_string(tag), count);
  }

  for (const auto& gamma : types) {
    TypeTag gamma_tag = type_of_params(gamma);
    for (const auto& g : types) {
      PairCheck check;
      check.gamma = gamma;
      check.g = g;
      const auto& inv = inventories[{g.k, g.l}];
      auto it = inv.find(gamma_tag);
      check.oracle_e_prime = it == inv.end() ? 0 : it->second;
      Int num = checked_mul(aut_order(gamma), check.oracle_e_prime);
      if (num % aut_order(g) != 0) throw InternalError("oracle e-conversion not integral");
      check.oracle_e = num / aut_order(g);
      auto violation = formula_violation(gamma, g);
      if (violation) {
        check.applicable = false;
        check.status = "inapplicable(" + *violation + ")";
      } else {
        check.applicable = true;
        check.formula_e_prime = e_prime_formula(gamma, g);
        check.formula_e = e_formula(gamma, g);
        check.match = check.formula_e_prime == check.oracle_e_prime &&
                      check.formula_e == check.oracle_e;
        check.status = check.match ? "ok" : "MISMATCH";
        if (!check.match) rep.all_match = false;
      }
      rep.pairs.push_back(check);
    }
  }

  // structural checks on full embedding enumerations at desk scale
  if (n <= 15) {
    rep.embeddings_run = true;
    for (const auto& gamma : types) {
      for (const auto& g : types) {
        auto embeddings = enumerate_regular_embeddings(gamma, g, cfg.oracle());
        // bookkeeping: embeddings per subgroup = |Aut(Gamma)|
        TypeTag gamma_tag = type_of_params(gamma);
        const auto& inv = inventories[{g.k, g.l}];
        auto it = inv.find(gamma_tag);
        Int expected = checked_mul(it == inv.end() ? 0 : it->second, aut_order(gamma));
        if (static_cast<Int>(embeddings.size()) != expected) ++rep.structural_failures;
        for (const auto& emb : embeddings) {
          ++rep.embeddings_checked;
          bool ok = emb.image_s.g.sexp == 1 && emb.image_r.g.sexp == 0 &&
                    emb.image_t.g.sexp == 0 &&
                    verify_embedding_congruences(emb).all_hold;
          if (!ok) ++rep.structural_failures;
        }
      }
    }
    if (rep.structural_failures > 0) rep.all_match = false;
  }
  return rep;
}

int verify_exit_code(const VerifyReport& rep) { return rep.all_match ? kExitOk : kExitMismatch; }

CmdResult cmd_verify(Int n, const RunConfig& cfg) {
  VerifyReport rep;
  try {
    rep = build_verify_report(n, cfg);
  } catch (const SizeGuardError& err) {
    return {kExitGuard, std::string("size guard: ") + err.what() + " (use --allow-slow)\n"};
  }

  std::ostringstream out;
  if (cfg.format == Format::Json) {
    json pairs = json::array();
    for (const auto& p : rep.pairs) {
      json j{{"gamma", params_json(p.gamma)},
             {"g", params_json(p.g)},
             {"oracle_e_prime", p.oracle_e_prime},
             {"oracle_e", p.oracle_e},
             {"status", p.status}};
      if (p.applicable) {
        j["formula_e_prime"] = p.formula_e_prime;
        j["formula_e"] = p.formula_e;
        j["match"] = p.match;
      }
      pairs.push_back(j);
    }
    json others = json::array();
    for (const auto& [name, count] : rep.other_buckets)
      others.push_back(json{{"bucket", name}, {"count", count}});
    json j{{"n", rep.n},
           {"pairs", pairs},
           {"other_buckets", others},
           {"embeddings_run", rep.embeddings_run},
           {"embeddings_checked", rep.embeddings_checked},
           {"structural_failures", rep.structural_failures},
           {"all_match", rep.all_match}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "n,gamma_k,gamma_l,g_k,g_l,e_prime,e,status\n";
    for (const auto& p : rep.pairs) {
      out << rep.n << "," << p.gamma.k << "," << p.gamma.l << "," << p.g.k << "," << p.g.l << ",";
      if (p.applicable)
        out << p.formula_e_prime << "," << p.formula_e << "," << p.status << "\n";
      else
        out << ",," << p.status << "\n";
    }
  } else {
    out << "verification at order " << 2 * n << "\n";
    for (const auto& p : rep.pairs) {
      out << "  gamma=" << pair_str(p.gamma) << " G=" << pair_str(p.g);
      if (p.applicable)
        out << " formula(e'=" << p.formula_e_prime << ", e=" << p.formula_e << ") oracle(e'="
            << p.oracle_e_prime << ", e=" << p.oracle_e << ") " << p.status << "\n";
      else
        out << " oracle(e'=" << p.oracle_e_prime << ", e=" << p.oracle_e << ") " << p.status
            << "\n";
    }
    for (const auto& [name, count] : rep.other_buckets)
      out << "  other bucket: " << name << " x" << count << " (excluded from comparison)\n";
    if (rep.embeddings_run)
      out << "  structural checks: " << rep.embeddings_checked << " embeddings, "
          << rep.structural_failures << " failures\n";
    else
      out << "  structural checks skipped (N > 15)\n";
    out << (rep.all_match ? "ALL MATCH\n" : "MISMATCH FOUND\n");
  }
  return {verify_exit_code(rep), out.str()};
}

CmdResult cmd_braces(const DihCycParams& gamma, const RunConfig& cfg) {
  std::map<TypeTag, BraceCounts> classes;
  try {
    classes = skew_brace_classes(gamma, cfg.oracle());
  } catch (const SizeGuardError& err) {
    return {kExitGuard, std::string("size guard: ") + err.what() + " (use --allow-slow)\n"};
  }

  std::ostringstream out, text, csv;
  csv << "gamma_k,gamma_l,type,subgroups,orbits,formula,formula_matches\n";
  json rows = json::array();
  text << "skew braces with additive group " << pair_str(gamma) << "\n";
  for (const auto& [tag, counts] : classes) {
    json row{{"type", type_json(tag)},
             {"subgroups", counts.subgroup_count},
             {"orbits", counts.orbit_count}};
    text << "  (x) = " << to_string(tag) << ": subgroups " << counts.subgroup_count << ", orbits "
         << counts.orbit_count;
    std::string formula_cell, match_cell;
    if (tag.kind == TypeTag::Kind::DihCyc) {
      DihCycParams mult{tag.k, tag.l};
      auto violation = formula_violation(gamma, mult);
      if (!violation) {
        Int f = skew_brace_formula(gamma, mult);
        bool matches = f == counts.orbit_count;
        row["formula"] = f;
        row["formula_matches_orbits"] = matches;
        text << ", formula " << f << (matches ? " (matches orbits)" : " (DIFFERS from orbits)");
        formula_cell = std::to_string(f);
        match_cell = matches ? "yes" : "no";
      } else {
        row["formula"] = nullptr;
        row["formula_status"] = "inapplicable(" + *violation + ")";
        text << ", formula inapplicable (" << *violation << ")";
      }
    } else {
      row["formula"] = nullptr;
      row["formula_status"] = "inapplicable(non-product type)";
      text << ", formula inapplicable (non-product type)";
    }
    text << "\n";
    csv << gamma.k << "," << gamma.l << "," << to_string(tag) << "," << counts.subgroup_count
        << "," << counts.orbit_count << "," << formula_cell << "," << match_cell << "\n";
    rows.push_back(row);
  }

  if (cfg.format == Format::Json)
    out << json{{"gamma", params_json(gamma)}, {"rows", rows}}.dump(2) << "\n";
  else if (cfg.format == Format::Csv)
    out << csv.str();
  else
    out << text.str();
  return {kExitOk, out.str()};
}

CmdResult cmd_orders(const DihCycParams& g, const RunConfig& cfg) {
  std::map<Int, Int> census;
  try {
    census = order_census(g, cfg.effective_guard());
  } catch (const SizeGuardError& err) {
    return {kExitGuard, std::string("size guard: ") + err.what() + " (use --allow-slow)\n"};
  }

  std::ostringstream out;
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (auto [o, c] : census) rows.push_back(json{{"order", o}, {"count", c}});
    out << json{{"g", params_json(g)}, {"hol_size", hol_size(g)}, {"census", rows}}.dump(2)
        << "\n";
  } else if (cfg.format == Format::Csv) {
    out << "order,count\n";
    for (auto [o, c] : census) out << o << "," << c << "\n";
  } else {
    out << "element orders in Hol(" << pair_str(g) << "), size " << hol_size(g) << "\n";
    for (auto [o, c] : census) out << "  order " << o << ": " << c << "\n";
  }
  return {kExitOk, out.str()};
}

}  // namespace hg::cli
