// hgcount: counts Hopf-Galois structures of type G on Galois extensions with
// group Gamma, where Gamma and G range over D_{2k} x C_l of order 2N (N odd),
// with an exhaustive holomorph oracle cross-checking every closed form.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hgcount/report.hpp"

namespace {

using hg::DihCycParams;
using hg::Int;

// Accepts "k,l" plus the aliases "cyclic" -> (1, N) and "dihedral" -> (N, 1);
// aliases need N from the other side of the pair.
DihCycParams parse_pair(const std::string& raw, std::optional<Int> n_hint) {
  if (raw == "cyclic" || raw == "dihedral") {
    if (!n_hint)
      throw std::invalid_argument("alias '" + raw + "' needs a numeric counterpart to fix N");
    return raw == "cyclic" ? hg::make_params(1, *n_hint) : hg::make_params(*n_hint, 1);
  }
  long long k, l;
  int consumed = 0;
  if (std::sscanf(raw.c_str(), "%lld,%lld%n", &k, &l, &consumed) != 2 ||
      static_cast<std::size_t>(consumed) != raw.size())
    throw std::invalid_argument("expected 'k,l' (odd integers), got '" + raw + "'");
  return hg::make_params(k, l);
}

std::optional<Int> numeric_n(const std::string& raw) {
  long long k, l;
  int consumed = 0;
  if (std::sscanf(raw.c_str(), "%lld,%lld%n", &k, &l, &consumed) == 2 &&
      static_cast<std::size_t>(consumed) == raw.size())
    return k * l;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structure counts for groups D_2k x C_l of order 2N, N odd"};
  app.require_subcommand(1);
  app.fallthrough();

  hg::cli::RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-hol-size", cfg.max_hol_size, "largest holomorph the oracle may enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--parallel", cfg.parallelism, "oracle worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--allow-slow", cfg.allow_slow, "lift the size guard");

  auto* count = app.add_subcommand("count", "evaluate the closed-form counts for one pair");
  std::string gamma_arg, type_arg;
  count->add_option("--gamma", gamma_arg, "Galois group as k,l (or cyclic/dihedral)")->required();
  count->add_option("--type", type_arg, "structure type G as k,l (or cyclic/dihedral)")->required();

  auto* table = app.add_subcommand("table", "full e(gamma, G) matrix for one order");
  Int table_n = 0;
  table->add_option("--n", table_n, "odd N; the order is 2N")->required();

  auto* oracle = app.add_subcommand("oracle", "enumerate regular subgroups of holomorphs");
  std::string oracle_g;
  Int oracle_n = 0;
  bool dump = false;
  oracle->add_option("--g", oracle_g, "one group as k,l");
  oracle->add_option("--n", oracle_n, "all types of order 2N");
  oracle->add_flag("--dump", dump, "list each subgroup's elements");

  auto* verify = app.add_subcommand("verify", "compare closed forms against the oracle");
  Int verify_n = 0;
  verify->add_option("--n", verify_n, "odd N")->required();

  auto* braces = app.add_subcommand("braces", "skew-brace classes for an additive group");
  std::string braces_gamma;
  braces->add_option("--gamma", braces_gamma, "additive group as k,l")->required();

  auto* orders = app.add_subcommand("orders", "element-order census of a holomorph");
  std::string orders_g;
  orders->add_option("--g", orders_g, "group as k,l")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return hg::cli::kExitUsage;
  }

  cfg.format = *hg::cli::parse_format(format);

  try {
    hg::cli::CmdResult result;
    if (*count) {
      auto gamma = parse_pair(gamma_arg, numeric_n(type_arg));
      auto g = parse_pair(type_arg, numeric_n(gamma_arg));
      result = hg::cli::cmd_count(gamma, g, cfg);
    } else if (*table) {
      result = hg::cli::cmd_table(table_n, cfg);
    } else if (*oracle) {
      std::optional<Int> n;
      std::optional<DihCycParams> g;
      if (oracle->count("--n")) n = oracle_n;
      if (!oracle_g.empty()) g = parse_pair(oracle_g, std::nullopt);
      result = hg::cli::cmd_oracle(n, g, dump, cfg);
    } else if (*verify) {
      result = hg::cli::cmd_verify(verify_n, cfg);
    } else if (*braces) {
      result = hg::cli::cmd_braces(parse_pair(braces_gamma, std::nullopt), cfg);
    } else if (*orders) {
      result = hg::cli::cmd_orders(parse_pair(orders_g, std::nullopt), cfg);
    }
    std::cout << result.out;
    return result.code;
  } catch (const hg::PreconditionError& e) {
    std::cerr << "formula inapplicable: " << e.condition << " violation (" << e.what() << ")\n";
    return hg::cli::kExitInapplicable;
  } catch (const hg::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << " (use --allow-slow)\n";
    return hg::cli::kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hg::cli::kExitUsage;
  }
}
