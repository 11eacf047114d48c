#pragma once

// Command implementations behind the CLI: each builds a structured report
// and renders it as text, JSON or CSV.  Exit codes: 0 success, 1 usage,
// 2 formula inapplicable, 3 size guard exceeded, 4 verification mismatch.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hgcount/formula.hpp"
#include "hgcount/oracle.hpp"

namespace hg::cli {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(const std::string&);

struct RunConfig {
  Int max_hol_size = kDefaultHolSizeGuard;
  Format format = Format::Text;
  int parallelism = 0;  // 0 = auto
  bool allow_slow = false;

  Int effective_guard() const {
    return allow_slow ? std::numeric_limits<Int>::max() : max_hol_size;
  }
  OracleConfig oracle() const { return OracleConfig{effective_guard(), parallelism}; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitMismatch = 4;

struct CmdResult {
  int code = 0;
  std::string out;
};

// One formula-vs-oracle comparison cell; also the row shape of the CSV
// schema n,gamma_k,gamma_l,g_k,g_l,e_prime,e,status.
struct PairCheck {
  DihCycParams gamma, g;
  bool applicable = false;
  std::string status;  // "ok" or the violated condition
  Int formula_e_prime = 0, formula_e = 0;
  Int oracle_e_prime = 0, oracle_e = 0;
  bool match = true;
};

struct VerifyReport {
  Int n = 0;
  std::vector<PairCheck> pairs;
  std::vector<std::pair<std::string, Int>> other_buckets;  // per G: non-product types found
  Int embeddings_checked = 0;
  Int structural_failures = 0;
  bool embeddings_run = false;
  bool all_match = true;
};

VerifyReport build_verify_report(Int n, const RunConfig&);
int verify_exit_code(const VerifyReport&);

CmdResult cmd_count(const DihCycParams& gamma, const DihCycParams& g, const RunConfig&);
CmdResult cmd_table(Int n, const RunConfig&);
CmdResult cmd_oracle(const std::optional<Int>& n, const std::optional<DihCycParams>& g, bool dump,
                     const RunConfig&);
CmdResult cmd_verify(Int n, const RunConfig&);
CmdResult cmd_braces(const DihCycParams& gamma, const RunConfig&);
CmdResult cmd_orders(const DihCycParams& g, const RunConfig&);

}  // namespace hg::cli
