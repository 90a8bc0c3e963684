#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gct/gct.hpp"

namespace gct::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kPrecondition = 2,
  kInconclusive = 3,
  kUsage = 64,
};

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t size_budget = 4000;
  std::uint64_t prime1 = RankPolicy{}.prime1;
  std::uint64_t prime2 = RankPolicy{}.prime2;
  enum class Output { json, table } output = Output::json;
  unsigned threads = 0;  // 0 = all cores
  bool timing = false;
  bool verbose = false;

  /// Applies GCT_SIZE_BUDGET and GCT_PRIMES ("p1,p2") from the environment.
  void apply_environment();
  /// Throws PreconditionError unless the primes are distinct primes below 2^62 and the budget is positive.
  void validate() const;
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gct::cli
