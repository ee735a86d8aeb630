#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fermat::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

enum class Format { tsv, json };

struct RunConfig {
  std::string command;
  std::vector<std::uint32_t> primes;
  std::size_t bound = 1000;
  Format format = Format::tsv;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 20240607;
};

// Accepts "p", "a..b" or comma-separated lists of either. Ranges keep only
// primes and drop 3 with a note on `notes`; an explicit non-prime or an
// explicit 3 throws std::invalid_argument.
std::vector<std::uint32_t> parse_primes(const std::string& text, std::ostream& notes);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
