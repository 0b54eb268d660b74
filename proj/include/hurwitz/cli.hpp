#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/formulas.hpp"

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// --help or --version; the message is the text to print.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kEnumerate, kSlope, kComponents, kVerify };
enum class OutputFormat { kTable, kStructured, kCsv };

struct IntRange {
  int first = 0;
  int last = 0;
};

/// Parses "n" or "a..b".
IntRange parse_range(const std::string& text);

struct RunConfig {
  Command command = Command::kEnumerate;
  IntRange d{2, 2};
  IntRange g{2, 2};
  std::optional<int> k;  // defaults to 2g-3 per (d, g)
  int genus_X = 1;
  bool closed_form = false;
  std::optional<std::string> dump_path;
  int workers = 0;
  std::uint64_t budget = kDefaultBudget;
  OutputFormat format = OutputFormat::kTable;
  std::optional<std::string> output_path;
};

/// Throws UsageError on bad arguments and HelpRequested for --help/--version.
RunConfig parse_args(int argc, const char* const* argv);
/// Range and flag consistency; throws UsageError.
void check_config(const RunConfig& config);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Identity checks that need only the count vector.
std::vector<Check> count_checks(const ClassCounts& counts, int k);
/// Everything `verify` runs for one brute-forced (d, g).
std::vector<Check> verification_checks(const ClassSet& set, int k, int genus_X);

/// Runs a full command. Writes results to `out`, diagnostics to `err`, and
/// returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv entry point used by the executable.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One record of the class-set dump: "d g Cov1 h | alpha | beta | gamma1 ... gammaN".
std::string dump_line(int d, int g, const CovClass& cls);
struct DumpRecord {
  int d = 0;
  int g = 0;
  Classification classification;
  CoverTuple tuple;
};
DumpRecord parse_dump_line(const std::string& line);

const char* version();

}  // namespace hurwitz::cli
