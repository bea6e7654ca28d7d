#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccc/classes.hpp"
#include "ccc/errors.hpp"

namespace ccc::cli {

enum class Command { Segre, Chern, Csm, Euler, EulerComplement };
enum class OutputFormat { List, Poly, Json };

std::string to_string(Command c);

// Exit codes of the ccc tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitGenericity = 3;
inline constexpr int kExitInternal = 4;

// Parse or validation failure, reported with exit code 2.
class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct Request {
  Command command = Command::Segre;
  RingPtr ring;
  std::vector<Polynomial> ideal;
  std::optional<std::vector<Polynomial>> second_ideal;
  RandomPolicy policy;
  OutputFormat format = OutputFormat::List;
  unsigned jobs = 1;
};

struct Response {
  Command command = Command::Segre;
  int n = 0;
  std::uint32_t prime = 0;
  // Class commands carry a report, euler commands a bare integer.
  std::optional<ClassReport> report;
  std::optional<BigInt> euler;
  std::uint64_t seed = 0;
  int retries = 0;
  double wall_seconds = 0;
  std::vector<std::string> warnings;
};

// Reads the ideal file format:
//   ring: x, y, z, w
//   prime: 32003        (optional)
//   ideal:
//   <one generator per line>
// '#' starts a comment. Returns the variable names, prime (if given) and
// the raw generator lines with their 1-based line numbers.
struct IdealFile {
  std::vector<std::string> ring;
  std::optional<std::uint32_t> prime;
  std::vector<std::pair<std::size_t, std::string>> generators;
};
IdealFile parse_ideal_file(const std::string& contents);

// argv without the program name. Throws UsageError (or another
// InvalidInput) on bad input; the message names line/column or generator.
Request parse_request(const std::vector<std::string>& args);

Response run(const Request& request);

std::string format_output(const Response& response, OutputFormat format);

// Whole tool: parse, run, print to `out`, diagnostics to `err`; returns
// the process exit code.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
