#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubeprobe/errors.hpp"

namespace cubeprobe::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kReject = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { Estimate, Test, OracleDtv, Gen, EncodeCnf };
enum class Format { Table, Json };

struct Config {
  Command command = Command::Estimate;
  std::string instance_path;
  std::string sampler = "uniform";
  double zeta = 0.3;
  double delta = 0.2;  // the test command defaults to 0.1
  double epsilon = 0.01;
  double eta = 0.61;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_samples = 0;  // 0 = unlimited
  Format format = Format::Table;
  // oracle-dtv
  std::string p_spec = "biased-equal";
  std::string q_spec = "uniform";
  // gen
  std::string family = "avgdeg";
  double family_param = 3.0;
  std::size_t size = 8;
  std::size_t index = 0;
  std::string out_path;  // gen output file, or the CNF path for encode-cnf
};

// Parses and validates arguments (without the program name). Unknown flags,
// a missing instance path and out-of-range parameters raise UsageError.
Config parse_args(const std::vector<std::string>& args);

// Mirrors the "Estd dTV", "#samples" and "A/R" columns of a results table.
struct RunReport {
  std::string instance_path;
  std::size_t dim = 0;
  double estd_dtv = 0.0;
  std::uint64_t samples = 0;
  std::optional<char> verdict;  // 'A' or 'R'
  nlohmann::json params;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
  std::string status = "ok";

  nlohmann::json to_json() const;
};

// Runs one command. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success or ACCEPT, 1 usage, 2 budget exhausted, 3 REJECT.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeprobe::cli
