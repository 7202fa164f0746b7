#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hankel_lab::cli {

enum class Command {
  kCoeffs,
  kHankel,
  kTable1,
  kPredict,
  kSynthesize,
  kReduce,
  kVerify,
  kConjecture,
  kPrimitives,
};

enum class OutputFormat { kPlain, kJson, kCsv, kMarkdown };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGoldenMismatch = 2;
inline constexpr int kExitInconsistent = 3;

struct RunConfig {
  Command command = Command::kHankel;
  std::optional<std::string> set_literal;
  std::size_t n = 60;
  bool n_given = false;
  // Unset means the command default: 2 for hankel and table1, 3 elsewhere.
  std::optional<std::size_t> min_repeats;
  OutputFormat output_format = OutputFormat::kPlain;
  std::optional<std::string> output_path;

  bool detect = false;
  bool verify = false;
  std::string ts;
  int modulus = 0;
  int s = 1;
  std::string parts;
  std::string flag = "D";
  std::string claim;
  int max_len = 3;
  int max_t = 5;
};

struct CommandResult {
  std::string text;
  std::vector<std::string> diagnostics;  // written to stderr
  int exit_code = kExitOk;
};

// Each command renders its full output; usage problems surface as
// exceptions from the library (ParseError, PreconditionError, ...).
CommandResult cmd_coeffs(const RunConfig& cfg);
CommandResult cmd_hankel(const RunConfig& cfg);
CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_predict(const RunConfig& cfg);
CommandResult cmd_synthesize(const RunConfig& cfg);
CommandResult cmd_reduce(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_conjecture(const RunConfig& cfg);
CommandResult cmd_primitives(const RunConfig& cfg);

CommandResult dispatch(const RunConfig& cfg);

// Runs the command, maps exceptions to exit codes and writes the output to
// cfg.output_path or `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// A RunConfig, or the exit code to stop with (help, usage errors).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err);

// Worker count for table1: hardware concurrency, capped by HANKEL_LAB_THREADS.
std::size_t worker_count(std::size_t jobs);

}  // namespace hankel_lab::cli
