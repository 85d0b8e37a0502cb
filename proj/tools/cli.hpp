#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fourecc/cuts.hpp"

namespace fourecc::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kPrecondition = 3, kMismatch = 4 };

enum class Format { json, dot, text };

struct RunConfig {
  std::string command;       // components4, cuts3, cut-tree, verify, gen, bench
  std::string input = "-";   // path, "-" for stdin
  CutMode mode = CutMode::deterministic;
  std::uint64_t seed = 0xC0FFEE;
  Format format = Format::json;
  bool paranoid = false;
  std::string out;           // empty: stdout
  // gen / bench
  std::string family = "k4_chain";
  std::size_t n = 8;
  unsigned degree = 3;
  unsigned min_log = 14;
  unsigned max_log = 20;
  // verify
  std::size_t max_edges = 80;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;  // goes to --out or stdout
  std::string error;   // goes to stderr
};

/// Runs one command on an already loaded input document (ignored by gen and
/// bench).
CommandResult run_command(const RunConfig& cfg, const std::string& input_text);

/// Full command line: parses flags, reads input, writes output.
int main_with(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fourecc::cli
