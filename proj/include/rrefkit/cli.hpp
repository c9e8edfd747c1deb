#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rrefkit/scalar.hpp"

namespace rrefkit::cli {

enum class Subcommand { Rref, Pivots, Basis, Null, Graph, Check, Equiv, Script, Solve, Syseq };
enum class OutputFormat { Plain, Json };

// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kFalseVerdict = 1;
inline constexpr int kUsageError = 2;

struct CliConfig {
  Subcommand subcommand = Subcommand::Rref;
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::Plain;
};

std::string_view subcommand_name(Subcommand s);
/// Number of input files the subcommand takes (two for equiv and syseq).
std::size_t input_count(Subcommand s);

/// "q" or "gf:<p>"; throws ParseError or InvalidOperation.
FieldSpec parse_field_flag(std::string_view flag);

/// Runs one subcommand; results go to `out`, diagnostics to `err`.
/// Returns 0 on success or a true verdict, 1 on a false verdict, 2 on usage,
/// input or parse errors.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, then calls run().
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrefkit::cli
