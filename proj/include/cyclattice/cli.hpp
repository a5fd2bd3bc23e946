#pragma once

// Batch-calculator front end: expression syntax, subcommands and the text,
// JSON and DOT renderings of their results.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cyclattice/cycle_set.hpp"
#include "cyclattice/poset.hpp"

namespace cyc::cli {

enum class ExprKind { Union, Cond };

/// `C{n1,n2,...}` is a union of cycles, `S{n1,n2,...}` a cyclic loop condition.
struct Expr {
  ExprKind kind;
  CycleSet carrier;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Throws ParseError (with the offending position) on malformed input.
Expr parseExpr(std::string_view text);
std::string render(const Expr& e);

enum class HasseFormat { Text, Json, Dot };
std::string renderHasse(const HasseGraph& graph, HasseFormat format);

/// Exit codes of runCommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one invocation; `args` excludes the program name. Answers go to
/// `out`, diagnostics to `err`. Boolean "no" answers return kExitNo; parse
/// and resource failures return kExitError.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyc::cli
