#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaql/action.hpp"
#include "gaql/derivation.hpp"
#include "gaql/error.hpp"
#include "gaql/format.hpp"
#include "gaql/monomial_order.hpp"
#include "gaql/poly_map.hpp"
#include "gaql/quotient.hpp"

namespace gaql::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCommandError = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  unsigned nilpotency_bound = kDefaultNilpotencyBound;
  unsigned degree_bound = kDefaultSliceDegreeBound;
  unsigned power_bound = kDefaultPowerBound;
  MonomialOrder order = MonomialOrder::grevlex();
  /// Adds a "timing" key to each record. Everything else in a record is
  /// deterministic.
  bool timing = true;
};

/// kDefaultNilpotencyBound unless GAQL_DEFAULT_BOUND holds a positive integer.
unsigned default_nilpotency_bound();

/// Rejected task input, pinned to a 1-based line of the task file.
class LoadError : public Error {
 public:
  LoadError(ErrorCode code, const std::string& message, std::size_t line)
      : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The commands understood in task files and as subcommands.
const std::vector<std::string>& command_names();

/// Field names accepted by `command` (without "cmd"), plus "lower",
/// "upper" and "steps" for commands that take a grid.
std::vector<std::string> command_fields(const std::string& command);

/// Builds a command object from string-valued flags (keyed by field name).
/// Lists are comma-separated; "points" separates points with ';'. A map or
/// derivation flag that is an identifier other than a ring variable is a
/// name reference, otherwise an inline list. Throws Error(InvalidArgument).
json command_from_flags(const std::string& command,
                        const std::map<std::string, std::string>& flags,
                        const std::vector<std::string>& ring_vars);

/// One JSON object per non-blank line. Checks every command's fields and
/// that each referenced name was declared on an earlier line.
std::vector<json> load_task(std::istream& in);
void validate_task(const std::vector<json>& commands);

/// Executes commands in order against named state.
class Session {
 public:
  explicit Session(RunOptions options = {});

  /// One output record; errors are reported in the record, never thrown.
  json execute(const json& command, std::size_t line);

 private:
  json dispatch(const std::string& name, const json& cmd);

  RingPtr require_ring() const;
  Polynomial poly_arg(const json& v) const;
  std::vector<Polynomial> poly_list_arg(const json& v) const;
  PolyMap map_arg(const json& cmd) const;
  Derivation derivation_arg(const json& cmd) const;
  GaAction action_arg(const json& cmd) const;
  unsigned uint_arg(const json& cmd, const char* key, unsigned fallback) const;
  MonomialOrder order_arg(const json& cmd) const;

  json run_ring(const json& cmd);
  json run_poly(const json& cmd);
  json run_map(const json& cmd);
  json run_derivation(const json& cmd);
  json run_apply(const json& cmd);
  json run_nilpotency(const json& cmd);
  json run_exp(const json& cmd);
  json run_act(const json& cmd);
  json run_invariant(const json& cmd);
  json run_jacobian_derivation(const json& cmd);
  json run_slice(const json& cmd);
  json run_localization(const json& cmd);
  json run_fiber(const json& cmd);
  json run_singular_locus(const json& cmd);
  json run_scan(const json& cmd);
  json run_subalgebra(const json& cmd);
  json run_groebner(const json& cmd);

  RunOptions options_;
  RingPtr ring_;
  PolyTable polys_;
  std::map<std::string, PolyMap> maps_;
  std::map<std::string, Derivation> derivations_;
  std::map<std::string, GaAction> actions_;
};

/// Writes one record per line; returns kExitOk iff every command succeeded.
int run_commands(const std::vector<json>& commands, std::ostream& out,
                 const RunOptions& options);

/// load_task + run_commands; load failures print one error record and
/// return kExitUsage.
int run_task(std::istream& in, std::ostream& out, const RunOptions& options);

}  // namespace gaql::cli
