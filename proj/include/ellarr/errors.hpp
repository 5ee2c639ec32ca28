#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ellarr {

// Every failure mode the library reports deliberately.  The CLI maps these
// to exit codes; tests match on the code, not the message text.
enum class errc {
  loop,                     // self-loop in simple-graph input
  duplicate_edge,           // repeated edge in simple-graph input
  bad_token,                // unparseable edge list / unknown builtin
  disconnected,             // operation requires a connected graph
  compact_group,            // specialization undefined for q == 0
  too_large,                // static size cap exceeded (oracle-grade routines)
  circuit_budget_exceeded,  // circuit enumeration passed its cap
  memory_budget_exceeded,   // elimination working set passed its cap
  certification_failed,     // modular result could not be certified
  partial_table,            // requested data lies outside a capped table
};

class Error : public std::runtime_error {
public:
  Error(errc code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::loop: return "loop";
    case errc::duplicate_edge: return "duplicate-edge";
    case errc::bad_token: return "bad-token";
    case errc::disconnected: return "disconnected";
    case errc::compact_group: return "compact-group";
    case errc::too_large: return "too-large";
    case errc::circuit_budget_exceeded: return "circuit-budget-exceeded";
    case errc::memory_budget_exceeded: return "memory-budget-exceeded";
    case errc::certification_failed: return "certification-failed";
    case errc::partial_table: return "partial-table";
  }
  return "unknown";
}

}  // namespace ellarr
