#pragma once

#include <stdexcept>
#include <string>

namespace ff {

// Bad caller input: out-of-range ids, non-finite coordinates, malformed trees.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The instance cannot be saved at any budget (e.g. the fire starts on a target).
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Earliest-deadline-first could not meet a deadline.
struct schedule_error : std::runtime_error {
  schedule_error(const std::string& what, int vertex, int deadline)
      : std::runtime_error(what), vertex(vertex), deadline(deadline) {}
  int vertex;
  int deadline;
};

// A solver produced a schedule that the simulator rejects.
struct internal_inconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// The exact search exceeded its state budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance or schedule file problems; `where` names the offending field.
struct parse_error : std::runtime_error {
  parse_error(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where(where) {}
  std::string where;
};

}  // namespace ff
