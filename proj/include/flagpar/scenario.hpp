#ifndef FLAGPAR_SCENARIO_HPP
#define FLAGPAR_SCENARIO_HPP

// Textual scenario files and the reports produced by running them.
//
//   (flagpar-scenario 1
//     (name limit-ordinal)
//     (system (domain colpair) (kernel delta))
//     (flag (side v) (schema column ascending))
//     (ambient gl)
//     (checks validate semiclosed taut stabilizer levi chevalley)
//     (levels 1 2 3 4))
//
// Other fields: (system ... (form symmetric|alternating) (pairs N|inf)
// (dimension N)), (flag (side v) (schema chain) (members <cutset> ...)),
// (schema rational ascending|descending), a second flag on side w (default:
// the dual flag), (trace-row (<block-id> <coefficient>) ...),
// (real-form su 1 inf) for su(1,inf), (sigma 1 1/2) and (degree d).
// Unknown fields are rejected.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagpar/induce.hpp"

namespace flagpar {

struct FlagSpec {
  Side side = Side::V;
  Schema schema = Schema::FiniteChain;
  Direction dir = Direction::Ascending;
  std::vector<CutSet> members;  // finite chains only

  GenFlag build(const DualSystem& sys) const;
  friend bool operator==(const FlagSpec&, const FlagSpec&) = default;
};

struct Scenario {
  int version = 1;
  std::string name;
  DualSystem system;
  FlagSpec v;
  std::optional<FlagSpec> w;
  Ambient ambient = Ambient::GL;
  std::vector<std::string> real_form;  // kind then parameters
  std::vector<TraceRow> trace_rows;
  std::vector<std::string> checks;
  std::vector<std::size_t> levels;
  std::vector<Rational> sigma;
  std::size_t degree = 2;

  std::string real_form_name() const;
  ParabolicDesc parabolic() const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ParseError with line and column.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string print_scenario(const Scenario& s);

/// Checks in the order they run.
const std::vector<std::string>& known_checks();

struct CheckRecord {
  std::string name;
  std::string anchor;  // the property under test
  std::size_t level = 0;
  bool verdict = false;
  std::string witness;
  double seconds = 0;
};

struct Report {
  std::string source;
  std::vector<CheckRecord> records;

  bool all_hold() const;
};

/// Times fn and appends its record; exceptions become failing records.
void run_check(Report& r, const std::string& name, const std::string& anchor, std::size_t level,
               const std::function<std::pair<bool, std::string>()>& fn);

std::string emit_text(const Report& r);
/// One JSON object per line, fields in a fixed order.
std::string emit_record(const Report& r);

Report run_scenario(const Scenario& s);

/// oracle, classification, realforms, induction, all.
Report run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace flagpar

#endif  // FLAGPAR_SCENARIO_HPP
