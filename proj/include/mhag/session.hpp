#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhag/suites.hpp"

namespace mhag {

// Invalid user input: malformed JSON, schema violations, failed load-time checks.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Group, FiniteDimHopf, DrinfeldDouble };

// A validated session: the pairing, its double, and how to enumerate test cases.
struct Session {
  InstanceKind kind = InstanceKind::Group;
  FieldSpec field;
  GroupPtr group;  // null for structure-constant instances
  std::shared_ptr<const Pairing> pairing;
  std::shared_ptr<const DoubleAlgebra> algebra;
  SuiteConfig config;
  Faults faults;
  std::vector<std::pair<Grading, Grading>> splits;  // export splits; empty = defaults
};

// Parses and validates a JSON session spec. Diagnostics name the offending field.
Session parse_session(const std::string& text);

// Builds the double again with different faults (test hooks).
void set_faults(Session& s, const Faults& f);

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"hopf", "cograded", "crossing", "quasitriangular", "lemma42", "oracle"};
  return names;
}

struct VerifyResult {
  int exit_code = 0;  // 0 all pass, 1 some axiom fails
  Json report;
};

// Runs the named suites; unknown names throw SpecError.
VerifyResult run_verify(const Session& s, const std::vector<std::string>& suites);

// Multiplication tensor of the component at `p` and covered comultiplication
// images of all basis elements for each split; finite instances only.
Json export_structure(const Session& s, const Grading& p);

// Parses "c*a|b + a'|b'" (legs separated by ';' for tensors) against the instance labels.
CrossedElem parse_crossed(const Session& s, const std::string& text);
CrossedPair parse_crossed_pair(const Session& s, const std::string& text);

// One-off evaluation of a named operation; returns the printed result.
struct EvalRequest {
  std::string op;
  std::vector<std::size_t> gradings;  // indices into the session's grading list
  std::string x;
  std::string y;
};
std::string evaluate(const Session& s, const EvalRequest& r);

}  // namespace mhag
