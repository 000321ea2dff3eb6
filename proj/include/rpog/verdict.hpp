#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rpog {

// Malformed input data: wrong lengths, out-of-range indices, unparseable
// files.  Distinct from a false Verdict, which reports a law violation on
// structurally sound data.
class structural_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was invoked on input that fails its stated precondition.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One named element value inside a witness, e.g. x = "(13)".
struct Binding {
  std::string name;
  std::string value;
  long index = -1;  // finite element index, -1 when not applicable
};

// Outcome of a checker: a boolean plus, on failure (or realization),
// concrete elements demonstrating it.  `law` names the condition that was
// decided; `detail` carries sub-case or sampling notes.
struct Verdict {
  bool holds = false;
  std::string law;
  std::string detail;
  std::vector<Binding> witness;

  explicit operator bool() const { return holds; }

  static Verdict yes(std::string law_name = "", std::string detail_text = "");
  static Verdict no(std::string law_name, std::vector<Binding> w,
                    std::string detail_text = "");

  const Binding* find(const std::string& binding_name) const;
  std::string witness_text() const;  // "x=(13), p=(12)(34)"
};

}  // namespace rpog
