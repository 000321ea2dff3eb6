#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rpog/symbolic.hpp"

namespace rpog {

using ExampleObject = std::variant<SymbolicRpoGroup, SymbolicGraph>;

// Registry keys for the symbolic objects: Z_N, Z_triv, ZxZ_diagN,
// Ex1, Ex2, Ex3, Ex4.
std::optional<ExampleObject> build_example(const std::string& id);

// A replayable example: named checks with recorded expectations and,
// where applicable, recorded witnesses that are re-evaluated on replay.
struct ExampleCheck {
  std::string key;
  bool expected;
  std::function<Verdict(unsigned seed, int samples)> run;
  // Re-evaluates the recorded witness; the rendered line on success,
  // nullopt if the recorded value no longer checks out.
  std::function<std::optional<std::string>()> replay_witness;
};

struct ExampleBundle {
  std::string id;
  std::string title;
  std::vector<ExampleCheck> checks;
};

std::vector<std::string> example_ids();
std::optional<ExampleBundle> example_bundle(const std::string& id);

}  // namespace rpog
