#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopepoly/tolerances.hpp"

namespace slopepoly::app {

struct SweepOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  unsigned threads = 1;
  Tolerances tol;
};

enum class Outcome { Pass, Fail, Skip };

struct PropertyTally {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct SweepFailure {
  std::size_t trial = 0;
  std::string property;
  std::string message;
};

struct SweepSummary {
  SweepOptions options;
  std::vector<PropertyTally> properties;
  /// In trial order.
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Names of the properties checked on every trial, in report order.
const std::vector<std::string>& sweep_properties();

/// Runs the invariant suite on `trials` random inputs. Trial i draws from its
/// own generator, so the summary does not depend on `threads`.
SweepSummary run_sweep(const SweepOptions& options);

std::string format_text(const SweepSummary& summary);
nlohmann::json to_json(const SweepSummary& summary);

}  // namespace slopepoly::app
