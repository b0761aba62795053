#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lrdens/bigint.hpp"
#include "lrdens/density.hpp"
#include "lrdens/recurrence.hpp"

namespace lrdens::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidRecurrence = 2,
  kDegenerate = 3,
  kCapExceeded = 4,
  kInternal = 5,
};

struct RunConfig {
  /// classify | density | delta | tvalues | bench
  std::string command;
  /// Inline JSON; takes precedence over rec_file.
  std::string rec_json;
  std::string rec_file;
  std::uint64_t x = 1000;
  std::uint64_t y = 2;
  std::uint64_t pmax = 100;
  /// "num/den" or a decimal; empty selects 1/(k+1).
  std::string gamma;
  std::uint64_t cap_window = kDefaultWindowCap;
  std::uint64_t cap_states = kDefaultStateCap;
  /// json | csv; empty selects the command's default.
  std::string format;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

/// {"coeffs":[a_1,...,a_k],"initial":[u_0,...,u_{k-1}]}, integers only.
/// Throws Error (InvalidArgument for malformed JSON, else validation kinds).
Recurrence parse_recurrence_json(const std::string& text);

/// "num/den", an integer, or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lrdens::cli
