#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "menhir/menhir.hpp"

namespace menhir::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_domain = 2;
inline constexpr int json_schema_version = 1;

struct CompositionResult {
  std::vector<VelocityVector> inputs;
  std::optional<int> k;  // nullopt: the k -> infinity limit product
  std::size_t dim = 0;
  VelocityVector result;
  double speed = 0.0;
  double rapidity = 0.0;
  std::string fold_order;
};

/// Left fold v1 (+)k v2 (+)k ... over at least two velocities of equal dimension.
CompositionResult compose(const std::vector<VelocityVector>& velocities, std::optional<int> k);

/// Parses "x,y,..." into components. Throws std::invalid_argument.
std::vector<double> parse_components(const std::string& text);

/// Runs the command line; argv[0] is the program name. Returns the exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace menhir::cli
