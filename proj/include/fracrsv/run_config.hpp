#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "fracrsv/seirs.hpp"
#include "fracrsv/sweep.hpp"

namespace fracrsv {

enum class Scenario { Simulate, Compare, Focp, Equilibrium };
enum class Method { Euler, Pece };

struct RunConfig {
  Scenario scenario = Scenario::Simulate;
  Method method = Method::Pece;
  double alpha = 0.995;
  std::size_t n_points = 400;
  double t_final = 5.0;
  std::string preset = "florida-default";
  std::size_t refine = 4;
  std::optional<SweepConfig> sweep;
  std::filesystem::path output_dir = ".";

  /// Preset parameters with this run's alpha applied.
  SeirsParams params() const;
  /// Throws Error{InvalidOrder}, Error{InvalidGrid} or Error{InvalidArgument}.
  void validate() const;
};

/// Flat `key = value` file: one entry per line, `#` starts a comment, blank
/// lines ignored. Throws Error{ParseError} with the line number.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

}  // namespace fracrsv
