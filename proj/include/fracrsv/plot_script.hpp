#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace fracrsv {

/// One CSV to draw from; `label` distinguishes overlaid runs in the legend
/// and may be empty for a single source.
struct PlotSource {
  std::filesystem::path csv;
  std::string label;
};

/// Builds a gnuplot script drawing each requested column of each source
/// against `t`. CSV paths and the .png image name are written relative to the
/// script's directory.
/// Throws Error{UnknownColumn} for an empty column list or a column missing
/// from any source, Error{IoError} if a source cannot be read.
std::string plot_script(std::span<const PlotSource> sources, std::span<const std::string> columns,
                        const std::filesystem::path& out_path, const std::string& title = {});

void emit_plot_script(std::span<const PlotSource> sources, std::span<const std::string> columns,
                      const std::filesystem::path& out_path, const std::string& title = {});

void emit_plot_script(const std::filesystem::path& csv_path, std::span<const std::string> columns,
                      const std::filesystem::path& out_path);

}  // namespace fracrsv
