#include "fracrsv/plot_script.hpp"

#include <fstream>

#include "fracrsv/csv.hpp"
#include "fracrsv/error.hpp"

namespace fracrsv {

namespace {

std::vector<std::string> read_header(const std::filesystem::path& csv) {
  std::ifstream in(csv);
  std::string line;
  if (!in || !std::getline(in, line)) throw Error(ErrorKind::IoError, "cannot read header of '" + csv.string() + "'");
  return parse_csv(line + "\n").header;
}

std::string gp_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

// Paths inside the script are relative to the script's directory, so the
// output folder can be moved and rendered with `cd dir && gnuplot x.gp`.
std::string relative_to(const std::filesystem::path& file, const std::filesystem::path& dir) {
  const auto rel = file.lexically_relative(dir.empty() ? std::filesystem::path(".") : dir);
  return rel.empty() ? file.generic_string() : rel.generic_string();
}

}  // namespace

std::string plot_script(std::span<const PlotSource> sources, std::span<const std::string> columns,
                        const std::filesystem::path& out_path, const std::string& title) {
  if (columns.empty()) throw Error(ErrorKind::UnknownColumn, "no columns selected for plotting");
  if (sources.empty()) throw Error(ErrorKind::InvalidArgument, "no CSV sources given");

  std::vector<std::string> curves;
  for (const auto& src : sources) {
    CsvTable header_only{read_header(src.csv), {}};
    const std::size_t t_col = header_only.column_index("t") + 1;
    for (const auto& col : columns) {
      const std::size_t c = header_only.column_index(col) + 1;
      std::string name = col + "(t)";
      if (!src.label.empty()) name += " " + src.label;
      curves.push_back(gp_quote(relative_to(src.csv, out_path.parent_path())) + " using " + std::to_string(t_col) + ":" + std::to_string(c) +
                       " with lines lw 2 title " + gp_quote(name));
    }
  }

  std::filesystem::path image = out_path.filename();
  image.replace_extension(".png");

  std::string s;
  s += "set datafile separator ','\n";
  s += "set terminal pngcairo size 900,600\n";
  s += "set output " + gp_quote(image.generic_string()) + "\n";
  if (!title.empty()) s += "set title " + gp_quote(title) + "\n";
  s += "set xlabel 'time (years)'\n";
  s += "set key outside right\n";
  s += "set grid\n";
  s += "plot ";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (i) s += ", \\\n     ";
    s += curves[i];
  }
  s += "\n";
  return s;
}

void emit_plot_script(std::span<const PlotSource> sources, std::span<const std::string> columns,
                      const std::filesystem::path& out_path, const std::string& title) {
  write_text(out_path, plot_script(sources, columns, out_path, title));
}

void emit_plot_script(const std::filesystem::path& csv_path, std::span<const std::string> columns,
                      const std::filesystem::path& out_path) {
  const PlotSource src{csv_path, {}};
  emit_plot_script(std::span(&src, 1), columns, out_path);
}

}  // namespace fracrsv
