#include "fracrsv/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fracrsv/error.hpp"
#include "fracrsv/seirs.hpp"

namespace fracrsv {

std::string format_value(double v) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.9f", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

std::vector<std::string> labels_for(const Trajectory& traj) {
  if (!traj.labels().empty()) return traj.labels();
  if (traj.dimension() == 4) return state_labels();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < traj.dimension(); ++i) out.push_back("y" + std::to_string(i + 1));
  return out;
}

void append_row(std::string& out, std::initializer_list<double> head, std::span<const double> tail) {
  bool first = true;
  for (double v : head) {
    if (!first) out += ',';
    out += format_value(v);
    first = false;
  }
  for (double v : tail) {
    out += ',';
    out += format_value(v);
  }
  out += '\n';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const auto& l : labels_for(traj)) out += "," + l;
  out += '\n';
  const auto& t = traj.grid().nodes();
  for (std::size_t j = 0; j < traj.size(); ++j) append_row(out, {t[j]}, traj.at_node(j));
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "t,S,E,I,R,T,p1,p2,p3,p4\n";
  const auto& t = result.state.grid().nodes();
  for (std::size_t j = 0; j < result.state.size(); ++j) {
    std::vector<double> tail(result.state.at_node(j).begin(), result.state.at_node(j).end());
    tail.push_back(result.control[j]);
    const auto p = result.costate.at_node(j);
    tail.insert(tail.end(), p.begin(), p.end());
    append_row(out, {t[j]}, tail);
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
  write_text(path, trajectory_csv(traj));
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_text(path, sweep_csv(result));
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw Error(ErrorKind::UnknownColumn, "no column named '" + name + "'");
}

std::vector<double> CsvTable::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw Error(ErrorKind::ParseError, "CSV has no header");
  table.header = split(line);

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size())
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) +
                                             " fields, header has " + std::to_string(table.header.size()));
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& c = cells[i];
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), row[i]);
      if (ec != std::errc{} || ptr != c.data() + c.size())
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad number '" + c + "'");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

Trajectory read_trajectory_csv(const std::filesystem::path& path, double alpha) {
  const CsvTable table = read_csv(path);
  if (table.header.empty() || table.header.front() != "t")
    throw Error(ErrorKind::ParseError, "first column must be 't'");
  if (table.rows.size() < 2) throw Error(ErrorKind::ParseError, "trajectory CSV needs at least 2 rows");

  const FractionalGrid grid = make_grid(alpha, table.rows.back().front(), table.rows.size());
  std::vector<std::string> labels(table.header.begin() + 1, table.header.end());
  Trajectory traj(grid, labels.size(), labels);
  for (std::size_t j = 0; j < table.rows.size(); ++j)
    for (std::size_t i = 0; i < labels.size(); ++i) traj(i, j) = table.rows[j][i + 1];
  return traj;
}

}  // namespace fracrsv
