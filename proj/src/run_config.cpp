#include "fracrsv/run_config.hpp"

#include <fstream>
#include <sstream>

#include "fracrsv/error.hpp"

namespace fracrsv {

SeirsParams RunConfig::params() const {
  SeirsParams p = fracrsv::preset(preset);
  p.alpha = alpha;
  return p;
}

void RunConfig::validate() const {
  check_order(alpha);
  if (!(t_final > 0.0)) throw Error(ErrorKind::InvalidGrid, "t_final must be positive");
  if (n_points < 2) throw Error(ErrorKind::InvalidGrid, "n must be at least 2");
  if (refine < 1) throw Error(ErrorKind::InvalidGrid, "refine must be at least 1");
  params().validate();
  if (scenario == Scenario::Focp) {
    if (!sweep) throw Error(ErrorKind::InvalidArgument, "focp scenario needs sweep settings");
    sweep->validate();
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::ParseError, "config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw Error(ErrorKind::ParseError, "config line " + std::to_string(lineno) + ": empty key or value");
    out[std::move(key)] = std::move(value);
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace fracrsv
