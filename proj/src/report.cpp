#include "fracrsv/report.hpp"

#include <cstdio>

#include "fracrsv/csv.hpp"
#include "fracrsv/seirs.hpp"

namespace fracrsv {

namespace {

NormTable make_table(std::string method, const Trajectory& run, const Trajectory& reference) {
  std::vector<std::string> comps = run.labels().empty() && run.dimension() == 4 ? state_labels() : run.labels();
  return {std::move(method), std::move(comps), diff_norms(reference, run)};
}

constexpr const char* kNormNames[] = {"L1", "L2", "Linf"};

double pick(const NormRecord& r, int which) { return which == 0 ? r.l1 : which == 1 ? r.l2 : r.linf; }

std::string cell(const char* fmt, auto value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

CompareReport compare_report(const Trajectory& euler, const Trajectory& pece, const Trajectory& reference) {
  return {make_table("euler", euler, reference), make_table("pece", pece, reference)};
}

std::string CompareReport::text() const {
  std::string out;
  for (const NormTable* t : {&euler, &pece}) {
    out += "|reference - " + t->method + "|\n";
    out += cell("%-6s", "norm");
    for (const auto& c : t->components) out += cell("%15s", c.c_str());
    out += '\n';
    for (int k = 0; k < 3; ++k) {
      out += cell("%-6s", kNormNames[k]);
      for (const auto& r : t->norms) out += cell("%15.6g", pick(r, k));
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string CompareReport::csv() const {
  std::string out = "method,norm";
  for (const auto& c : euler.components) out += "," + c;
  out += '\n';
  for (const NormTable* t : {&euler, &pece}) {
    for (int k = 0; k < 3; ++k) {
      out += t->method + "," + kNormNames[k];
      for (const auto& r : t->norms) out += "," + format_value(pick(r, k));
      out += '\n';
    }
  }
  return out;
}

}  // namespace fracrsv
