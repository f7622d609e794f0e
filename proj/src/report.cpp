#include "spinlf/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace spinlf {

namespace {

using json = nlohmann::ordered_json;

json series_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(c.str());
  return arr;
}

json comparison_json(const Comparison& cmp) {
  json j;
  j["label"] = cmp.label;
  j["pass"] = cmp.pass;
  json rows = json::array();
  for (const auto& row : cmp.coefficients) {
    json r;
    r["index"] = row.index;
    r["lhs"] = row.lhs.str();
    r["rhs"] = row.rhs.str();
    r["equal"] = row.equal;
    rows.push_back(std::move(r));
  }
  j["coefficients"] = std::move(rows);
  if (!cmp.strata.empty()) {
    json rows2 = json::array();
    for (const auto& row : cmp.strata) {
      json r;
      r["stratum"] = row.stratum;
      r["zeta"] = row.zeta.str();
      r["implied"] = row.implied.str();
      r["equal"] = row.equal;
      rows2.push_back(std::move(r));
    }
    j["delta_strata"] = std::move(rows2);
  }
  return j;
}

json report_json(const VerificationReport& rep) {
  json j;
  j["schema"] = 1;
  j["kind"] = rep.kind;
  j["case"] = rep.case_name;
  j["n"] = rep.n;
  j["m"] = rep.m;
  if (rep.kind == "symalg") j["r"] = rep.r;
  j["order"] = rep.order;
  if (rep.seed) j["seed"] = *rep.seed;
  json params = json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["mu_exponent"] = rep.mu_exponent;
  json cmps = json::array();
  for (const auto& cmp : rep.comparisons) cmps.push_back(comparison_json(cmp));
  j["comparisons"] = std::move(cmps);
  j["primary"] = rep.primary;
  j["pass"] = rep.pass;
  if (rep.whittaker_consistent) j["whittaker_consistent"] = *rep.whittaker_consistent;
  if (!rep.validated_exponents.empty()) j["validated_exponents"] = rep.validated_exponents;
  if (!rep.extra_series.empty()) {
    json extra = json::object();
    for (const auto& [k, v] : rep.extra_series) extra[k] = series_json(v);
    j["extra_series"] = std::move(extra);
  }
  j["notes"] = rep.notes;
  return j;
}

}  // namespace

std::string exponent_name(MuExponent e) {
  return e == MuExponent::HalfTrace ? "tr(delta)/2" : "tr(delta)";
}

std::string render_json(const VerificationReport& report) { return report_json(report).dump(2); }

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.kind << " " << report.case_name << " n=" << report.n << " m=" << report.m;
  if (report.kind == "symalg") out << " r=" << report.r;
  out << " order=" << report.order;
  if (report.seed) out << " seed=" << *report.seed;
  out << "\n";
  for (const auto& [k, v] : report.parameters) out << "  " << k << " = " << v << "\n";
  out << "  mu exponent: " << report.mu_exponent << "\n";
  for (const auto& cmp : report.comparisons) {
    out << "  [" << (cmp.pass ? "pass" : "FAIL") << "] " << cmp.label << "\n";
    for (const auto& row : cmp.coefficients) {
      if (row.equal) continue;
      out << "    T^" << row.index << ": lhs " << row.lhs.str() << " != rhs " << row.rhs.str()
          << "\n";
    }
    for (const auto& row : cmp.strata) {
      if (row.equal) continue;
      out << "    delta-stratum " << row.stratum << ": zeta " << row.zeta.str() << " != implied "
          << row.implied.str() << "\n";
    }
  }
  if (report.whittaker_consistent)
    out << "  whittaker route consistent: " << (*report.whittaker_consistent ? "yes" : "NO")
        << "\n";
  if (!report.validated_exponents.empty()) {
    out << "  validated exponents:";
    for (const auto& e : report.validated_exponents) out << " " << e;
    out << "\n";
  }
  for (const auto& [label, coeffs] : report.extra_series) {
    out << "  " << label << ":";
    for (const auto& c : coeffs) out << " " << c.str();
    out << "\n";
  }
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  out << "  verdict: " << (report.pass ? "pass" : "FAIL") << " (primary: " << report.primary
      << ")\n";
  return out.str();
}

std::string render_json(const SweepReport& report) {
  json j;
  j["schema"] = 1;
  j["kind"] = "sweep";
  json runs = json::array();
  for (const auto& [key, rep] : report.runs) {
    json entry;
    entry["key"] = key;
    entry["report"] = report_json(rep);
    runs.push_back(std::move(entry));
  }
  j["runs"] = std::move(runs);
  j["all_pass"] = report.all_pass;
  return j.dump(2);
}

std::string render_text(const SweepReport& report) {
  std::ostringstream out;
  for (const auto& [key, rep] : report.runs)
    out << (rep.pass ? "pass " : "FAIL ") << key << "\n";
  out << (report.all_pass ? "all pass" : "failures present") << "\n";
  return out.str();
}

}  // namespace spinlf
