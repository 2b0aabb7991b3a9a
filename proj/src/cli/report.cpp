#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ballgeo/cli.hpp"
#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"

namespace ballgeo::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "ballgeo.report";

// JSON has no infinities; they travel as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  if (s == "nan") return std::nan("");
  throw ParseError("bad number '" + s + "' in report");
}

json to_json(const Witness& w) {
  json values = json::object();
  for (const auto& [k, v] : w.values) values[k] = number(v);
  return {{"description", w.description}, {"values", values}, {"exact", w.exact}};
}

Witness witness_from(const json& j) {
  Witness w;
  w.description = j.at("description").get<std::string>();
  for (const auto& [k, v] : j.at("values").items()) w.values[k] = number(v);
  w.exact = j.at("exact").get<std::map<std::string, std::string>>();
  return w;
}

json to_json(const SuiteResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  json j = {{"suite", r.suite},
            {"model", r.model},
            {"theorem", r.theorem},
            {"verdict", r.verdict},
            {"expected", r.expected},
            {"matches", r.matches},
            {"samples", r.samples},
            {"max_deviation", number(r.max_deviation)},
            {"tolerance", number(r.tolerance)},
            {"exact", r.exact},
            {"details", r.details},
            {"witnesses", witnesses}};
  if (r.runtime_s) j["runtime_s"] = *r.runtime_s;
  return j;
}

SuiteResult result_from(const json& j) {
  SuiteResult r;
  r.suite = j.at("suite").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.theorem = j.at("theorem").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.expected = j.at("expected").get<std::vector<std::string>>();
  r.matches = j.at("matches").get<bool>();
  r.samples = j.at("samples").get<std::size_t>();
  r.max_deviation = number(j.at("max_deviation"));
  r.tolerance = number(j.at("tolerance"));
  r.exact = j.at("exact").get<bool>();
  r.details = j.at("details").get<std::map<std::string, std::string>>();
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from(w));
  if (j.contains("runtime_s")) r.runtime_s = j.at("runtime_s").get<double>();
  return r;
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string text(const VerificationReport& report) {
  std::ostringstream out;
  out << "scenario:";
  for (const auto& [k, v] : report.scenario) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& r : report.results) {
    out << "\n[" << r.suite << "] " << r.model << "  (" << r.theorem << ")\n";
    out << "  verdict: " << r.verdict;
    if (r.expected.empty()) {
      out << " (no expectation)\n";
    } else {
      out << " (expected " << join(r.expected, " or ") << ") " << (r.matches ? "ok" : "MISMATCH") << "\n";
    }
    out << "  samples: " << r.samples << "  max deviation: " << g6(r.max_deviation)
        << "  tolerance: " << g6(r.tolerance) << (r.exact ? "  exact" : "") << "\n";
    if (r.runtime_s) out << "  runtime: " << g6(*r.runtime_s) << " s\n";
    for (const auto& [k, v] : r.details) out << "  " << k << ": " << v << "\n";
    for (const auto& w : r.witnesses) {
      out << "  witness: " << w.description;
      for (const auto& [k, v] : w.values) out << "  " << k << "=" << g6(v);
      for (const auto& [k, v] : w.exact) out << "  " << k << "(exact)=" << v;
      out << "\n";
    }
  }
  out << "\n" << (report.expectations_met ? "all expectations met" : "expectation mismatch") << "\n";
  return out.str();
}

}  // namespace

std::string emit(const VerificationReport& report, const std::string& format) {
  if (format == "text") return text(report);
  if (format != "json") throw ParseError("unknown format '" + format + "'");
  json results = json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  json j = {{"schema", kSchema},
            {"schema_version", report.schema_version},
            {"scenario", report.scenario},
            {"results", results},
            {"expectations_met", report.expectations_met}};
  return j.dump(2) + "\n";
}

VerificationReport parse_report(const std::string& text) {
  try {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kSchema) throw ParseError("not a ballgeo report");
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw ParseError("unsupported schema version " + std::to_string(r.schema_version));
    }
    r.scenario = j.at("scenario").get<std::map<std::string, std::string>>();
    for (const auto& res : j.at("results")) r.results.push_back(result_from(res));
    r.expectations_met = j.at("expectations_met").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_models(const std::string& format) {
  auto models = list_models();
  if (format == "json") {
    json arr = json::array();
    for (const auto& m : models) {
      arr.push_back({{"id", m.id},
                     {"description", m.description},
                     {"strongly_geodesically_complete", to_string(m.truth.strongly_geodesically_complete)},
                     {"unique_midpoints", to_string(m.truth.unique_midpoints)},
                     {"parameters", m.parameters},
                     {"exact", m.exact}});
    }
    return json{{"schema", "ballgeo.models"}, {"schema_version", kSchemaVersion}, {"models", arr}}.dump(2) + "\n";
  }
  if (format != "text") throw ParseError("unknown format '" + format + "'");
  std::ostringstream out;
  for (const auto& m : models) {
    out << m.id << "  sgc=" << to_string(m.truth.strongly_geodesically_complete)
        << " unique_midpoints=" << to_string(m.truth.unique_midpoints) << (m.exact ? " exact" : "");
    for (const auto& [k, v] : m.parameters) out << " " << k << "=" << v;
    out << "  " << m.description << "\n";
  }
  return out.str();
}

}  // namespace ballgeo::cli
