#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ballgeo/cli.hpp"
#include "ballgeo/errors.hpp"

namespace ballgeo::cli {

namespace {

const std::set<std::string> kSuites = {"lipschitz", "isometry",    "injectivity", "extendibility",
                                       "product",   "quotient",    "convergence", "lift"};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ParseError("'" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

long to_long(const std::string& key, const std::string& v) {
  long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("'" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ParseError("'" + key + "' expects true or false, got '" + v + "'");
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw ParseError("'" + key + "' must be positive");
}

// shortest round-trip form
std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key or value");
    if (!seen.insert(key).second) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");

    if (key == "model") {
      s.model = value;
    } else if (key.rfind("model.", 0) == 0) {
      s.model_params[key.substr(6)] = value;
    } else if (key == "suite") {
      s.suites = split_list(value);
      for (const auto& name : s.suites) {
        if (!kSuites.count(name)) throw ParseError("unknown suite '" + name + "'");
      }
    } else if (key == "n") {
      long n = to_long(key, value);
      if (n < 1) throw ParseError("'n' must be >= 1");
      s.sampling.n = static_cast<std::size_t>(n);
    } else if (key == "seed") {
      long seed = to_long(key, value);
      if (seed < 0) throw ParseError("'seed' must be >= 0");
      s.sampling.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "eps") {
      s.sampling.eps = to_double(key, value);
      require_positive(key, s.sampling.eps);
    } else if (key == "window") {
      s.sampling.window = to_double(key, value);
      require_positive(key, s.sampling.window);
    } else if (key == "r_max") {
      s.sampling.r_max = to_double(key, value);
      require_positive(key, s.sampling.r_max);
    } else if (key == "tolerance") {
      s.sampling.tolerance = to_double(key, value);
      require_positive(key, s.sampling.tolerance);
    } else if (key == "include_designated_witness") {
      s.sampling.include_designated = to_bool(key, value);
    } else if (key == "expect") {
      s.expect = value;
    } else if (key == "isometry") {
      s.isometry = value;
    } else if (key == "action.generator") {
      s.generator.clear();
      for (const auto& v : split_list(value)) s.generator.push_back(to_double(key, v));
      if (s.generator.empty() || s.generator.size() > Point::kCapacity) throw ParseError("bad action.generator");
    } else if (key == "action.bound") {
      s.bound = to_long(key, value);
      if (s.bound < 0) throw ParseError("'action.bound' must be >= 0");
    } else if (key == "family") {
      s.family = value;
    } else if (key == "family.indices") {
      for (const auto& v : split_list(value)) s.family_indices.push_back(static_cast<int>(to_long(key, v)));
    } else if (key == "limit.x") {
      s.limit_x = to_double(key, value);
    } else if (key == "limit.y") {
      s.limit_y = to_double(key, value);
    } else if (key == "limit.t") {
      s.limit_t = to_double(key, value);
    } else if (key == "limit.s") {
      s.limit_s = to_double(key, value);
    } else if (key == "limit.n_max") {
      s.limit_n_max = static_cast<int>(to_long(key, value));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (s.suites.empty()) throw ParseError("scenario selects no suite");
  bool needs_model = std::any_of(s.suites.begin(), s.suites.end(), [](const std::string& n) {
    return n != "quotient" && n != "convergence" && n != "lift";
  });
  if (needs_model && s.model.empty()) throw ParseError("scenario names no model");
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::map<std::string, std::string> echo(const Scenario& s) {
  std::map<std::string, std::string> out;
  if (!s.model.empty()) out["model"] = s.model;
  for (const auto& [k, v] : s.model_params) out["model." + k] = v;
  out["suite"] = join(s.suites);
  out["n"] = std::to_string(s.sampling.n);
  out["seed"] = std::to_string(s.sampling.seed);
  out["eps"] = num(s.sampling.eps);
  out["window"] = num(s.sampling.window);
  out["r_max"] = num(s.sampling.r_max);
  out["tolerance"] = num(s.sampling.tolerance);
  out["include_designated_witness"] = s.sampling.include_designated ? "true" : "false";
  if (s.expect) out["expect"] = *s.expect;
  if (!s.isometry.empty()) out["isometry"] = s.isometry;
  auto has = [&](const char* suite) { return std::find(s.suites.begin(), s.suites.end(), suite) != s.suites.end(); };
  if (has("quotient") || s.model == "quotient_line") {
    std::vector<std::string> g;
    for (double v : s.generator) g.push_back(num(v));
    out["action.generator"] = join(g);
    out["action.bound"] = std::to_string(s.bound);
  }
  if (has("convergence")) {
    out["family"] = s.family;
    std::vector<std::string> idx;
    for (int v : s.family_indices) idx.push_back(std::to_string(v));
    if (!idx.empty()) out["family.indices"] = join(idx);
    out["limit.x"] = num(s.limit_x);
    out["limit.y"] = num(s.limit_y);
    out["limit.t"] = num(s.limit_t);
    out["limit.s"] = num(s.limit_s);
    out["limit.n_max"] = std::to_string(s.limit_n_max);
  }
  return out;
}

}  // namespace ballgeo::cli
