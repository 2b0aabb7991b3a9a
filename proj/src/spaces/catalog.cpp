#include <cstdlib>

#include "ballgeo/errors.hpp"
#include "ballgeo/spaces.hpp"
#include "internal.hpp"

namespace ballgeo {

namespace {

using Params = std::map<std::string, std::string>;

long parse_long(const std::string& key, const std::string& text) {
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') throw ParseError("parameter " + key + " expects an integer, got '" + text + "'");
  return v;
}

double parse_length(const std::string& key, const std::string& text) {
  if (text == "2pi") return detail::kTwoPi;
  if (text == "pi") return detail::kTwoPi / 2.0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') throw ParseError("parameter " + key + " expects a number, got '" + text + "'");
  return v;
}

// Defaults merged with the caller's values; unknown keys are rejected.
Params resolve(const std::string& id, const Params& defaults, const Params& given) {
  Params out = defaults;
  for (const auto& [k, v] : given) {
    if (!defaults.contains(k)) throw ParseError("model " + id + " has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> list_models() {
  return {
      {"euclidean_rn", "Euclidean space R^n (nets for n <= 2)", {Truth::yes, Truth::yes}, {{"n", "2"}}, false},
      {"taxicab_r2", "R^2 with the l1 metric", {Truth::yes, Truth::no}, {}, false},
      {"hyperbolic_plane", "hyperbolic plane, hyperboloid model", {Truth::yes, Truth::yes}, {}, false},
      {"halfplane", "closed upper half-plane, Euclidean metric", {Truth::no, Truth::yes}, {}, false},
      {"tee", "[-1, inf) x {0} union {0} x [0, 1]", {Truth::no, Truth::yes}, {{"ray", "16"}}, true},
      {"diamond", "|u|+|v|=1 with rays along the u axis", {Truth::no, Truth::no}, {{"ray", "15"}}, true},
      {"diamond_chain", "diamonds about even integers, window [-2k-1, 2k+1]", {Truth::no, Truth::no}, {{"k", "3"}},
       true},
      {"circle", "circle with its arc-length metric", {Truth::no, Truth::no}, {{"circumference", "2pi"}}, false},
      {"product_max", "X x Y with the max metric", {Truth::yes, Truth::no},
       {{"factor_x", "euclidean_r1"}, {"factor_y", "euclidean_r1"}}, false},
      {"pullback_line", "R with |psi_n(a) - psi_n(b)|, psi_n(x) = x + sin(x)/n", {Truth::yes, Truth::yes},
       {{"n", "2"}}, false},
      {"real_line", "R as a path graph with long edges", {Truth::yes, Truth::yes}, {{"half_width", "64"}}, true},
  };
}

std::shared_ptr<const ModelSpace> make_model(const std::string& id, const Params& params) {
  if (id == "euclidean_r1" || id == "euclidean_r2") {
    Params merged = params;
    merged.emplace("n", id == "euclidean_r1" ? "1" : "2");
    if (merged.at("n") != (id == "euclidean_r1" ? "1" : "2")) throw ParseError(id + " fixes n");
    return make_model("euclidean_rn", merged);
  }
  for (const auto& entry : list_models()) {
    if (entry.id != id) continue;
    Params p = resolve(id, entry.parameters, params);
    if (id == "euclidean_rn") return std::make_shared<EuclideanSpace>(static_cast<std::size_t>(parse_long("n", p["n"])));
    if (id == "taxicab_r2") return std::make_shared<TaxicabPlane>();
    if (id == "hyperbolic_plane") return std::make_shared<HyperbolicPlane>();
    if (id == "halfplane") return std::make_shared<HalfPlane>();
    if (id == "tee") return make_tee(parse_long("ray", p["ray"]));
    if (id == "diamond") return make_diamond(parse_long("ray", p["ray"]));
    if (id == "diamond_chain") return make_diamond_chain(parse_long("k", p["k"]));
    if (id == "circle") return std::make_shared<CircleSpace>(parse_length("circumference", p["circumference"]));
    if (id == "product_max") {
      if (p["factor_x"] == "product_max" || p["factor_y"] == "product_max") {
        throw Unsupported("nested products are not catalogued");
      }
      return std::make_shared<ProductMaxSpace>(make_model(p["factor_x"]), make_model(p["factor_y"]));
    }
    if (id == "pullback_line") return std::make_shared<PullbackLine>(static_cast<int>(parse_long("n", p["n"])));
    if (id == "real_line") return make_real_line_graph(parse_long("half_width", p["half_width"]));
  }
  throw ParseError("unknown model '" + id + "'");
}

}  // namespace ballgeo
