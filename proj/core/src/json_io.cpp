#include "ctv/json_io.hpp"

#include <fstream>
#include <limits>

#include "ctv/errors.hpp"

namespace ctv {

namespace {

std::int64_t to_int64(const Int& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(std::string(what) + ": coefficient exceeds int64 range");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

json to_json(const Complex& k) {
  json facets = json::array();
  for (const auto& f : k.facets) {
    facets.push_back(f.vertices);
  }
  json j{{"num_vertices", k.num_vertices}, {"facets", facets}};
  if (k.labels) {
    json labels = json::array();
    for (const auto& l : *k.labels) {
      labels.push_back({l.row, l.col});
    }
    j["labels"] = labels;
  }
  return j;
}

Complex complex_from_json(const json& j) {
  if (!j.contains("num_vertices") || !j.contains("facets")) {
    throw ConfigError("complex: missing num_vertices or facets");
  }
  std::vector<std::vector<int>> facets;
  for (const auto& f : j.at("facets")) {
    facets.push_back(f.get<std::vector<int>>());
  }
  Complex k = make_complex(j.at("num_vertices").get<int>(), facets);
  if (j.contains("labels")) {
    std::vector<GridLabel> labels;
    for (const auto& l : j.at("labels")) {
      labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    }
    if (static_cast<int>(labels.size()) != k.num_vertices) {
      throw ConfigError("complex: labels length differs from num_vertices");
    }
    k.labels = std::move(labels);
  }
  return k;
}

json to_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [s, coeff] : c.terms()) {
    terms.push_back({{"simplex", s.vertices}, {"coeff", to_int64(coeff, "chain")}});
  }
  return {{"dim", c.dim()}, {"terms", terms}};
}

Chain chain_from_json(const json& j) {
  Chain c(j.at("dim").get<int>());
  for (const auto& t : j.at("terms")) {
    c.add(Simplex(t.at("simplex").get<std::vector<int>>()),
          Int(t.at("coeff").get<std::int64_t>()));
  }
  return c;
}

json to_json(const ColoredConfiguration& cfg) {
  json classes = json::array();
  for (const auto& cls : cfg.classes) {
    json points = json::array();
    for (const auto& p : cls) {
      json coords = json::array();
      for (const auto& q : p.coords) {
        coords.push_back(format_rational(q));
      }
      points.push_back(coords);
    }
    classes.push_back(points);
  }
  return {{"d", cfg.d}, {"classes", classes}};
}

ColoredConfiguration configuration_from_json(const json& j) {
  if (!j.contains("d") || !j.at("d").is_number_integer()) {
    throw ConfigError("configuration: missing integer field 'd'");
  }
  if (!j.contains("classes") || !j.at("classes").is_array()) {
    throw ConfigError("configuration: missing array field 'classes'");
  }
  ColoredConfiguration cfg;
  cfg.d = j.at("d").get<int>();
  if (cfg.d < 1) {
    throw ConfigError("configuration: d must be >= 1");
  }
  int ci = 0;
  for (const auto& cls : j.at("classes")) {
    std::vector<RationalPoint> points;
    int pi = 0;
    for (const auto& p : cls) {
      std::string where =
          "classes[" + std::to_string(ci) + "][" + std::to_string(pi) + "]";
      if (!p.is_array()) {
        throw ConfigError(where + ": point is not an array of rationals");
      }
      RationalPoint point;
      int ti = 0;
      for (const auto& c : p) {
        std::string field = where + "[" + std::to_string(ti) + "]";
        if (c.is_number_integer()) {
          point.coords.emplace_back(c.get<std::int64_t>());
        } else if (c.is_string()) {
          point.coords.push_back(parse_rational(c.get<std::string>(), field));
        } else {
          throw ConfigError(field + ": expected integer or 'p/q' string");
        }
        ++ti;
      }
      if (point.dim() != cfg.d) {
        throw ConfigError(where + ": point dimension " + std::to_string(point.dim()) +
                          " does not match d = " + std::to_string(cfg.d));
      }
      points.push_back(std::move(point));
      ++pi;
    }
    cfg.classes.push_back(std::move(points));
    ++ci;
  }
  if (cfg.classes.empty()) {
    throw ConfigError("configuration: no classes");
  }
  return cfg;
}

ColoredConfiguration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open configuration file: " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return configuration_from_json(j);
}

json to_json(const RainbowPartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) {
    json refs = json::array();
    for (const auto& ref : part) {
      refs.push_back({{"class", ref.cls}, {"index", ref.index}});
    }
    parts.push_back(refs);
  }
  return {{"parts", parts}};
}

json to_json(const Witness& w) {
  json point = json::array();
  for (const auto& c : w.point.coords) {
    point.push_back(format_rational(c));
  }
  json bary = json::array();
  for (const auto& part : w.barycentrics) {
    json coeffs = json::array();
    for (const auto& c : part) {
      coeffs.push_back(format_rational(c));
    }
    bary.push_back(coeffs);
  }
  return {{"point", point}, {"barycentrics", bary}};
}

json to_json(const PseudomanifoldReport& r) {
  return {{"pure", r.pure},
          {"ridge_degree_two", r.ridge_degree_two},
          {"strongly_connected", r.strongly_connected},
          {"orientable", r.orientable}};
}

json to_json(const CollapseReport& r) {
  return {{"valid", r.valid},
          {"pairs", r.pairs},
          {"equivariant", r.equivariant},
          {"residual_dimension", r.residual_dimension}};
}

json to_json(const BoundaryRelationReport& r) {
  json mism = json::array();
  for (const auto& s : r.mismatches) {
    mism.push_back(s.vertices);
  }
  return {{"phi_identity", r.phi_identity},
          {"omega_identities", r.omega_identity},
          {"mismatches", mism}};
}

json to_json(const SignClaimReport& r) {
  json failures = json::array();
  for (const auto& [i, j] : r.failures) {
    failures.push_back({i, j});
  }
  return {{"fixed_row_claim", r.fixed_row_claim},
          {"swap_claim", r.swap_claim},
          {"failures", failures}};
}

json to_json(const HCheckReport& r) {
  json h_theta = json::array();
  for (const auto& v : r.h_theta) {
    h_theta.push_back(to_int64(v, "h_theta"));
  }
  json h_diag = json::array();
  for (const auto& v : r.h_theta_diag) {
    h_diag.push_back(to_int64(v, "h_theta_diag"));
  }
  return {{"h_magnitude", to_int64(r.h_magnitude, "h_magnitude")},
          {"h_theta", h_theta},
          {"h_theta_diag", h_diag},
          {"boundary_decomposition_ok", r.boundary_decomposition_ok},
          {"h_dphi_matches", r.h_dphi_matches},
          {"h_domega_zero", r.h_domega_zero},
          {"cocycle_evaluated", r.cocycle_evaluated},
          {"cocycle_matches", r.cocycle_matches},
          {"passed", r.all()}};
}

json to_json(const TrialReport& r) {
  json failing = json::array();
  for (const auto& cfg : r.failing_configs) {
    failing.push_back(to_json(cfg));
  }
  return {{"successes", r.successes},
          {"failures", r.failures},
          {"route", r.route},
          {"failing_configs", failing}};
}

json to_json(const ObstructionVerdict& v) {
  json omegas = json::array();
  for (const auto& w : v.omega_values) {
    omegas.push_back(to_int64(w, "omega_value"));
  }
  return {{"d", v.d},
          {"r", v.r},
          {"phi_value", v.phi_value.str()},
          {"omega_values", omegas},
          {"divides", v.divides},
          {"extension_exists", v.extension_exists},
          {"evaluated", v.evaluated},
          {"facets_evaluated", v.facets_evaluated},
          {"nonzero_facets", v.nonzero_facets},
          {"nonzero_last_row_r", v.nonzero_last_row_r}};
}

}  // namespace ctv
