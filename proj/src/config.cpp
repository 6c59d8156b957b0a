#include "arcwave/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace arcwave {

namespace {

using json = nlohmann::json;

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

std::size_t count(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string text(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field, "expected a string");
  return v.get<std::string>();
}

bool flag(const json& v, const std::string& field) {
  if (!v.is_boolean()) throw ConfigError(field, "expected true or false");
  return v.get<bool>();
}

// Scalars are accepted wherever a list is.
template <class T, class F>
std::vector<T> list(const json& v, const std::string& field, F&& item) {
  std::vector<T> out;
  if (v.is_array()) {
    if (v.empty()) throw ConfigError(field, "list is empty");
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(item(v[k], field + "[" + std::to_string(k) + "]"));
  } else {
    out.push_back(item(v, field));
  }
  return out;
}

void parse_geometry(const json& g, GeometryConfig& c) {
  if (!g.is_object()) throw ConfigError("geometry", "expected an object");
  if (auto v = find(g, "name")) c.name = text(*v, "geometry.name");
  if (auto v = find(g, "param")) c.param = number(*v, "geometry.param");
  if (auto v = find(g, "reverse_normal")) c.reverse_normal = flag(*v, "geometry.reverse_normal");
  try {
    parse_preset(c.name);
  } catch (const std::exception&) {
    throw ConfigError("geometry.name", "unknown preset '" + c.name + "'");
  }
  if (c.param <= 0.0) throw ConfigError("geometry.param", "must be positive");
}

void parse_incident(const json& i, IncidentConfig& c) {
  if (!i.is_object()) throw ConfigError("incident", "expected an object");
  if (auto v = find(i, "kind")) {
    const std::string k = text(*v, "incident.kind");
    if (k == "plane") c.kind = IncidentConfig::Kind::plane;
    else if (k == "point") c.kind = IncidentConfig::Kind::point;
    else throw ConfigError("incident.kind", "expected 'plane' or 'point'");
  }
  if (auto v = find(i, "angle")) c.angle = number(*v, "incident.angle");
  if (auto v = find(i, "z0")) {
    if (!v->is_array() || v->size() != 2) throw ConfigError("incident.z0", "expected [x1, x2]");
    c.z0 = Vec2(number((*v)[0], "incident.z0[0]"), number((*v)[1], "incident.z0[1]"));
  }
}

FieldGridConfig parse_field(const json& f) {
  if (!f.is_object()) throw ConfigError("field", "expected an object");
  FieldGridConfig c;
  auto axis = [&](const char* key, double& lo, double& hi, std::size_t& n) {
    const std::string name = std::string("field.") + key;
    auto v = find(f, key);
    if (!v) return;
    if (!v->is_array() || v->size() != 3) throw ConfigError(name, "expected [min, max, count]");
    lo = number((*v)[0], name + "[0]");
    hi = number((*v)[1], name + "[1]");
    n = count((*v)[2], name + "[2]");
    if (n == 0 || (n > 1 && !(hi > lo))) throw ConfigError(name, "needs count >= 1 and max > min");
  };
  axis("x", c.x_min, c.x_max, c.nx);
  axis("y", c.y_min, c.y_max, c.ny);
  return c;
}

void validate_material(const RunConfig& c) {
  const MaterialConfig& m = c.material;
  if (!(m.mu > 0.0)) throw ConfigError("material.mu", "must satisfy mu > 0");
  if (!(m.lambda + m.mu > 0.0)) throw ConfigError("material.lambda", "must satisfy lambda + mu > 0");
  if (!(m.rho > 0.0)) throw ConfigError("material.rho", "must satisfy rho > 0");
  for (std::size_t k = 0; k < c.omega.size(); ++k)
    if (!(c.omega[k] > 0.0)) throw ConfigError("omega[" + std::to_string(k) + "]", "must be positive");
}

}  // namespace

Material RunConfig::material_at(double w) const { return make_material(material.lambda, material.mu, material.rho, w); }

ArcGeometry RunConfig::curve() const {
  ArcGeometry g = preset_geometry(geometry.name, geometry.param);
  return geometry.reverse_normal ? g.reversed() : g;
}

ElasticField RunConfig::incident_field(const Material& m) const {
  return incident.kind == IncidentConfig::Kind::point ? point_source_field(m, incident.z0)
                                                      : incident_plane_pwave(m, incident.angle);
}

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config", "top level must be an object");

  RunConfig c;
  if (auto v = find(root, "geometry")) parse_geometry(*v, c.geometry);
  if (auto v = find(root, "material")) {
    if (!v->is_object()) throw ConfigError("material", "expected an object");
    if (auto x = find(*v, "lambda")) c.material.lambda = number(*x, "material.lambda");
    if (auto x = find(*v, "mu")) c.material.mu = number(*x, "material.mu");
    if (auto x = find(*v, "rho")) c.material.rho = number(*x, "material.rho");
  }
  if (auto v = find(root, "omega")) c.omega = list<double>(*v, "omega", number);
  if (auto v = find(root, "incident")) parse_incident(*v, c.incident);
  if (auto v = find(root, "formulation")) {
    if (v->is_string() && v->get<std::string>() == "all") {
      c.formulations.assign(std::begin(kAllFormulations), std::end(kAllFormulations));
    } else {
      c.formulations = list<Formulation>(*v, "formulation", [](const json& x, const std::string& field) {
        const std::string s = text(x, field);
        try {
          return parse_formulation(s);
        } catch (const std::exception&) {
          throw ConfigError(field, "unknown formulation '" + s + "'");
        }
      });
    }
  }
  if (auto v = find(root, "N")) c.n = list<std::size_t>(*v, "N", count);
  for (std::size_t k = 0; k < c.n.size(); ++k)
    if (c.n[k] < 4) throw ConfigError("N[" + std::to_string(k) + "]", "must be at least 4");
  if (auto v = find(root, "n_per_omega")) {
    c.n_per_omega = number(*v, "n_per_omega");
    if (!(c.n_per_omega > 0.0)) throw ConfigError("n_per_omega", "must be positive");
  }
  if (auto v = find(root, "reference_N")) {
    c.reference_n = count(*v, "reference_N");
    if (*c.reference_n < 4) throw ConfigError("reference_N", "must be at least 4");
  }
  if (auto v = find(root, "gmres")) {
    if (!v->is_object()) throw ConfigError("gmres", "expected an object");
    if (auto x = find(*v, "tol")) c.tol = number(*x, "gmres.tol");
    if (auto x = find(*v, "maxit")) c.maxit = count(*x, "gmres.maxit");
    if (auto x = find(*v, "reference_tol")) c.reference_tol = number(*x, "gmres.reference_tol");
  }
  if (!(c.tol > 0.0 && c.tol < 1.0)) throw ConfigError("gmres.tol", "must lie in (0, 1)");
  if (!(c.reference_tol > 0.0 && c.reference_tol < 1.0)) throw ConfigError("gmres.reference_tol", "must lie in (0, 1)");
  if (auto v = find(root, "output")) {
    if (!v->is_object()) throw ConfigError("output", "expected an object");
    if (auto x = find(*v, "dir")) c.output_dir = text(*x, "output.dir");
  }
  if (auto v = find(root, "field")) c.field = parse_field(*v);
  if (auto v = find(root, "spectrum")) {
    if (!v->is_object()) throw ConfigError("spectrum", "expected an object");
    if (auto x = find(*v, "operator")) c.spectrum.op = text(*x, "spectrum.operator");
    if (auto x = find(*v, "cluster_radius")) c.spectrum.cluster_radius = number(*x, "spectrum.cluster_radius");
  }
  if (auto v = find(root, "strip_limit")) {
    if (!v->is_object()) throw ConfigError("strip_limit", "expected an object");
    if (auto x = find(*v, "a")) c.strip_limit.a = list<double>(*x, "strip_limit.a", number);
    if (auto x = find(*v, "n_ellipse")) c.strip_limit.n_ellipse = count(*x, "strip_limit.n_ellipse");
    if (auto x = find(*v, "n_strip")) c.strip_limit.n_strip = count(*x, "strip_limit.n_strip");
    if (auto x = find(*v, "directions")) c.strip_limit.directions = count(*x, "strip_limit.directions");
    for (std::size_t k = 0; k < c.strip_limit.a.size(); ++k)
      if (!(c.strip_limit.a[k] > 0.0)) throw ConfigError("strip_limit.a[" + std::to_string(k) + "]", "must be positive");
    if (c.strip_limit.n_ellipse < 4) throw ConfigError("strip_limit.n_ellipse", "must be at least 4");
    if (c.strip_limit.n_strip < 4) throw ConfigError("strip_limit.n_strip", "must be at least 4");
    if (c.strip_limit.directions == 0) throw ConfigError("strip_limit.directions", "must be positive");
  }
  validate_material(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace arcwave
