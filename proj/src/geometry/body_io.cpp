#include "hyperarea/geometry/body_io.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/geometry/polytope.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hyperarea::geometry {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Draft {
  std::string type, id;
  int line = 0;
  std::optional<int> dimension, n, subdivision;
  std::optional<double> radius, height;
  std::vector<double> center;
  std::vector<std::vector<double>> vertices;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigurationError("body file line " + std::to_string(line) + ": " + message);
}

std::vector<double> numbers(std::istringstream& in, int line) {
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) fail(line, "bad number '" + token + "'");
    } catch (const std::logic_error&) {
      fail(line, "bad number '" + token + "'");
    }
  }
  return out;
}

BodyPtr build(const Draft& d) {
  const std::string id = d.id.empty() ? d.type : d.id;
  try {
    if (d.type == "sphere") {
      if (!d.dimension || !d.radius) fail(d.line, "sphere needs dimension and radius");
      std::optional<Vec> center;
      if (!d.center.empty()) {
        center = Vec(d.center.size());
        for (size_t i = 0; i < d.center.size(); ++i) (*center)[i] = d.center[i];
      }
      return std::make_shared<SphereBody>(*d.dimension, *d.radius, center, id);
    }
    if (d.type == "cylinder") {
      if (!d.n || !d.radius || !d.height) fail(d.line, "cylinder needs n, radius and height");
      return std::make_shared<CylinderBody>(*d.n, *d.radius, *d.height, id);
    }
    if (d.type == "polygon") {
      std::vector<Eigen::Vector2d> v;
      for (const auto& p : d.vertices) {
        if (p.size() != 2) fail(d.line, "polygon vertices need 2 coordinates");
        v.emplace_back(p[0], p[1]);
      }
      return std::make_shared<PolygonBoundary>(std::move(v), id);
    }
    if (d.type == "polytope") {
      std::vector<Point3> v;
      for (const auto& p : d.vertices) {
        if (p.size() != 3) fail(d.line, "polytope vertices need 3 coordinates");
        v.emplace_back(p[0], p[1], p[2]);
      }
      return std::make_shared<Polytope3>(v, d.subdivision.value_or(8), id);
    }
  } catch (const DomainError& e) {
    fail(d.line, e.what());
  }
  fail(d.line, "unknown body type '" + d.type + "'");
}

}  // namespace

std::vector<BodyPtr> parse_bodies(std::istream& in) {
  std::vector<BodyPtr> out;
  std::optional<Draft> draft;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string key;
    if (!(words >> key)) continue;
    if (key == "body") {
      if (draft) fail(line, "missing 'end' before new body");
      draft = Draft{};
      draft->line = line;
      if (!(words >> draft->type)) fail(line, "body needs a type");
      continue;
    }
    if (!draft) fail(line, "'" + key + "' outside a body block");
    if (key == "end") {
      out.push_back(build(*draft));
      draft.reset();
      continue;
    }
    if (key == "id") {
      if (!(words >> draft->id)) fail(line, "id needs a value");
      continue;
    }
    const std::vector<double> values = numbers(words, line);
    auto single = [&]() {
      if (values.size() != 1) fail(line, "'" + key + "' takes one value");
      return values[0];
    };
    auto integer = [&]() {
      const double v = single();
      if (v != static_cast<int>(v)) fail(line, "'" + key + "' must be an integer");
      return static_cast<int>(v);
    };
    if (key == "vertex") draft->vertices.push_back(values);
    else if (key == "center") draft->center = values;
    else if (key == "radius") draft->radius = single();
    else if (key == "height") draft->height = single();
    else if (key == "dimension") draft->dimension = integer();
    else if (key == "n") draft->n = integer();
    else if (key == "subdivision") draft->subdivision = integer();
    else fail(line, "unknown key '" + key + "'");
  }
  if (draft) fail(line, "missing 'end' at end of file");
  return out;
}

std::vector<BodyPtr> read_body_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open body file " + path.string());
  return parse_bodies(in);
}

std::string format_body(const ConvexBody& body) {
  std::ostringstream out;
  out << "body " << body.type_name() << "\nid " << body.id() << "\n";
  if (const auto* s = dynamic_cast<const SphereBody*>(&body)) {
    out << "dimension " << s->ambient_dimension() << "\nradius " << num(s->radius()) << "\ncenter";
    for (int i = 0; i < s->center().size(); ++i) out << ' ' << num(s->center()[i]);
    out << '\n';
  } else if (const auto* c = dynamic_cast<const CylinderBody*>(&body)) {
    out << "n " << c->n() << "\nradius " << num(c->base_radius()) << "\nheight " << num(c->height()) << '\n';
  } else if (const auto* p = dynamic_cast<const PolygonBoundary*>(&body)) {
    for (const auto& v : p->vertices()) out << "vertex " << num(v.x()) << ' ' << num(v.y()) << '\n';
  } else if (const auto* t = dynamic_cast<const Polytope3*>(&body)) {
    out << "subdivision " << t->subdivision() << '\n';
    for (const auto& v : t->vertices()) out << "vertex " << num(v.x()) << ' ' << num(v.y()) << ' ' << num(v.z()) << '\n';
  } else {
    throw ConfigurationError("body type " + body.type_name() + " has no text format");
  }
  out << "end\n";
  return out.str();
}

BodyPtr named_body(std::string_view name, int subdivision) {
  if (name == "unit_sphere") return std::make_shared<SphereBody>(3, 1.0, std::nullopt, "unit_sphere");
  if (name == "sphere4") return std::make_shared<SphereBody>(4, 1.0, std::nullopt, "sphere4");
  if (name == "cube") return std::make_shared<Polytope3>(Polytope3::cube(1, subdivision, "cube"));
  if (name == "tetrahedron") return std::make_shared<Polytope3>(Polytope3::regular_tetrahedron(1, subdivision, "tetrahedron"));
  if (name == "triangle") return std::make_shared<PolygonBoundary>(PolygonBoundary::equilateral_triangle(1, "triangle"));
  if (name == "hexagon") return std::make_shared<PolygonBoundary>(PolygonBoundary::regular(6, 6, "hexagon"));
  if (name == "cylinder_rho20") return std::make_shared<CylinderBody>(CylinderBody::from_rho(2, 20, "cylinder_rho20"));
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = name.substr(0, colon);
    const std::string seed_text(name.substr(colon + 1));
    std::uint64_t seed = 0;
    try {
      size_t used = 0;
      seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument(seed_text);
    } catch (const std::logic_error&) {
      throw ConfigurationError("bad seed in body name '" + std::string(name) + "'");
    }
    PolytopeShape shape;
    if (family == "random") shape = PolytopeShape::round;
    else if (family == "cigar") shape = PolytopeShape::cigar;
    else if (family == "pancake") shape = PolytopeShape::pancake;
    else throw ConfigurationError("unknown body family '" + std::string(family) + "'");
    return std::make_shared<Polytope3>(random_polytope(seed, 24, shape, subdivision));
  }
  throw ConfigurationError("unknown body '" + std::string(name) + "'");
}

}  // namespace hyperarea::geometry
