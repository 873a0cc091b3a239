#include "hyperarea/verify.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/parallel.hpp"
#include "hyperarea/random.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <memory>

namespace hyperarea::verify {

namespace {

using geometry::BodyPtr;
using geometry::MapKind;
using Task = std::function<std::vector<VerificationRecord>()>;

VerificationRecord error_record(std::string theorem, std::string body, std::optional<std::string> map, const std::exception& e) {
  VerificationRecord r;
  r.theorem_id = std::move(theorem);
  r.body_id = std::move(body);
  r.map_id = std::move(map);
  r.status = Status::error;
  r.bound_orientation_notes = std::string("error: ") + e.what();
  return r;
}

DisplacementMap make_map(MapKind kind) {
  switch (kind) {
    case MapKind::central_point: return DisplacementMap::central_point();
    case MapKind::euclidean_antipode: return DisplacementMap::euclidean_antipode();
    case MapKind::half_perimeter: return DisplacementMap::half_perimeter();
    case MapKind::custom: break;
  }
  throw ConfigurationError("the suite has no custom maps");
}

bool applies(const DisplacementMap& map, const geometry::ConvexBody& body) {
  try {
    map.check_applicable(body);
    return true;
  } catch (const ConfigurationError&) {
    return false;
  }
}

std::vector<std::shared_ptr<const geometry::PolygonBoundary>> crofton_polygons() {
  using geometry::PolygonBoundary;
  return {
      std::make_shared<PolygonBoundary>(PolygonBoundary::equilateral_triangle(1, "crofton_triangle")),
      std::make_shared<PolygonBoundary>(PolygonBoundary::regular(4, 4, "crofton_square")),
      std::make_shared<PolygonBoundary>(PolygonBoundary::regular(5, 5, "crofton_pentagon")),
      std::make_shared<PolygonBoundary>(PolygonBoundary::regular(6, 6, "crofton_hexagon")),
      std::make_shared<PolygonBoundary>(PolygonBoundary(
          {{0, 0}, {3, 0}, {4, 1}, {2, 2.5}, {-0.5, 1}}, "crofton_irregular")),
  };
}

std::vector<VerificationRecord> body_map_checks(const geometry::ConvexBody& body, const DisplacementMap& map,
                                                const SuiteConfig& config) {
  const std::string key = body.id() + "|" + map.id();
  const std::uint64_t seed = random::substream_seed(config.seed, key);
  const auto stats = geometry::displacement_stats(body, map, config.samples, seed);
  const int n = body.surface_dimension();

  std::vector<VerificationRecord> out;
  auto guarded = [&](std::string theorem, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.push_back(error_record(std::move(theorem), body.id(), map.id(), e));
    }
  };
  if (n >= 2) {
    guarded("thm_1_1", [&] { out.push_back(check_main_theorem(body, map, stats, config.kind)); });
    guarded("cor_3_2", [&] { out.push_back(check_area_via_isoperimetric(body, map, stats, config.kind)); });
    guarded("prop_4_1", [&] { out.push_back(check_envelope(body, map, stats, config.kind)); });
    guarded("prop_2_1", [&] {
      for (auto& r : check_point_pair_bound(body, stats.argmax_point, map(body, stats.argmax_point), map.id())) {
        r.seed = seed;
        out.push_back(std::move(r));
      }
    });
  }
  guarded("prop_3_1", [&] { out.push_back(check_volume_bound(body, map, stats, config.kind)); });
  guarded("thm_1_4", [&] {
    out.push_back(check_mean_width(body, map, stats, config.samples, random::substream_seed(config.seed, key, 1)));
  });
  if (map.is_involution()) guarded("prop_b_1", [&] { out.push_back(check_involution(body, map, stats)); });
  if (const auto* polygon = dynamic_cast<const geometry::PolygonBoundary*>(&body))
    guarded("lem_3_4", [&] {
      out.push_back(check_chordal_gauss(*polygon, map, config.samples, random::substream_seed(config.seed, key, 2)));
    });
  return out;
}

std::vector<VerificationRecord> body_checks(const geometry::ConvexBody& body, const SuiteConfig& config) {
  std::vector<VerificationRecord> out;
  out.push_back(check_pal_firey(body, config.kind));
  if (const auto* p = dynamic_cast<const geometry::Polytope3*>(&body))
    out.push_back(check_chakerian(*p, config.chakerian_directions, random::substream_seed(config.seed, body.id() + "|chakerian")));
  if (const auto* c = dynamic_cast<const geometry::CylinderBody*>(&body))
    for (auto& r : check_point_pair_bound(body, c->cap_center(false), c->cap_center(true))) out.push_back(std::move(r));
  return out;
}

// One generator per suite body, so a failing body does not take the others down.
std::vector<std::pair<std::string, std::function<BodyPtr()>>> body_generators(const SuiteConfig& config) {
  std::vector<std::pair<std::string, std::function<BodyPtr()>>> out;
  for (const auto& name : config.analytic_bodies) out.emplace_back(name, [name] { return geometry::named_body(name); });
  static constexpr const char* kShapes[] = {"round", "cigar", "pancake"};
  for (int i = 0; i < config.polytopes; ++i) {
    char id[64];
    std::snprintf(id, sizeof id, "polytope_%s_%02d", kShapes[i % 3], i);
    const std::uint64_t seed = random::substream_seed(config.seed, "polytope", static_cast<std::uint64_t>(i));
    const auto shape = static_cast<geometry::PolytopeShape>(i % 3);
    const int vertices = config.polytope_vertices;
    out.emplace_back(id, [=, id = std::string(id)]() -> BodyPtr {
      return std::make_shared<geometry::Polytope3>(geometry::random_polytope(seed, vertices, shape, 8, id));
    });
  }
  return out;
}

}  // namespace

std::vector<BodyPtr> suite_bodies(const SuiteConfig& config) {
  std::vector<BodyPtr> bodies;
  for (const auto& [name, make] : body_generators(config)) bodies.push_back(make());
  return bodies;
}

std::vector<VerificationRecord> run_suite(const SuiteConfig& config) {
  if (config.samples < 1) throw ConfigurationError("samples must be >= 1");
  if (config.polytopes < 0) throw ConfigurationError("polytope count must be >= 0");

  std::vector<Task> tasks;
  std::vector<BodyPtr> bodies;
  for (const auto& [name, make] : body_generators(config)) {
    try {
      bodies.push_back(make());
    } catch (const std::exception& e) {
      tasks.push_back([r = error_record("generator", name, std::nullopt, e)] { return std::vector<VerificationRecord>{r}; });
    }
  }
  std::vector<DisplacementMap> maps;
  for (MapKind k : config.maps) maps.push_back(make_map(k));

  for (const auto& body : bodies) {
    tasks.push_back([body, &config] { return body_checks(*body, config); });
    for (const auto& map : maps)
      if (applies(map, *body)) tasks.push_back([body, map, &config] { return body_map_checks(*body, map, config); });
  }
  for (const auto& polygon : crofton_polygons())
    tasks.push_back([polygon, &config] {
      return std::vector<VerificationRecord>{
          check_crofton(*polygon, config.crofton_samples, random::substream_seed(config.seed, polygon->id() + "|crofton"))};
    });
  tasks.push_back([] { return std::vector<VerificationRecord>{check_pal_cone()}; });

  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  parallel::parallel_for(tasks.size(), [&](size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const std::exception& e) {
      results[i] = {error_record("suite", "task_" + std::to_string(i), std::nullopt, e)};
    }
  });

  std::vector<VerificationRecord> records;
  for (auto& r : results)
    for (auto& rec : r) records.push_back(std::move(rec));
  std::stable_sort(records.begin(), records.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return std::tie(a.theorem_id, a.body_id, a.map_id) < std::tie(b.theorem_id, b.body_id, b.map_id);
  });
  return records;
}

int audit_orientation_notes(const std::vector<VerificationRecord>& records) {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const VerificationRecord& r) {
    return r.approximate && r.bound_orientation_notes.empty();
  }));
}

SuiteSummary summarize(const std::vector<VerificationRecord>& records) {
  SuiteSummary s;
  s.records = static_cast<int>(records.size());
  for (const auto& r : records) {
    switch (r.status) {
      case Status::pass: ++s.passed; break;
      case Status::fail: ++s.failed; break;
      case Status::advisory: ++s.advisory; break;
      case Status::not_applicable: ++s.not_applicable; break;
      case Status::error: ++s.errors; break;
    }
  }
  s.missing_notes = audit_orientation_notes(records);
  return s;
}

namespace {

const std::vector<std::string> kColumns = {
    "theorem_id", "body_id", "map_id", "lhs",  "rhs",         "margin",                  "relation",
    "tolerance",  "pass",    "status", "approximate", "bound_orientation_notes", "seed",     "params"};

std::string join_params(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (k.find_first_of("=;") != std::string::npos || v.find(';') != std::string::npos)
      throw ConfigurationError("parameter '" + k + "' cannot be serialised");
    if (!out.empty()) out += ';';
    out += k + '=' + v;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> split_params(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t start = 0;
  while (start < text.size()) {
    const size_t end = std::min(text.find(';', start), text.size());
    const std::string item = text.substr(start, end - start);
    const size_t eq = item.find('=');
    if (eq == std::string::npos) throw ConfigurationError("bad parameter '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    start = end + 1;
  }
  return out;
}

}  // namespace

table::Table records_table(const std::vector<VerificationRecord>& records) {
  table::Table t;
  t.name = "verification";
  t.columns = kColumns;
  for (const auto& r : records) {
    t.add_row({r.theorem_id, r.body_id, r.map_id ? table::Cell(*r.map_id) : table::Cell(std::monostate{}), r.lhs, r.rhs,
               r.margin, std::string(to_string(r.relation)), r.tolerance, r.pass, std::string(to_string(r.status)),
               r.approximate, r.bound_orientation_notes, r.seed, join_params(r.params)});
  }
  return t;
}

std::vector<VerificationRecord> records_from_table(const table::Table& t) {
  using namespace table;
  std::vector<size_t> idx;
  for (const auto& c : kColumns) idx.push_back(t.column(c));
  std::vector<VerificationRecord> out;
  for (const auto& row : t.rows) {
    VerificationRecord r;
    r.theorem_id = as_string(row[idx[0]]);
    r.body_id = as_string(row[idx[1]]);
    if (!is_null(row[idx[2]])) r.map_id = as_string(row[idx[2]]);
    r.lhs = as_double(row[idx[3]]);
    r.rhs = as_double(row[idx[4]]);
    r.margin = as_double(row[idx[5]]);
    r.relation = parse_relation(as_string(row[idx[6]]));
    r.tolerance = as_double(row[idx[7]]);
    r.pass = as_bool(row[idx[8]]);
    r.status = parse_status(as_string(row[idx[9]]));
    r.approximate = as_bool(row[idx[10]]);
    r.bound_orientation_notes = as_string(row[idx[11]]);
    r.seed = as_uint(row[idx[12]]);
    r.params = split_params(as_string(row[idx[13]]));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hyperarea::verify
