#include "hyperarea/geometry/polytope.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace hyperarea::geometry {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point3 to3(const Vec& v) { return Point3(v[0], v[1], v[2]); }

double point_segment_distance(const Point3& p, const Point3& a, const Point3& b) {
  const Point3 e = b - a;
  const double len2 = e.squaredNorm();
  const double t = len2 > 0 ? std::clamp((p - a).dot(e) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * e)).norm();
}

// Closest distance between segments [p1,q1] and [p2,q2] (Ericson, Real-Time
// Collision Detection, 5.1.9), with the parallel case handled by clamping.
double segment_segment_distance(const Point3& p1, const Point3& q1, const Point3& p2, const Point3& q2) {
  const Point3 d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0, t = 0;
  if (a <= 0 && e <= 0) return r.norm();
  if (a <= 0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= 0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const double direct = ((p1 + s * d1) - (p2 + t * d2)).norm();
  // endpoint checks guard the parallel case
  return std::min({direct, point_segment_distance(p1, p2, q2), point_segment_distance(q1, p2, q2),
                   point_segment_distance(p2, p1, q1), point_segment_distance(q2, p1, q1)});
}

struct Triangle {
  int a, b, c;
  Point3 normal;
  double offset;
};

Triangle make_triangle(const std::vector<Point3>& p, int a, int b, int c) {
  const Point3 n = (p[b] - p[a]).cross(p[c] - p[a]).normalized();
  return {a, b, c, n, n.dot(p[a])};
}

// Incremental hull; returns outward-oriented triangles over indices into p.
std::vector<Triangle> hull_triangles(const std::vector<Point3>& p, double eps) {
  const int count = static_cast<int>(p.size());
  if (count < 4) throw DomainError("hull needs at least 4 points");
  int i0 = 0, i1 = 0, i2 = -1, i3 = -1;
  for (int i = 1; i < count; ++i)
    if ((p[i] - p[i0]).norm() > (p[i1] - p[i0]).norm()) i1 = i;
  if ((p[i1] - p[i0]).norm() <= eps) throw DomainError("degenerate hull: all points coincide");
  const Point3 axis = (p[i1] - p[i0]).normalized();
  double best = eps;
  for (int i = 0; i < count; ++i) {
    const double d = (p[i] - p[i0]).cross(axis).norm();
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0) throw DomainError("degenerate hull: points are collinear");
  const Point3 plane_normal = (p[i1] - p[i0]).cross(p[i2] - p[i0]).normalized();
  best = eps;
  for (int i = 0; i < count; ++i) {
    const double d = std::fabs((p[i] - p[i0]).dot(plane_normal));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0) throw DomainError("degenerate hull: points are coplanar");

  const Point3 inside = (p[i0] + p[i1] + p[i2] + p[i3]) / 4;
  std::vector<Triangle> faces;
  auto add = [&](int a, int b, int c) {
    Triangle t = make_triangle(p, a, b, c);
    if (t.normal.dot(inside) > t.offset) t = make_triangle(p, a, c, b);
    faces.push_back(t);
  };
  add(i0, i1, i2);
  add(i0, i1, i3);
  add(i0, i2, i3);
  add(i1, i2, i3);

  for (int i = 0; i < count; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f)
      if (faces[f].normal.dot(p[i]) - faces[f].offset > eps) visible[f] = 1, any = true;
    if (!any) continue;
    std::set<std::pair<int, int>> directed;
    for (size_t f = 0; f < faces.size(); ++f)
      if (visible[f]) {
        directed.insert({faces[f].a, faces[f].b});
        directed.insert({faces[f].b, faces[f].c});
        directed.insert({faces[f].c, faces[f].a});
      }
    std::vector<Triangle> kept;
    for (size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) kept.push_back(faces[f]);
    for (const auto& [a, b] : directed)
      if (!directed.count({b, a})) kept.push_back(make_triangle(p, a, b, i));
    faces = std::move(kept);
  }
  return faces;
}

// Graph with dense all-pairs distances from repeated Dijkstra.
std::vector<double> all_pairs(int nodes, const std::vector<std::vector<std::pair<int, double>>>& adjacency) {
  std::vector<double> dist(static_cast<size_t>(nodes) * nodes, kInf);
  using Item = std::pair<double, int>;
  for (int s = 0; s < nodes; ++s) {
    double* row = dist.data() + static_cast<size_t>(s) * nodes;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > row[u]) continue;
      for (const auto& [v, w] : adjacency[u]) {
        if (d + w < row[v]) {
          row[v] = d + w;
          heap.push({row[v], v});
        }
      }
    }
  }
  return dist;
}

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

// Edges cut into m + 1 closed intervals. Consecutive edge crossings of a
// shortest path lie on two different edges of a common face (it never runs
// along an edge unless both ends are on it, and then they share a face), so
// only those interval pairs are joined, weighted by their distance.
struct IntervalGraph {
  std::vector<std::pair<Point3, Point3>> intervals;
  std::vector<std::vector<int>> face_intervals;
  Adjacency adjacency;
};

IntervalGraph build_interval_graph(const std::vector<Point3>& vertices, const std::vector<PolytopeEdge>& edges,
                                   const std::vector<PolytopeFace>& faces, int m) {
  IntervalGraph g;
  std::map<std::pair<int, int>, int> edge_of;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) edge_of[{edges[e].a, edges[e].b}] = e;
  for (const auto& e : edges) {
    const Point3 a = vertices[e.a], d = vertices[e.b] - vertices[e.a];
    for (int k = 0; k <= m; ++k)
      g.intervals.push_back({a + d * (static_cast<double>(k) / (m + 1)), a + d * (static_cast<double>(k + 1) / (m + 1))});
  }
  for (const auto& face : faces) {
    std::vector<int> ids;
    const size_t k = face.vertices.size();
    for (size_t i = 0; i < k; ++i) {
      const int a = face.vertices[i], b = face.vertices[(i + 1) % k];
      const int e = edge_of.at({std::min(a, b), std::max(a, b)});
      for (int j = 0; j <= m; ++j) ids.push_back(e * (m + 1) + j);
    }
    g.face_intervals.push_back(std::move(ids));
  }
  g.adjacency.resize(g.intervals.size());
  for (const auto& ids : g.face_intervals)
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) {
        if (ids[i] / (m + 1) == ids[j] / (m + 1)) continue;
        const auto& s = g.intervals[ids[i]];
        const auto& t = g.intervals[ids[j]];
        const double w = segment_segment_distance(s.first, s.second, t.first, t.second);
        g.adjacency[ids[i]].push_back({ids[j], w});
        g.adjacency[ids[j]].push_back({ids[i], w});
      }
  return g;
}

// Multi-source search from x's face intervals to y's face intervals.
double interval_search(const IntervalGraph& g, const Point3& x, const std::vector<int>& fx, const Point3& y,
                       const std::vector<int>& fy) {
  std::vector<double> dist(g.intervals.size(), kInf), exit(g.intervals.size(), kInf);
  for (int f : fy)
    for (int b : g.face_intervals[f]) exit[b] = point_segment_distance(y, g.intervals[b].first, g.intervals[b].second);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int f : fx)
    for (int a : g.face_intervals[f]) {
      const double d = point_segment_distance(x, g.intervals[a].first, g.intervals[a].second);
      if (d < dist[a]) {
        dist[a] = d;
        heap.push({d, a});
      }
    }
  double best = kInf;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d >= best) break;
    if (d > dist[u]) continue;
    best = std::min(best, d + exit[u]);
    for (const auto& [v, w] : g.adjacency[u])
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.push({dist[v], v});
      }
  }
  return best;
}

}  // namespace

struct Polytope3::Graphs {
  std::vector<Point3> nodes;
  std::vector<std::vector<int>> face_nodes;
  std::vector<double> upper;

  IntervalGraph coarse;
  std::vector<double> lower;
};

struct Polytope3::FineGraph {
  IntervalGraph graph;
};

Polytope3::Polytope3(const std::vector<Point3>& points, int subdivision, std::string id)
    : subdivision_(subdivision), id_(std::move(id)) {
  if (subdivision < 0) throw ConfigurationError("Steiner subdivision must be >= 0");
  for (const auto& q : points)
    if (!q.allFinite()) throw DomainError("polytope points must be finite");
  double extent = 0;
  for (const auto& q : points) extent = std::max(extent, (q - points.front()).norm());
  const double eps = 1e-10 * std::max(extent, 1e-300);
  const std::vector<Triangle> triangles = hull_triangles(points, eps);

  // keep hull vertices in input order
  std::vector<int> used;
  for (const auto& t : triangles) used.insert(used.end(), {t.a, t.b, t.c});
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<int, int> reindex;
  for (int i : used) {
    reindex[i] = static_cast<int>(vertices_.size());
    vertices_.push_back(points[i]);
  }

  // merge coplanar neighbours
  const size_t tcount = triangles.size();
  std::vector<size_t> parent(tcount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<std::pair<int, int>, size_t> owner;
  for (size_t f = 0; f < tcount; ++f) {
    const auto& t = triangles[f];
    for (auto [a, b] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) owner[{a, b}] = f;
  }
  for (size_t f = 0; f < tcount; ++f) {
    const auto& t = triangles[f];
    for (auto [a, b] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
      const size_t g = owner.at({b, a});
      if ((t.normal - triangles[g].normal).norm() < 1e-9 && std::fabs(t.offset - triangles[g].offset) < eps)
        parent[find(f)] = find(g);
    }
  }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t f = 0; f < tcount; ++f) groups[find(f)].push_back(f);

  for (const auto& [root, members] : groups) {
    std::set<std::pair<int, int>> directed;
    for (size_t f : members) {
      const auto& t = triangles[f];
      directed.insert({{t.a, t.b}, {t.b, t.c}, {t.c, t.a}});
    }
    std::map<int, int> next;
    for (const auto& [a, b] : directed)
      if (!directed.count({b, a})) next[a] = b;
    PolytopeFace face;
    const int start = next.begin()->first;
    int v = start;
    do {
      face.vertices.push_back(reindex.at(v));
      v = next.at(v);
      if (face.vertices.size() > next.size()) throw NumericalError("hull facet boundary is not a simple cycle");
    } while (v != start);
    // rotate so the smallest index comes first
    std::rotate(face.vertices.begin(), std::min_element(face.vertices.begin(), face.vertices.end()),
                face.vertices.end());

    Point3 n = Point3::Zero();
    const Point3& o = vertices_[face.vertices[0]];
    Point3 weighted = Point3::Zero();
    for (size_t k = 1; k + 1 < face.vertices.size(); ++k) {
      const Point3& b = vertices_[face.vertices[k]];
      const Point3& c = vertices_[face.vertices[k + 1]];
      const Point3 cr = (b - o).cross(c - o);
      n += cr;
      weighted += cr.norm() / 2 * (o + b + c) / 3;
    }
    face.area = n.norm() / 2;
    face.normal = n.normalized();
    face.centroid = weighted / face.area;
    face.offset = 0;
    for (int i : face.vertices) face.offset += face.normal.dot(vertices_[i]);
    face.offset /= static_cast<double>(face.vertices.size());
    faces_.push_back(std::move(face));
  }

  // canonical face order: lexicographic in the outward normal
  auto key = [](const PolytopeFace& f) {
    return std::make_tuple(std::llround(f.normal.x() * 1e9), std::llround(f.normal.y() * 1e9),
                           std::llround(f.normal.z() * 1e9));
  };
  std::sort(faces_.begin(), faces_.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  std::map<std::pair<int, int>, int> edge_index;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    const auto& fv = faces_[f].vertices;
    for (size_t k = 0; k < fv.size(); ++k) {
      const int a = fv[k], b = fv[(k + 1) % fv.size()];
      const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
      auto it = edge_index.find(e);
      if (it == edge_index.end()) {
        edge_index[e] = static_cast<int>(edges_.size());
        PolytopeEdge edge;
        edge.a = e.first;
        edge.b = e.second;
        edge.left = f;
        edge.right = -1;
        edge.length = (vertices_[e.first] - vertices_[e.second]).norm();
        edges_.push_back(edge);
      } else {
        edges_[it->second].right = f;
      }
    }
  }
  for (auto& e : edges_) {
    if (e.right < 0) throw NumericalError("hull edge with a single face");
    e.exterior_angle = angle_between(Vec(faces_[e.left].normal), Vec(faces_[e.right].normal));
  }
  const long long euler = static_cast<long long>(vertices_.size()) - static_cast<long long>(edges_.size()) +
                          static_cast<long long>(faces_.size());
  if (euler != 2) throw NumericalError("hull fails the Euler relation");

  interior_ = Point3::Zero();
  for (const auto& q : vertices_) interior_ += q;
  interior_ /= static_cast<double>(vertices_.size());
  for (const auto& f : faces_) {
    area_ += f.area;
    volume_ += f.area * (f.offset - f.normal.dot(interior_)) / 3;
  }
  for (const auto& q : vertices_) scale_ = std::max(scale_, q.norm());

  graphs_once_ = std::make_shared<std::once_flag>();
  fine_once_ = std::make_shared<std::once_flag>();
}

Polytope3 Polytope3::cube(double edge, int subdivision, std::string id) {
  std::vector<Point3> p;
  for (int i = 0; i < 8; ++i) p.emplace_back(edge * (i & 1), edge * ((i >> 1) & 1), edge * ((i >> 2) & 1));
  return Polytope3(p, subdivision, std::move(id));
}

Polytope3 Polytope3::regular_tetrahedron(double edge, int subdivision, std::string id) {
  const double s = edge / (2 * std::sqrt(2.0));
  return Polytope3({{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}, subdivision, std::move(id));
}

Polytope3 Polytope3::with_subdivision(int subdivision) const {
  if (subdivision < 0) throw ConfigurationError("Steiner subdivision must be >= 0");
  Polytope3 copy = *this;
  copy.subdivision_ = subdivision;
  copy.graphs_once_ = std::make_shared<std::once_flag>();
  copy.graphs_.reset();
  copy.fine_once_ = std::make_shared<std::once_flag>();
  copy.fine_.reset();
  return copy;
}

Vec Polytope3::face_center(int face) const {
  if (face < 0 || face >= static_cast<int>(faces_.size()))
    throw DomainError("face index " + std::to_string(face) + " out of range");
  return Vec(faces_[face].centroid);
}

std::vector<int> Polytope3::faces_containing(const Vec& x) const {
  std::vector<int> out;
  if (x.size() != 3) return out;
  const Point3 p = to3(x);
  const double tol = kSurfaceTol * scale_;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    const auto& face = faces_[f];
    if (std::fabs(face.normal.dot(p) - face.offset) > tol) continue;
    bool inside = true;
    for (size_t k = 0; k < face.vertices.size() && inside; ++k) {
      const Point3& a = vertices_[face.vertices[k]];
      const Point3& b = vertices_[face.vertices[(k + 1) % face.vertices.size()]];
      const Point3 inward = face.normal.cross(b - a).normalized();
      if (inward.dot(p - a) < -tol) inside = false;
    }
    if (inside) out.push_back(f);
  }
  return out;
}

double Polytope3::mean_width_edge_formula() const {
  double sum = 0;
  for (const auto& e : edges_) sum += e.length * e.exterior_angle;
  return sum / (4 * std::numbers::pi);
}

double Polytope3::projected_area(const Vec& u) const {
  const Point3 n = to3(u).normalized();
  double sum = 0;
  for (const auto& f : faces_) sum += f.area * std::fabs(f.normal.dot(n));
  return sum / 2;
}

double Polytope3::support(const Vec& u) const {
  double best = -kInf;
  for (const auto& q : vertices_) best = std::max(best, q.x() * u[0] + q.y() * u[1] + q.z() * u[2]);
  return best;
}

const Polytope3::Graphs& Polytope3::graphs() const {
  std::call_once(*graphs_once_, [this] {
    auto g = std::make_shared<Graphs>();
    const int m = subdivision_;
    const int nv = static_cast<int>(vertices_.size());
    std::map<std::pair<int, int>, int> edge_of;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) edge_of[{edges_[e].a, edges_[e].b}] = e;

    g->nodes = vertices_;
    for (const auto& e : edges_)
      for (int j = 1; j <= m; ++j)
        g->nodes.push_back(vertices_[e.a] + (vertices_[e.b] - vertices_[e.a]) * (static_cast<double>(j) / (m + 1)));
    for (const auto& face : faces_) {
      std::vector<int> nodes;
      const size_t k = face.vertices.size();
      for (size_t i = 0; i < k; ++i) {
        const int a = face.vertices[i], b = face.vertices[(i + 1) % k];
        const int e = edge_of.at({std::min(a, b), std::max(a, b)});
        nodes.push_back(a);
        for (int j = 0; j < m; ++j) nodes.push_back(nv + e * m + (a < b ? j : m - 1 - j));
      }
      g->face_nodes.push_back(std::move(nodes));
    }

    const int nn = static_cast<int>(g->nodes.size());
    std::vector<std::vector<std::pair<int, double>>> adj(nn);
    for (const auto& nodes : g->face_nodes)
      for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j) {
          const double w = (g->nodes[nodes[i]] - g->nodes[nodes[j]]).norm();
          adj[nodes[i]].push_back({nodes[j], w});
          adj[nodes[j]].push_back({nodes[i], w});
        }
    g->upper = all_pairs(nn, adj);

    g->coarse = build_interval_graph(vertices_, edges_, faces_, m);
    g->lower = all_pairs(static_cast<int>(g->coarse.intervals.size()), g->coarse.adjacency);
    graphs_ = std::move(g);
  });
  return *graphs_;
}

Distance Polytope3::intrinsic_distance(const Vec& x, const Vec& y) const {
  require_on_surface(x, "x");
  require_on_surface(y, "y");
  const std::vector<int> fx = faces_containing(x), fy = faces_containing(y);
  if (fx.empty() || fy.empty()) throw DomainError("point is not on a face of " + id_);
  const Point3 px = to3(x), py = to3(y);
  for (int f : fx)
    if (std::find(fy.begin(), fy.end(), f) != fy.end()) return {(px - py).norm(), BoundKind::upper_bound};

  const Graphs& g = graphs();
  const size_t nn = g.nodes.size();
  std::vector<std::pair<int, double>> targets;
  for (int f : fy)
    for (int b : g.face_nodes[f]) targets.push_back({b, (g.nodes[b] - py).norm()});
  double best = kInf;
  for (int f : fx)
    for (int a : g.face_nodes[f]) {
      const double da = (g.nodes[a] - px).norm();
      const double* row = g.upper.data() + static_cast<size_t>(a) * nn;
      for (const auto& [b, db] : targets) best = std::min(best, da + row[b] + db);
    }
  return {best, BoundKind::upper_bound};
}

double Polytope3::intrinsic_distance_lower(const Vec& x, const Vec& y) const {
  require_on_surface(x, "x");
  require_on_surface(y, "y");
  const std::vector<int> fx = faces_containing(x), fy = faces_containing(y);
  if (fx.empty() || fy.empty()) throw DomainError("point is not on a face of " + id_);
  const Point3 px = to3(x), py = to3(y);
  const double euclid = (px - py).norm();
  for (int f : fx)
    if (std::find(fy.begin(), fy.end(), f) != fy.end()) return euclid;

  const IntervalGraph& g = graphs().coarse;
  const std::vector<double>& lower = graphs().lower;
  const size_t ni = g.intervals.size();
  std::vector<std::pair<int, double>> targets;
  for (int f : fy)
    for (int b : g.face_intervals[f])
      targets.push_back({b, point_segment_distance(py, g.intervals[b].first, g.intervals[b].second)});
  double best = kInf;
  for (int f : fx)
    for (int a : g.face_intervals[f]) {
      const double da = point_segment_distance(px, g.intervals[a].first, g.intervals[a].second);
      const double* row = lower.data() + static_cast<size_t>(a) * ni;
      for (const auto& [b, db] : targets) best = std::min(best, da + row[b] + db);
    }
  return std::max(best, euclid);
}

double Polytope3::intrinsic_distance_lower_refined(const Vec& x, const Vec& y) const {
  require_on_surface(x, "x");
  require_on_surface(y, "y");
  const std::vector<int> fx = faces_containing(x), fy = faces_containing(y);
  if (fx.empty() || fy.empty()) throw DomainError("point is not on a face of " + id_);
  const Point3 px = to3(x), py = to3(y);
  const double euclid = (px - py).norm();
  for (int f : fx)
    if (std::find(fy.begin(), fy.end(), f) != fy.end()) return euclid;
  std::call_once(*fine_once_, [this] {
    fine_ = std::make_shared<FineGraph>(
        FineGraph{build_interval_graph(vertices_, edges_, faces_, std::max(subdivision_, kRefinedSubdivision))});
  });
  return std::max(euclid, interval_search(fine_->graph, px, fx, py, fy));
}

std::vector<Vec> Polytope3::sample_boundary(std::uint64_t seed, int count) const {
  auto rng = random::substream(seed, "polytope.sample");
  std::vector<double> cdf;
  double acc = 0;
  for (const auto& f : faces_) cdf.push_back(acc += f.area);
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double u = random::uniform01(rng) * acc;
    const size_t fi = std::min(static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()),
                               faces_.size() - 1);
    const auto& fv = faces_[fi].vertices;
    const Point3& o = vertices_[fv[0]];
    // pick a fan triangle by area
    std::vector<double> tri;
    double tacc = 0;
    for (size_t k = 1; k + 1 < fv.size(); ++k)
      tri.push_back(tacc += (vertices_[fv[k]] - o).cross(vertices_[fv[k + 1]] - o).norm());
    const double v = random::uniform01(rng) * tacc;
    const size_t k = std::min(static_cast<size_t>(std::upper_bound(tri.begin(), tri.end(), v) - tri.begin()),
                              tri.size() - 1) + 1;
    const double s = std::sqrt(random::uniform01(rng));
    const double t = random::uniform01(rng);
    const Point3 q = (1 - s) * o + s * (1 - t) * vertices_[fv[k]] + s * t * vertices_[fv[k + 1]];
    out.emplace_back(Vec(q));
  }
  return out;
}

std::vector<Vec> Polytope3::critical_points() const {
  std::vector<Vec> out;
  for (const auto& q : vertices_) out.emplace_back(Vec(q));
  for (const auto& f : faces_) out.emplace_back(Vec(f.centroid));
  for (const auto& e : edges_) out.emplace_back(Vec(Point3((vertices_[e.a] + vertices_[e.b]) / 2)));
  return out;
}

double Polytope3::ray_exit(const Vec& origin, const Vec& dir) const {
  const Point3 o = to3(origin), d = to3(dir);
  double t = kInf;
  for (const auto& f : faces_) {
    const double denom = f.normal.dot(d);
    if (denom > 0) t = std::min(t, (f.offset - f.normal.dot(o)) / denom);
  }
  return t;
}

double Polytope3::distance_to_surface(const Vec& x) const {
  const Point3 p = to3(x);
  double worst = -kInf;
  for (const auto& f : faces_) worst = std::max(worst, f.normal.dot(p) - f.offset);
  // inside: distance to the nearest facet plane; outside: a lower bound
  return std::fabs(worst);
}

std::optional<Vec> Polytope3::symmetry_center() const {
  const double tol = kSurfaceTol * scale_;
  for (const auto& q : vertices_) {
    const Point3 mirror = 2 * interior_ - q;
    bool found = false;
    for (const auto& r : vertices_)
      if ((r - mirror).norm() <= tol) {
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return Vec(interior_);
}

std::vector<Vec> Polytope3::width_candidates() const {
  // the minimum width of a polytope is attained at a facet normal or at the
  // common normal of two edges
  std::vector<Vec> out;
  for (const auto& f : faces_) out.emplace_back(Vec(f.normal));
  for (size_t i = 0; i < edges_.size(); ++i)
    for (size_t j = i + 1; j < edges_.size(); ++j) {
      const Point3 a = vertices_[edges_[i].b] - vertices_[edges_[i].a];
      const Point3 b = vertices_[edges_[j].b] - vertices_[edges_[j].a];
      const Point3 c = a.cross(b);
      if (c.norm() > 1e-12 * a.norm() * b.norm()) out.emplace_back(Vec(Point3(c.normalized())));
    }
  return out;
}

Polytope3 random_polytope(std::uint64_t seed, int vertex_count, PolytopeShape shape, int subdivision, std::string id) {
  if (vertex_count < 4) throw DomainError("random polytope needs at least 4 vertices");
  if (id.empty()) {
    const char* name = shape == PolytopeShape::round ? "round" : shape == PolytopeShape::cigar ? "cigar" : "pancake";
    id = std::string("polytope_") + name + "_" + std::to_string(seed);
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto rng = random::substream(seed, "random_polytope", attempt);
    std::vector<Point3> p;
    for (int i = 0; i < vertex_count; ++i) {
      const Vec u = random::uniform_direction(rng, 3);
      const double radius = 1 + 0.1 * (random::uniform01(rng) - 0.5);
      Point3 q = radius * to3(u);
      if (shape == PolytopeShape::cigar) q.x() *= 3;
      if (shape == PolytopeShape::pancake) q.z() *= 0.2;
      p.push_back(q);
    }
    try {
      return Polytope3(p, subdivision, id);
    } catch (const DomainError&) {
      if (attempt >= 64) throw;
    }
  }
}

}  // namespace hyperarea::geometry
