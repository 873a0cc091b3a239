#pragma once

// Widths, mean width estimators and the inequalities that only need
// mensuration (Chakerian's projection bound, the isoperimetric inequality).

#include "hyperarea/geometry/body.hpp"
#include "hyperarea/geometry/polytope.hpp"

namespace hyperarea::geometry {

/// Quasi-uniform unit vectors: equal angles for dim 2, a Fibonacci lattice for
/// dim 3, seeded Gaussian directions above.
std::vector<Vec> direction_grid(int dim, int count);

/// support(u) + support(-u) for unit u. Throws DomainError for u = 0.
double width(const ConvexBody& body, const Vec& direction);

struct MinWidth {
  double value = 0;
  Vec direction;
  BoundKind kind = BoundKind::upper_bound;
};

/// Minimum over `budget` grid directions plus the body's own candidates,
/// followed by `refinements` rounds of local pattern search.
MinWidth min_width(const ConvexBody& body, int budget = 20000, int refinements = 50);

enum class MeanWidthMethod { monte_carlo, polytope_edge_formula, crofton_curve };
std::string_view to_string(MeanWidthMethod method);
MeanWidthMethod parse_mean_width_method(std::string_view name);

struct MeanWidth {
  double value = 0;
  double standard_error = 0;  // 0 for closed forms
  MeanWidthMethod method = MeanWidthMethod::monte_carlo;
  long long samples = 0;
};

/// Monte Carlo draws `samples` uniform directions in chunks with their own
/// substreams, so the result does not depend on the thread count. The edge
/// formula needs a Polytope3 and the Crofton formula a PolygonBoundary;
/// other pairings throw ConfigurationError.
MeanWidth mean_width(const ConvexBody& body, MeanWidthMethod method, std::uint64_t seed = 0,
                     long long samples = 1000000);

struct ChakerianCheck {
  double volume = 0;
  double segment = 0;          // chord through the centroid along u
  double projected_area = 0;   // projection onto the plane normal to u
  double rhs = 0;              // segment * projected_area / 3
  double margin = 0;           // volume - rhs
};
ChakerianCheck chakerian_check(const Polytope3& body, const Vec& direction);

/// sigma_n (Vol / omega_{n+1})^{n/(n+1)}, the isoperimetric lower bound on the
/// boundary area.
double isoperimetric_area_bound(const ConvexBody& body);

}  // namespace hyperarea::geometry
