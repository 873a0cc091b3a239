#pragma once

// Closed-form constants of the area bound and the crossing value h_n.
// Everything factorial-sized is returned as a LogReal; the arguments rho are
// plain reals > 1.

#include "hyperarea/numerics.hpp"

#include <string_view>

namespace hyperarea::constants {

using numerics::Extended;
using numerics::LogReal;

enum class PalKind { pal_firey, bezdek };
enum class Branch { first, second };

std::string_view to_string(PalKind kind);
std::string_view to_string(Branch branch);
/// Throws ConfigurationError on an unknown name.
PalKind parse_pal_kind(std::string_view name);

struct ConstantsRow {
  int n = 0;
  Extended rho_n = 0;
  LogReal a_n, b_n, c_n;
  Extended rho_star = 0;
  Extended log_h_n = 0;
  Branch branch = Branch::second;
  PalKind kind = PalKind::pal_firey;
};

/// ln((rho-1)/rho) without cancellation near rho = 1.
Extended log_shrink(Extended rho);

/// Branch point where the two pieces of I_n meet.
Extended rho_n(int n);

/// I_n(rho), the lower bound of the point-pair proposition.
LogReal i_n(int n, Extended rho);
/// The two closed-form pieces of I_n, each evaluated regardless of rho_n.
LogReal i_n_first_branch(int n, Extended rho);
LogReal i_n_second_branch(int n, Extended rho);

/// Area of the cylinder with radius (rho-1)/(2 rho) and height 1/rho.
LogReal i_bar_n(int n, Extended rho);
/// I_n*(rho), valid when both endpoints have orthogonal support planes.
LogReal i_star_n(int n, Extended rho);

/// K_d = 2/(sqrt(3) d!) or Bezdek's F_d (d >= 3).
LogReal pal_constant(int d, PalKind kind);

/// J_n(rho) = sigma_n (C/omega_{n+1})^{n/(n+1)} rho^{-n}, C = pal_constant(n+1).
LogReal j_n(int n, Extended rho, PalKind kind = PalKind::pal_firey);

LogReal a_n(int n, PalKind kind = PalKind::pal_firey);
LogReal b_n(int n);
LogReal c_n(int n, PalKind kind = PalKind::pal_firey);

struct Crossing {
  Extended rho_star = 0;
  Branch branch = Branch::second;
};

/// Crossing point of I_n and J_n. Closed form 1 + A_n when A_n <= B_n, otherwise
/// the root of rho (rho-1)^{n-1} = C_n^{n-1} on (rho_n, inf). Throws
/// NumericalError if the root cannot be bracketed in [1 + 1e-12, 1e6] or the
/// crossing residual |ln I - ln J| exceeds 1e-10.
Crossing rho_star(int n, PalKind kind = PalKind::pal_firey, Extended tol = 1e-13L);

LogReal h_n(int n, PalKind kind = PalKind::pal_firey);

ConstantsRow constants_row(int n, PalKind kind = PalKind::pal_firey);

/// max(I_n, J_n) with I_n(1) = 0.
LogReal envelope_b_n(int n, Extended rho, PalKind kind = PalKind::pal_firey);

/// sigma_n / pi^n, the sharp constant for the round sphere.
LogReal sphere_reference(int n);
/// P_n = n^{n-1} sigma_n / pi.
LogReal mean_curvature_constant(int n);
/// h_n / (sigma_n / pi^n).
LogReal suboptimality_factor(int n, PalKind kind = PalKind::pal_firey);

/// (pi/6)^{1/3} / (1 + (pi/6)^{1/6})^2, the closed form quoted for h_2.
Extended quoted_h2_closed_form();

/// Quoted decimal values of h_2, h_3, h_4; 0 for other n.
double quoted_h(int n);

/// Crossing of I_n with J_n scaled by exp(log_scale), found by bisection on the
/// monotone difference ln I - ln J. Diagnostic for the quoted h_n values: with
/// log_scale = -ln 2 at n = 2 it reproduces the quoted closed form.
struct ScaledCrossing {
  Extended rho = 0;
  Extended log_value = 0;
};
ScaledCrossing scaled_j_crossing(int n, Extended log_scale, PalKind kind = PalKind::pal_firey);

}  // namespace hyperarea::constants
