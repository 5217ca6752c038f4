#pragma once

// The family
//
//   f(z) = z^(s*d_1) * prod_{i=1}^{n-1} (z^(k_i) - a_i^(k_i))^(e_i),
//   s = (-1)^(n - rho), k_i = d_i + d_(i+1), e_i = (-1)^(n - i - rho),
//
// whose Julia set is a Cantor circle for small enough tau when the a_i follow
// the parameter schedule below. All a_i are positive reals.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "cantor/combinatorics.hpp"
#include "cantor/dimension.hpp"

namespace cantor {

using Complex = std::complex<double>;

/// Where 0 and infinity go:
///   A: rho = 1, n even: D_0 -> D_inf, D_inf -> D_inf
///   B: rho = 1, n odd:  D_0 -> D_0,   D_inf -> D_inf
///   C: rho = 0, n odd:  D_0 -> D_inf, D_inf -> D_0
///   D: rho = 0, n even: D_0 -> D_0,   D_inf -> D_0
enum class BasinCase { A, B, C, D };

struct FamilyParams {
  int rho = 1;
  DegreeVector degrees;
  std::vector<double> a;  // n - 1 moduli, strictly increasing
  double tau = 1e-4;

  std::size_t n() const noexcept { return degrees.size(); }
  int total_degree() const noexcept;
  int max_degree() const noexcept;
  double eta() const noexcept;  // sum 1/d_i
  BasinCase basin_case() const noexcept;

  /// (-1)^(n - rho), the sign of the exponent of z.
  int z_sign() const noexcept;
  /// k_i = d_i + d_(i+1), 1-based i in [1, n-1].
  int factor_power(std::size_t i) const noexcept;
  /// e_i = (-1)^(n - i - rho): +1 puts zeros on T_(a_i), -1 puts poles there.
  int factor_exponent(std::size_t i) const noexcept;
  /// Exponent of the leading power at infinity, (-1)^(1 - rho) d_n.
  int infinity_exponent() const noexcept;
};

/// Checks rho, degrees (n >= 2, d_i >= 2, sum 1/d_i < 1), tau > 0 and that a
/// is positive and strictly increasing. Throws Error{InvalidDegrees |
/// NonPositiveTau | InvalidArgument}.
FamilyParams make_params(int rho, DegreeVector degrees, std::vector<double> a, double tau);

/// a_(n-1) = v^(1/d_n), a_i = u^(1/d_(i+1)) a_(i+1), with
///   rho = 1: u = tau d_max^-5, v = tau d_max^-2
///   rho = 0: u = tau^(1 + 1/d_n + 2(1-eta)/3), v = tau^(1/d_n + (1-eta)/3).
FamilyParams parameter_schedule(int rho, const DegreeVector& degrees, double tau);

/// Throws Error{PoleHit} within 1e-300 of a pole. f(0) is 0 or infinity.
Complex evaluate(const FamilyParams& params, Complex z);

/// Value and f'(z), with the same pole handling as evaluate.
struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};
ValueAndDerivative evaluate_with_derivative(const FamilyParams& params, Complex z);

/// Exponent bookkeeping: total topological degree read off the exponent
/// table (numerator degree minus the cancelled part), equal to sum d_i.
int degree_from_exponents(const FamilyParams& params);

struct AnnulusRadii {
  double r0 = 0.0;
  std::vector<double> r_minus;  // tau^alpha a_i
  std::vector<double> r_plus;   // tau^-alpha a_i
  double r_inf = 0.0;           // (2/tau)^(1/d_n)
  double alpha_margin = 0.1;

  /// Boundary radii of group i (1-based): (R_(i-1)^+, R_i^-) with R_0^+ = R0
  /// and R_n^- = R_inf.
  double group_inner(std::size_t i) const;
  double group_outer(std::size_t i) const;
  /// R0 < R_1^- < a_1 < R_1^+ < ... < R_(n-1)^+ < R_inf.
  bool chain_holds(const std::vector<double>& a) const;
};

/// Radii without the ordering check.
AnnulusRadii compute_radii(const FamilyParams& params, double alpha_margin);

/// Throws Error{InvalidArgument} unless 0 < alpha_margin < 1/2 and
/// Error{ChainViolation} when the chain fails to interleave.
AnnulusRadii annulus_radii(const FamilyParams& params, double alpha_margin);

enum class Verdict { InnerBasin, OuterBasin, JuliaCandidate };
std::string_view verdict_name(Verdict v) noexcept;

struct OrbitClass {
  Verdict verdict = Verdict::JuliaCandidate;
  int steps = 0;
  double exit_modulus = 0.0;
};

/// Iterates until the orbit enters D_R0 or the exterior of D_Rinf. The
/// verdict names the attracting basin: for case A every trapped orbit ends in
/// the basin of infinity, for case D in the basin of 0; for B the side of
/// entry is the basin; for C (0 and infinity form a 2-cycle) the verdict is
/// the side of entry. Pole hits count as reaching infinity.
OrbitClass classify_point(const FamilyParams& params, const AnnulusRadii& radii, Complex z,
                          int max_iter);

struct CriticalPoints {
  std::vector<Complex> points;  // finite, nonzero
  std::vector<int> group;       // 1-based index of the nearest a_i (log scale)
  double max_residual = 0.0;    // relative residual of the log-derivative
  int sweeps = 0;
};

/// All 2d - d_1 - d_n finite nonzero critical points by simultaneous
/// (Aberth) iteration seeded on the circles T_(a_i). Throws
/// Error{RootFindingDiverged} if the residual is not below 1e-10 after 500
/// sweeps.
CriticalPoints critical_points(const FamilyParams& params);

/// Number of turns of f(T_r) around 0, from `samples` points.
int winding_number(const FamilyParams& params, double radius, std::size_t samples);

struct CircleCheck {
  std::string label;  // e.g. "R1-" or "R0"
  double radius = 0.0;
  std::size_t group = 0;
  bool inner_side = false;  // image expected in the basin side of D_0
  double min_abs = 0.0;     // min |f| on the circle
  double max_abs = 0.0;
  bool in_trap = false;     // image entirely inside D_R0 or outside D_Rinf
  bool side_ok = false;
  bool fatou_ok = false;
  int winding = 0;
  int expected_winding = 0;
  bool pass = false;
};

struct StructureReport {
  bool critical_values_pass = false;
  double worst_critical_value_margin = 0.0;  // > 0 when every value is trapped
  std::size_t critical_point_count = 0;
  std::string critical_error;  // non-empty if root finding failed

  bool circles_pass = false;
  std::vector<CircleCheck> circles;

  bool chain_pass = false;

  bool pass() const noexcept { return critical_values_pass && circles_pass && chain_pass; }
};

/// Three runtime checks that tau is admissible. Failures are report entries.
/// Throws Error{InvalidArgument} if samples < 256.
StructureReport verify_structure(const FamilyParams& params, const AnnulusRadii& radii,
                                 std::size_t samples = 1024);

struct JuliaRender {
  Mask mask;                    // JuliaCandidate pixels
  std::vector<int> escape_steps;  // per pixel; max_iter for candidates
  std::vector<Verdict> verdicts;
};

struct JuliaRenderOptions {
  std::size_t width = 512;
  std::size_t height = 512;
  int max_iter = 200;
  double x_min = -1.5;
  double x_max = 1.5;
  double y_min = -1.5;
  double y_max = 1.5;
};

/// ceil(log(pixels) / log(d_max)): enough iterations for a pixel-sized
/// neighborhood of the Julia set to expand to the window size.
int depth_matched_iterations(const FamilyParams& params, std::size_t pixels);

/// Escape-time raster over classify_point at pixel centers (row 0 on top).
/// Throws Error{BadImageDims} or Error{InvalidArgument}.
JuliaRender render_julia(const FamilyParams& params, const AnnulusRadii& radii,
                         const JuliaRenderOptions& options);

}  // namespace cantor
