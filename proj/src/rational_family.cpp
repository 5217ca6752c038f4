#include "cantor/rational_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cantor/error.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

namespace {

constexpr double kPoleDistance = 1e-300;
constexpr double kRootTolerance = 1e-10;
constexpr int kMaxSweeps = 500;
constexpr int kFatouBudget = 256;

Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  Complex base = z;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return k < 0 ? 1.0 / result : result;
}

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

struct Factor {
  int power;      // k_i
  int exponent;   // e_i
  double constant;  // a_i^k_i
};

std::vector<Factor> factors_of(const FamilyParams& p) {
  std::vector<Factor> out;
  out.reserve(p.n() - 1);
  for (std::size_t i = 1; i < p.n(); ++i) {
    const int k = p.factor_power(i);
    out.push_back({k, p.factor_exponent(i), ipow(Complex{p.a[i - 1], 0.0}, k).real()});
  }
  return out;
}

const Complex kInfinity{std::numeric_limits<double>::infinity(), 0.0};

// G(z) = d_1 + sum (-1)^i k_i z^k / (z^k - c); the log-map derivative is s*G.
struct LogDerivativeTerms {
  Complex g;
  Complex g_prime;    // dG/dz
  Complex q_log;      // Q'/Q with Q = prod (z^k - c)
  double scale = 0.0;  // d_1 + sum |k z^k / (z^k - c)|
};

LogDerivativeTerms log_derivative_terms(const FamilyParams& p, const std::vector<Factor>& fs,
                                        Complex z) {
  LogDerivativeTerms t;
  t.g = static_cast<double>(p.degrees.front());
  t.scale = p.degrees.front();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const double sign = (i + 1) % 2 == 0 ? 1.0 : -1.0;
    const int k = fs[i].power;
    const Complex zk = ipow(z, k);
    const Complex denom = zk - fs[i].constant;
    const Complex ratio = zk / denom;
    t.g += sign * static_cast<double>(k) * ratio;
    t.scale += static_cast<double>(k) * std::abs(ratio);
    t.g_prime += sign * static_cast<double>(k) *
                 (-static_cast<double>(k) * fs[i].constant * zk / z) / (denom * denom);
    t.q_log += static_cast<double>(k) * zk / z / denom;
  }
  return t;
}

bool is_inner_image_side(const FamilyParams& p, std::size_t circle_index) {
  // circle_index 0 is T_R0, 2n-1 is T_Rinf; odd/even interior indices are
  // R_i^- / R_i^+ for i = (index + 1) / 2.
  const std::size_t last = 2 * p.n() - 1;
  if (circle_index == 0) return p.z_sign() > 0;
  if (circle_index == last) return p.infinity_exponent() < 0;
  const std::size_t i = (circle_index + 1) / 2;
  return p.factor_exponent(i) > 0;
}

}  // namespace

int FamilyParams::total_degree() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

int FamilyParams::max_degree() const noexcept {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

double FamilyParams::eta() const noexcept {
  double sum = 0.0;
  for (int d : degrees) sum += 1.0 / d;
  return sum;
}

BasinCase FamilyParams::basin_case() const noexcept {
  const bool even = n() % 2 == 0;
  if (rho == 1) return even ? BasinCase::A : BasinCase::B;
  return even ? BasinCase::D : BasinCase::C;
}

int FamilyParams::z_sign() const noexcept {
  return parity_sign(static_cast<long>(n()) - rho);
}

int FamilyParams::factor_power(std::size_t i) const noexcept {
  return degrees[i - 1] + degrees[i];
}

int FamilyParams::factor_exponent(std::size_t i) const noexcept {
  return parity_sign(static_cast<long>(n()) - static_cast<long>(i) - rho);
}

int FamilyParams::infinity_exponent() const noexcept {
  return parity_sign(1 - rho) * degrees.back();
}

FamilyParams make_params(int rho, DegreeVector degrees, std::vector<double> a, double tau) {
  if (rho != 0 && rho != 1) throw Error(ErrorCode::InvalidArgument, "rho must be 0 or 1");
  if (degrees.size() < 2 || !satisfies_module_inequality(degrees)) {
    throw Error(ErrorCode::InvalidDegrees, "need n >= 2 degrees, each >= 2, with sum 1/d_i < 1");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::NonPositiveTau, "tau must be a positive number");
  }
  if (a.size() + 1 != degrees.size()) {
    throw Error(ErrorCode::InvalidArgument, "need n - 1 parameters a_i");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0) || !std::isfinite(a[i])) {
      throw Error(ErrorCode::InvalidArgument, "parameters a_i must be positive");
    }
    if (i > 0 && !(a[i - 1] < a[i])) {
      throw Error(ErrorCode::InvalidArgument, "parameters a_i must be strictly increasing");
    }
  }
  return FamilyParams{rho, std::move(degrees), std::move(a), tau};
}

FamilyParams parameter_schedule(int rho, const DegreeVector& degrees, double tau) {
  if (degrees.size() < 2 || !satisfies_module_inequality(degrees)) {
    throw Error(ErrorCode::InvalidDegrees, "need n >= 2 degrees, each >= 2, with sum 1/d_i < 1");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::NonPositiveTau, "tau must be a positive number");
  }
  if (rho != 0 && rho != 1) throw Error(ErrorCode::InvalidArgument, "rho must be 0 or 1");
  const std::size_t n = degrees.size();
  const double d_n = degrees.back();
  double eta = 0.0;
  for (int d : degrees) eta += 1.0 / d;
  const double d_max = *std::max_element(degrees.begin(), degrees.end());
  double u = 0.0;
  double v = 0.0;
  if (rho == 1) {
    u = tau * std::pow(d_max, -5.0);
    v = tau * std::pow(d_max, -2.0);
  } else {
    u = std::pow(tau, 1.0 + 1.0 / d_n + 2.0 * (1.0 - eta) / 3.0);
    v = std::pow(tau, 1.0 / d_n + (1.0 - eta) / 3.0);
  }
  std::vector<double> a(n - 1);
  a[n - 2] = std::pow(v, 1.0 / d_n);
  for (std::size_t i = n - 2; i-- > 0;) {
    a[i] = std::pow(u, 1.0 / degrees[i + 1]) * a[i + 1];
  }
  return make_params(rho, degrees, std::move(a), tau);
}

Complex evaluate(const FamilyParams& p, Complex z) {
  const int s = p.z_sign();
  if (std::isinf(z.real()) || std::isinf(z.imag())) {
    return p.infinity_exponent() > 0 ? kInfinity : Complex{0.0, 0.0};
  }
  if (z == Complex{0.0, 0.0}) return s > 0 ? Complex{0.0, 0.0} : kInfinity;
  Complex value = ipow(z, s * p.degrees.front());
  for (const auto& f : factors_of(p)) {
    const Complex g = ipow(z, f.power) - f.constant;
    if (f.exponent > 0) {
      value *= g;
    } else {
      if (std::abs(g) <= kPoleDistance) throw Error(ErrorCode::PoleHit, "evaluation at a pole");
      value /= g;
    }
  }
  return value;
}

ValueAndDerivative evaluate_with_derivative(const FamilyParams& p, Complex z) {
  if (z == Complex{0.0, 0.0}) throw Error(ErrorCode::InvalidArgument, "derivative needs z != 0");
  const auto fs = factors_of(p);
  const int m = p.z_sign() * p.degrees.front();
  // product rule over z^m and each factor, without dividing by vanishing terms
  std::vector<Complex> g(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    g[i] = ipow(z, fs[i].power) - fs[i].constant;
    if (fs[i].exponent < 0 && std::abs(g[i]) <= kPoleDistance) {
      throw Error(ErrorCode::PoleHit, "evaluation at a pole");
    }
  }
  auto term = [&](std::size_t i) { return fs[i].exponent > 0 ? g[i] : 1.0 / g[i]; };
  Complex value = ipow(z, m);
  for (std::size_t i = 0; i < fs.size(); ++i) value *= term(i);

  Complex derivative = static_cast<double>(m) * ipow(z, m - 1);
  for (std::size_t i = 0; i < fs.size(); ++i) derivative *= term(i);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const double k = fs[i].power;
    const Complex dg = k * ipow(z, fs[i].power - 1);
    Complex piece = ipow(z, m) * (fs[i].exponent > 0 ? dg : -dg / (g[i] * g[i]));
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (j != i) piece *= term(j);
    }
    derivative += piece;
  }
  return {value, derivative};
}

int degree_from_exponents(const FamilyParams& p) {
  int numerator = 0;
  int denominator = 0;
  (p.z_sign() > 0 ? numerator : denominator) += p.degrees.front();
  for (std::size_t i = 1; i < p.n(); ++i) {
    (p.factor_exponent(i) > 0 ? numerator : denominator) += p.factor_power(i);
  }
  return std::max(numerator, denominator);
}

double AnnulusRadii::group_inner(std::size_t i) const {
  return i == 1 ? r0 : r_plus.at(i - 2);
}

double AnnulusRadii::group_outer(std::size_t i) const {
  return i == r_minus.size() + 1 ? r_inf : r_minus.at(i - 1);
}

bool AnnulusRadii::chain_holds(const std::vector<double>& a) const {
  double previous = r0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(previous < r_minus[i] && r_minus[i] < a[i] && a[i] < r_plus[i])) return false;
    previous = r_plus[i];
  }
  return previous < r_inf;
}

AnnulusRadii compute_radii(const FamilyParams& p, double alpha_margin) {
  AnnulusRadii r;
  r.alpha_margin = alpha_margin;
  r.r0 = p.tau;
  const double shrink = std::pow(p.tau, alpha_margin);
  for (double a : p.a) {
    r.r_minus.push_back(shrink * a);
    r.r_plus.push_back(a / shrink);
  }
  r.r_inf = std::pow(2.0 / p.tau, 1.0 / p.degrees.back());
  return r;
}

AnnulusRadii annulus_radii(const FamilyParams& p, double alpha_margin) {
  if (!(alpha_margin > 0.0 && alpha_margin < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "alpha margin must lie in (0, 1/2)");
  }
  auto r = compute_radii(p, alpha_margin);
  if (!r.chain_holds(p.a)) {
    throw Error(ErrorCode::ChainViolation,
                "radii R0 < R_i^- < a_i < R_i^+ < R_inf do not interleave; tau is too large");
  }
  return r;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::InnerBasin: return "InnerBasin";
    case Verdict::OuterBasin: return "OuterBasin";
    case Verdict::JuliaCandidate: return "JuliaCandidate";
  }
  return "?";
}

OrbitClass classify_point(const FamilyParams& p, const AnnulusRadii& radii, Complex z,
                          int max_iter) {
  if (max_iter < 0) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 0");
  const BasinCase basin = p.basin_case();
  for (int step = 0;; ++step) {
    const double modulus = std::abs(z);
    const bool inner = modulus < radii.r0;
    const bool outer = modulus > radii.r_inf;
    if (inner || outer) {
      Verdict v = inner ? Verdict::InnerBasin : Verdict::OuterBasin;
      if (basin == BasinCase::A) v = Verdict::OuterBasin;
      if (basin == BasinCase::D) v = Verdict::InnerBasin;
      return {v, step, modulus};
    }
    if (step == max_iter) return {Verdict::JuliaCandidate, max_iter, modulus};
    try {
      z = evaluate(p, z);
    } catch (const Error&) {
      z = kInfinity;
    }
  }
}

CriticalPoints critical_points(const FamilyParams& p) {
  const auto fs = factors_of(p);
  std::vector<Complex> z;
  std::vector<double> log_a;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    log_a.push_back(std::log(p.a[i]));
    const int k = fs[i].power;
    for (int j = 0; j < k; ++j) {
      const double angle = 2.0 * std::numbers::pi * (j + 0.3) / k;
      z.push_back(std::polar(p.a[i], angle));
    }
  }

  CriticalPoints out;
  auto residual = [&](Complex w) {
    const auto t = log_derivative_terms(p, fs, w);
    return std::abs(t.g) / t.scale;
  };
  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    out.sweeps = sweep;
    for (std::size_t j = 0; j < z.size(); ++j) {
      const auto t = log_derivative_terms(p, fs, z[j]);
      // Newton step for P = G * Q: P / P' = 1 / (G'/G + Q'/Q)
      const Complex newton = 1.0 / (t.g_prime / t.g + t.q_log);
      Complex repulsion{0.0, 0.0};
      for (std::size_t l = 0; l < z.size(); ++l) {
        if (l != j) repulsion += 1.0 / (z[j] - z[l]);
      }
      const Complex step = newton / (1.0 - newton * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[j] -= step;
    }
    double worst = 0.0;
    for (const auto& w : z) worst = std::max(worst, residual(w));
    out.max_residual = worst;
    if (worst < kRootTolerance) break;
  }
  if (!(out.max_residual < kRootTolerance)) {
    throw Error(ErrorCode::RootFindingDiverged, "critical point iteration did not converge");
  }
  out.points = std::move(z);
  for (const auto& w : out.points) {
    const double lw = std::log(std::abs(w));
    std::size_t best = 0;
    for (std::size_t i = 1; i < log_a.size(); ++i) {
      if (std::abs(lw - log_a[i]) < std::abs(lw - log_a[best])) best = i;
    }
    out.group.push_back(static_cast<int>(best + 1));
  }
  return out;
}

int winding_number(const FamilyParams& p, double radius, std::size_t samples) {
  if (samples < 3) throw Error(ErrorCode::InvalidArgument, "winding number needs samples >= 3");
  double turns = 0.0;
  Complex previous = evaluate(p, Complex{radius, 0.0});
  for (std::size_t j = 1; j <= samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    const Complex current = evaluate(p, std::polar(radius, angle));
    turns += std::arg(current / previous);
    previous = current;
  }
  return static_cast<int>(std::lround(turns / (2.0 * std::numbers::pi)));
}

StructureReport verify_structure(const FamilyParams& p, const AnnulusRadii& radii,
                                 std::size_t samples) {
  if (samples < 256) throw Error(ErrorCode::InvalidArgument, "verification needs >= 256 samples");
  StructureReport report;

  // (1) every critical value is trapped
  try {
    const auto crit = critical_points(p);
    report.critical_point_count = crit.points.size();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : crit.points) {
      double value = 0.0;
      try {
        value = std::abs(evaluate(p, c));
      } catch (const Error&) {
        value = std::numeric_limits<double>::infinity();
      }
      // log-distance into the trap; positive when trapped
      const double margin = std::max(std::log(radii.r0 / value), std::log(value / radii.r_inf));
      worst = std::min(worst, margin);
    }
    report.worst_critical_value_margin = worst;
    report.critical_values_pass = worst > 0.0;
  } catch (const Error& e) {
    report.critical_error = e.what();
    report.critical_values_pass = false;
  }

  // (3) the radii chain
  report.chain_pass = radii.chain_holds(p.a);

  // (2) boundary circles of each group annulus
  const std::size_t n = p.n();
  std::vector<std::pair<std::string, double>> circles;
  circles.emplace_back("R0", radii.r0);
  for (std::size_t i = 1; i < n; ++i) {
    circles.emplace_back("R" + std::to_string(i) + "-", radii.r_minus[i - 1]);
    circles.emplace_back("R" + std::to_string(i) + "+", radii.r_plus[i - 1]);
  }
  circles.emplace_back("Rinf", radii.r_inf);
  const double inner_limit = radii.r_minus.front();
  const double outer_limit = radii.r_plus.back();

  report.circles_pass = true;
  for (std::size_t idx = 0; idx < circles.size(); ++idx) {
    CircleCheck c;
    c.label = circles[idx].first;
    c.radius = circles[idx].second;
    c.group = idx / 2 + 1;
    c.inner_side = is_inner_image_side(p, idx);
    c.expected_winding = p.z_sign() * ((c.group - 1) % 2 == 0 ? 1 : -1) * p.degrees[c.group - 1];
    try {
      c.min_abs = std::numeric_limits<double>::infinity();
      c.max_abs = 0.0;
      c.fatou_ok = true;
      for (std::size_t j = 0; j < samples; ++j) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
        const Complex w = evaluate(p, std::polar(c.radius, angle));
        c.min_abs = std::min(c.min_abs, std::abs(w));
        c.max_abs = std::max(c.max_abs, std::abs(w));
        if (classify_point(p, radii, w, kFatouBudget).verdict == Verdict::JuliaCandidate) {
          c.fatou_ok = false;
        }
      }
      c.in_trap = c.inner_side ? c.max_abs < radii.r0 : c.min_abs > radii.r_inf;
      c.side_ok = c.inner_side ? c.max_abs < inner_limit : c.min_abs > outer_limit;
      c.winding = winding_number(p, c.radius, samples);
      c.pass = c.side_ok && c.fatou_ok && c.winding == c.expected_winding;
    } catch (const Error&) {
      c.pass = false;
    }
    report.circles_pass = report.circles_pass && c.pass;
    report.circles.push_back(std::move(c));
  }
  return report;
}

int depth_matched_iterations(const FamilyParams& p, std::size_t pixels) {
  if (pixels < 2) return 1;
  return static_cast<int>(std::ceil(std::log(static_cast<double>(pixels)) /
                                    std::log(static_cast<double>(p.max_degree()))));
}

JuliaRender render_julia(const FamilyParams& p, const AnnulusRadii& radii,
                         const JuliaRenderOptions& o) {
  if (o.width == 0 || o.height == 0 || o.width > 1u << 15 || o.height > 1u << 15) {
    throw Error(ErrorCode::BadImageDims, "image dimensions must be in [1, 32768]");
  }
  if (!(o.x_min < o.x_max && o.y_min < o.y_max)) {
    throw Error(ErrorCode::InvalidArgument, "window must have positive extent");
  }
  if (o.max_iter < 0) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 0");
  JuliaRender out;
  out.mask = Mask(o.width, o.height);
  out.escape_steps.assign(o.width * o.height, 0);
  out.verdicts.assign(o.width * o.height, Verdict::JuliaCandidate);
  const double dx = (o.x_max - o.x_min) / static_cast<double>(o.width);
  const double dy = (o.y_max - o.y_min) / static_cast<double>(o.height);
  parallel_for(o.height, [&](std::size_t row) {
    const double y = o.y_max - (static_cast<double>(row) + 0.5) * dy;
    for (std::size_t col = 0; col < o.width; ++col) {
      const double x = o.x_min + (static_cast<double>(col) + 0.5) * dx;
      const auto cls = classify_point(p, radii, Complex{x, y}, o.max_iter);
      const std::size_t idx = row * o.width + col;
      out.escape_steps[idx] = cls.steps;
      out.verdicts[idx] = cls.verdict;
      if (cls.verdict == Verdict::JuliaCandidate) out.mask.bits[idx] = 1;
    }
  });
  return out;
}

}  // namespace cantor
