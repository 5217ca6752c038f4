#include <cmath>
#include <numbers>
#include <random>

#include "cantor/error.hpp"
#include "cantor/hausdorff_bounds.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cantor;

namespace {

struct Setup {
  FamilyParams params;
  AnnulusRadii radii;
};

Setup family(double tau, DegreeVector d = {3, 3}, int rho = 1, double alpha = 0.1) {
  auto p = parameter_schedule(rho, d, tau);
  auto r = annulus_radii(p, alpha);
  return {p, r};
}

}  // namespace

TEST_SUITE("hausdorff_bounds") {

TEST_CASE("log map derivative follows the chain rule") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> im(0.0, 2.0 * std::numbers::pi);
  for (int rho : {0, 1}) {
    for (const DegreeVector& d : {DegreeVector{3, 3}, {3, 4, 5}, {3, 5, 5, 7}}) {
      const auto p = parameter_schedule(rho, d, 1e-3);
      std::uniform_real_distribution<double> re(std::log(p.a.front() / 3), std::log(3.0));
      for (int k = 0; k < 1000 / 6; ++k) {
        const Complex Z{re(rng), im(rng)};
        const auto o = oracle::product_rule(rho, d, p.a, std::exp(std::complex<long double>(Z.real(), Z.imag())));
        const auto ratio = std::exp(std::complex<long double>(Z.real(), Z.imag())) * o.derivative / o.value;
        const Complex want{static_cast<double>(ratio.real()), static_cast<double>(ratio.imag())};
        CHECK(std::abs(log_map_derivative(p, Z) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("log map derivative limits") {
  for (int rho : {0, 1}) {
    const DegreeVector d{3, 4, 5};
    const auto p = parameter_schedule(rho, d, 1e-4);
    const Complex far = log_map_derivative(p, Complex{std::log(1e4), 0.3});
    CHECK(std::abs(far) == doctest::Approx(5.0).epsilon(1e-9));
    const Complex near = log_map_derivative(p, Complex{std::log(p.a[0] * 1e-6), 0.3});
    CHECK(near.real() == doctest::Approx(3.0 * p.z_sign()).epsilon(1e-9));
  }
  const auto p = parameter_schedule(1, {3, 3}, 1e-4);
  CHECK_THROWS_AS(log_map_derivative(p, Complex{std::log(p.a[0]), 0.0}), Error);
}

TEST_CASE("envelopes") {
  const auto s = family(1e-5);
  const auto env = branch_envelopes(s.params, s.radii);
  REQUIRE(env.size() == 2);
  for (const auto& e : env) {
    CHECK(e.min_abs_deriv > 1.0);
    CHECK(e.min_abs_deriv <= e.sampled_min);
    CHECK(e.sampled_min <= e.sampled_max);
    CHECK(e.sampled_max <= e.max_abs_deriv);
    CHECK(e.multiplicity == 3);
  }
  CHECK(env[0].min_abs_deriv < 3.0);
  CHECK(env[0].max_abs_deriv > 3.0);

  // wider for larger tau, and shrinking onto d_i
  double previous_width = std::numeric_limits<double>::infinity();
  double previous_gap = std::numeric_limits<double>::infinity();
  for (double tau : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const auto t = family(tau);
    const auto e = branch_envelopes(t.params, t.radii, {64, 256});
    for (const auto& g : e) {
      const double width = g.max_abs_deriv - g.min_abs_deriv;
      const double gap = std::max(g.max_abs_deriv - 3.0, 3.0 - g.min_abs_deriv);
      CHECK(width < previous_width * 1.0001);
      CHECK(gap < previous_gap * 1.0001);
    }
    previous_width = e[0].max_abs_deriv - e[0].min_abs_deriv;
    previous_gap = std::max(e[0].max_abs_deriv - 3.0, 3.0 - e[0].min_abs_deriv);
  }
  CHECK(previous_gap < 1e-3);

  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([&] { branch_envelopes(s.params, s.radii, {32, 512}); }) == ErrorCode::GridTooCoarse);
  CHECK(code([&] { branch_envelopes(s.params, s.radii, {128, 128}); }) == ErrorCode::GridTooCoarse);
  const auto q = parameter_schedule(0, {6, 3}, 1e-6);
  CHECK(code([&] { branch_envelopes(q, annulus_radii(q, 0.1)); }) == ErrorCode::StructureUnverified);
}

TEST_CASE("brackets") {
  // pinched envelopes give the limiting Moran system
  for (const DegreeVector& d : {DegreeVector{3, 3}, {3, 4, 5}, {2, 3}}) {
    std::vector<BranchEnvelope> env;
    for (std::size_t i = 0; i < d.size(); ++i) {
      BranchEnvelope e;
      e.group = i + 1;
      e.min_abs_deriv = e.max_abs_deriv = d[i];
      e.multiplicity = d[i];
      env.push_back(e);
    }
    const auto b = hdim_bracket(env);
    CHECK(b.lower == doctest::Approx(conformal_dimension(d)).epsilon(1e-11));
    CHECK(b.upper == doctest::Approx(conformal_dimension(d)).epsilon(1e-11));
    CHECK(b.method == BoundsMethod::FalconerBracket);
  }

  const double target = 1.0 + std::log(2.0) / std::log(3.0);
  const auto s = family(1e-5);
  const auto b = hdim_bracket(branch_envelopes(s.params, s.radii));
  CHECK(b.contains(target));
  CHECK(b.width() < 0.05);
  CHECK(b.lower >= conformal_dimension({3, 3}) - 0.02);

  std::vector<BranchEnvelope> slow(1);
  slow[0].min_abs_deriv = 0.9;
  slow[0].max_abs_deriv = 2.0;
  slow[0].multiplicity = 3;
  try {
    hdim_bracket(slow);
    FAIL("expected NotExpanding");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotExpanding);
  }
}

TEST_CASE("brackets approach 1 + alpha") {
  struct Case {
    int rho;
    DegreeVector d;
    double alpha;
  };
  for (const auto& [rho, d, alpha] : {Case{1, {3, 3}, 0.1}, Case{0, {3, 3}, 0.1}, Case{1, {6, 5, 5}, 0.1}}) {
    const double limit = conformal_dimension(d);
    double lo_gap = 1.0;
    double hi_gap = 1.0;
    for (int k = 2; k <= 6; ++k) {
      const auto p = parameter_schedule(rho, d, std::pow(10.0, -k));
      const auto radii = compute_radii(p, alpha);
      if (!verify_structure(p, radii).pass()) continue;
      const auto b = hdim_bracket(sample_envelopes(p, radii, {64, 256}));
      CHECK(b.lower <= b.upper);
      CHECK(std::abs(b.lower - limit) < lo_gap);
      CHECK(std::abs(b.upper - limit) < hi_gap);
      lo_gap = std::abs(b.lower - limit);
      hi_gap = std::abs(b.upper - limit);
    }
    CHECK(lo_gap < 0.01);
    CHECK(hi_gap < 0.01);
  }
}

}

TEST_SUITE("hausdorff_bounds") {

TEST_CASE("box count of the rendered Julia set falls near the bracket") {
  const auto p = parameter_schedule(1, {3, 3}, 1e-5);
  const auto r = annulus_radii(p, 0.1);
  const auto b = hdim_bracket(branch_envelopes(p, r));
  JuliaRenderOptions o;
  o.width = o.height = 2048;
  o.max_iter = depth_matched_iterations(p, o.width);
  CHECK(o.max_iter == 7);
  const auto img = render_julia(p, r, o);
  const auto sizes = default_box_sizes(o.width, o.height);
  const auto fit = box_counting_dimension(img.mask, (o.x_max - o.x_min) / o.width, sizes);
  CHECK(fit.slope > b.lower - 0.1);
  CHECK(fit.slope < b.upper + 0.1);
}

}
