// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/combinatorics.hpp"
#include "cantor/dimension.hpp"
#include "cantor/error.hpp"
#include "cantor/hausdorff_bounds.hpp"
#include "cantor/rational_family.hpp"
#include "cantor/standard_cantor.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << "[" << why << "] ";
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Kind kind_for(const DegreeVector& d) { return d.size() % 2 == 0 ? Kind::I : Kind::II; }

void table_one(Outcome& out) {
  const auto start = Clock::now();
  const auto& expected = oracle::table_one();
  int matches = 0;
  for (int d = 5; d <= 36; ++d) {
    const auto n = count_components(d);
    if (n == expected[d - 5]) {
      ++matches;
    } else {
      out.require(false, "N(" + std::to_string(d) + ") = " + std::to_string(n));
    }
  }
  const double t = seconds_since(start);
  out.require(t < 5.0, "runtime");
  out.detail << matches << "/32 exact, " << t << " s";
}

void counting_cross_check(Outcome& out) {
  for (int d = 2; d <= 20; ++d) {
    const auto formula = count_components(d);
    const auto brute = oracle::brute_force_class_count(d);
    out.require(formula == brute, "d=" + std::to_string(d));
  }
  out.detail << "formula = unpruned class count for d <= 20";
}

void moran_closed_forms(Outcome& out) {
  double worst = 0.0;
  for (auto [d0, n] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 4}}) {
    const DegreeVector d(n, d0);
    const double expected = 1.0 + std::log(n) / std::log(d0);
    worst = std::max(worst, std::abs(conformal_dimension(d) - expected));
  }
  out.require(worst <= 1e-10, "closed form");
  double worst_residual = 0.0;
  std::mt19937 rng(101);
  std::vector<DegreeVector> pool;
  for (int d = 5; d <= 24; ++d) {
    for (auto& v : enumerate_degree_vectors(d)) pool.push_back(v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto s = alpha_root(pool[i]);
    double sum = 0.0;
    for (int x : pool[i]) sum += std::pow(static_cast<double>(x), -s.exponent);
    worst_residual = std::max(worst_residual, std::abs(sum - 1.0));
  }
  out.require(worst_residual <= 1e-12, "residual");
  out.detail << "closed-form error " << worst << ", max residual " << worst_residual << " over 200 roots";
}

void ifs_golden(Outcome& out) {
  struct Golden {
    Kind kind;
    DegreeVector d;
    std::vector<double> points;
    std::vector<std::pair<int, double>> maps;  // exponent, log coefficient
  };
  const std::vector<Golden> cases{
      {Kind::I, {3, 3}, {}, {{-3, -3.0}, {3, 0.0}}},
      {Kind::II, {4, 4, 4}, {-1, -0.75, -0.625, -0.375, -0.25, 0}, {{4, 3.0}, {-4, -2.5}, {4, 0.0}}},
      {Kind::I, {3, 2}, {-1, -2.0 / 3, -0.5, 0}, {{-3, -3.0}, {2, 0.0}}},
  };
  double worst = 0.0;
  for (const auto& g : cases) {
    const auto partition = g.points.empty() ? default_partition(g.d) : partition_from_points(g.d, g.points);
    const auto ifs = build_ifs(validate(g.kind, g.d), partition);
    out.require(ifs.maps.size() == g.maps.size(), "map count");
    for (std::size_t i = 0; i < g.maps.size() && i < ifs.maps.size(); ++i) {
      out.require(ifs.maps[i].exponent() == g.maps[i].first, "exponent");
      const double want = std::exp(g.maps[i].second);
      worst = std::max(worst, std::abs(ifs.maps[i].coefficient() - want) / want);
    }
  }
  out.require(worst <= 1e-14, "coefficient");
  out.detail << "3 systems, max relative coefficient error " << worst;
}

void moran_self_consistency(Outcome& out) {
  std::mt19937 rng(2024);
  std::vector<DegreeVector> pool;
  for (int d = 5; d <= 18; ++d) {
    for (auto& v : enumerate_degree_vectors(d)) {
      if (v.size() <= 4) pool.push_back(v);
    }
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  double worst = 0.0;
  std::ostringstream names;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& d = pool[i];
    const Kind kind = d.size() % 2 == 0 ? Kind::I : (i % 2 == 0 ? Kind::II : Kind::III);
    const auto ifs = build_ifs(validate(kind, d), default_partition(d));
    const double alpha = alpha_root(d).exponent;
    for (int k = 0; k <= 6; ++k) {
      double sum = 0.0;
      for (const auto& c : cylinders(ifs, k)) sum += std::pow(c.length(), alpha);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    names << "(" << kind_name(kind);
    for (int x : d) names << "," << x;
    names << ") ";
  }
  out.require(worst <= 1e-10, "sum");
  out.detail << names.str() << "max |sum - 1| = " << worst;
}

void box_count_oracle(Outcome& out) {
  const auto start = Clock::now();
  const auto ifs = build_ifs(validate(Kind::I, {3, 3}), default_partition({3, 3}));
  RenderOptions o;
  o.width = o.height = 2048;
  o.depth = 24;
  const auto mask = render_standard(ifs, o);
  const auto sizes = default_box_sizes(o.width, o.height);
  const auto fit = box_counting_dimension(mask, 2.0 / 2048, sizes);
  const double t = seconds_since(start);
  const double target = 1.0 + std::log(2.0) / std::log(3.0);
  out.require(std::abs(fit.slope - target) < 0.1, "slope");
  out.require(t < 30.0, "runtime");
  out.detail << "slope " << fit.slope << " (target " << target << "), " << t << " s";
}

void family_structure(Outcome& out) {
  const auto p = parameter_schedule(1, {3, 3}, 1e-5);
  const auto r = annulus_radii(p, 0.1);
  const auto report = verify_structure(p, r);
  out.require(report.critical_values_pass, "critical values");
  out.require(report.circles_pass, "circles");
  out.require(report.chain_pass, "chain");
  const auto cp = critical_points(p);
  out.require(cp.points.size() == 6, "critical count");
  for (const auto& z : cp.points) {
    out.require(std::abs(z) > r.r_minus[0] && std::abs(z) < r.r_plus[0], "critical modulus");
  }
  std::ostringstream windings;
  for (const auto& c : report.circles) {
    out.require(std::abs(c.winding) == p.degrees[c.group - 1] && c.winding == c.expected_winding,
                "winding " + c.label);
    windings << c.label << ":" << c.winding << " ";
  }
  out.detail << cp.points.size() << " critical points, windings " << windings.str();
}

void mcmullen_reduction(Outcome& out) {
  const auto p = parameter_schedule(1, {3, 3}, 1e-5);
  const double c = std::pow(p.a[0], 6);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> lr(std::log(1e-3), std::log(1e2));
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::acos(-1.0));
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Complex z = std::polar(std::exp(lr(rng)), th(rng));
    const Complex want = std::pow(z, 3) - c * std::pow(z, -3);
    worst = std::max(worst, std::abs(evaluate(p, z) - want) / std::abs(want));
  }
  out.require(worst <= 1e-12, "relative error");
  out.detail << "max relative error " << worst << " at 1000 points";
}

void bracket_convergence(Outcome& out) {
  const auto start = Clock::now();
  const double target = 1.0 + std::log(2.0) / std::log(3.0);
  double previous = std::numeric_limits<double>::infinity();
  DimensionBounds last;
  for (double tau : {1e-2, 1e-4, 1e-6}) {
    const auto p = parameter_schedule(1, {3, 3}, tau);
    const auto r = annulus_radii(p, 0.1);
    last = hdim_bracket(branch_envelopes(p, r));
    out.require(last.width() < previous, "width not decreasing");
    out.require(last.lower > 1.0 && last.upper < 2.0, "outside (1,2)");
    out.detail << "tau=" << tau << ": [" << last.lower << ", " << last.upper << "] ";
    previous = last.width();
  }
  out.require(last.contains(target), "target");
  out.require(last.width() < 0.05, "final width");
  const double t = seconds_since(start);
  out.require(t < 60.0, "runtime");
  out.detail << t << " s";
}

void range_law(Outcome& out) {
  std::vector<std::pair<int, DegreeVector>> pool;
  for (int d = 5; d <= 16; ++d) {
    for (auto& v : enumerate_degree_vectors(d)) {
      for (int rho : {0, 1}) pool.emplace_back(rho, v);
    }
  }
  std::mt19937 rng(1729);
  std::shuffle(pool.begin(), pool.end(), rng);
  int produced = 0;
  int skipped = 0;
  for (const auto& [rho, d] : pool) {
    if (produced == 20) break;
    // smallest admissible tau on the ladder, for the widest margin that has one
    std::optional<DimensionBounds> bracket;
    for (double alpha : {0.1, 0.05}) {
      for (int k = 4; k <= 16; k += 2) {
        const auto p = parameter_schedule(rho, d, std::pow(10.0, -k));
        const auto r = compute_radii(p, alpha);
        if (!r.chain_holds(p.a) || !verify_structure(p, r, 512).pass()) continue;
        bracket = hdim_bracket(branch_envelopes(p, r, {64, 256}));
      }
      if (bracket) break;
    }
    if (!bracket) {
      ++skipped;
      continue;
    }
    ++produced;
    const double cd = conformal_dimension(d);
    const bool ok = bracket->lower > 1.0 && bracket->upper < 2.0 && cd > 1.0 && cd < 2.0;
    std::ostringstream name;
    name << "rho=" << rho;
    for (int x : d) name << "," << x;
    out.require(ok, name.str());
  }
  out.require(produced == 20, "fewer than 20 brackets");
  out.detail << produced << " brackets and conformal dimensions in (1,2); " << skipped
             << " drawn combinations had no admissible tau";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"table-1-reproduction", table_one},
      {"counting-cross-check", counting_cross_check},
      {"moran-closed-forms", moran_closed_forms},
      {"ifs-golden", ifs_golden},
      {"moran-self-consistency", moran_self_consistency},
      {"box-count-oracle", box_count_oracle},
      {"family-structure", family_structure},
      {"mcmullen-reduction", mcmullen_reduction},
      {"bracket-convergence", bracket_convergence},
      {"range-law", range_law},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "threw: " << e.what();
    }
    failures += !out.pass;
    std::printf("%s %s: %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
