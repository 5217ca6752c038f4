#include "cantor/hausdorff_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cantor/error.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

namespace {

Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  for (; k > 0; k >>= 1) {
    if (k & 1) result *= z;
    z *= z;
  }
  return result;
}

}  // namespace

Complex log_map_derivative(const FamilyParams& p, Complex Z) {
  const Complex z = std::exp(Z);
  Complex sum = static_cast<double>(p.degrees.front());
  for (std::size_t i = 1; i < p.n(); ++i) {
    const int k = p.factor_power(i);
    const Complex zk = ipow(z, k);
    const double c = ipow(Complex{p.a[i - 1], 0.0}, k).real();
    const Complex denom = zk - c;
    // Z is only known to rounding, so a root is detected relative to a_i^k
    if (std::abs(denom) <= 1e-14 * c) throw Error(ErrorCode::PoleHit, "log map derivative at a root");
    sum += (i % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(k) * zk / denom;
  }
  return static_cast<double>(p.z_sign()) * sum;
}

std::vector<BranchEnvelope> sample_envelopes(const FamilyParams& p, const AnnulusRadii& radii,
                                             EnvelopeGrid grid) {
  if (grid.radial < 64 || grid.angular < 256) {
    throw Error(ErrorCode::GridTooCoarse, "envelope grid must be at least 64 x 256");
  }
  std::vector<BranchEnvelope> out;
  for (std::size_t i = 1; i <= p.n(); ++i) {
    const double lo = std::log(radii.group_inner(i));
    const double hi = std::log(radii.group_outer(i));
    // |F'| on a (radial x angular) grid, rows parallel
    std::vector<double> values(grid.radial * grid.angular);
    parallel_for(grid.radial, [&](std::size_t r) {
      const double x = lo + (hi - lo) * static_cast<double>(r) / static_cast<double>(grid.radial - 1);
      for (std::size_t t = 0; t < grid.angular; ++t) {
        const double y = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(grid.angular);
        values[r * grid.angular + t] = std::abs(log_map_derivative(p, Complex{x, y}));
      }
    });
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = 0.0;
    double delta = 0.0;
    for (std::size_t r = 0; r < grid.radial; ++r) {
      for (std::size_t t = 0; t < grid.angular; ++t) {
        const double v = values[r * grid.angular + t];
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
        const double right = values[r * grid.angular + (t + 1) % grid.angular];
        delta = std::max(delta, std::abs(v - right));
        if (r + 1 < grid.radial) {
          delta = std::max(delta, std::abs(v - values[(r + 1) * grid.angular + t]));
        }
      }
    }
    BranchEnvelope e;
    e.group = i;
    e.sampled_min = vmin;
    e.sampled_max = vmax;
    e.min_abs_deriv = vmin - delta;
    e.max_abs_deriv = vmax + delta;
    e.multiplicity = p.degrees[i - 1];
    e.grid = grid;
    out.push_back(e);
  }
  return out;
}

std::vector<BranchEnvelope> branch_envelopes(const FamilyParams& p, const AnnulusRadii& radii,
                                             EnvelopeGrid grid) {
  if (grid.radial < 64 || grid.angular < 256) {
    throw Error(ErrorCode::GridTooCoarse, "envelope grid must be at least 64 x 256");
  }
  if (!verify_structure(p, radii).pass()) {
    throw Error(ErrorCode::StructureUnverified,
                "verify_structure failed; tau is not known to be admissible");
  }
  return sample_envelopes(p, radii, grid);
}

DimensionBounds hdim_bracket(const std::vector<BranchEnvelope>& envelopes) {
  if (envelopes.empty()) throw Error(ErrorCode::InvalidArgument, "no envelopes");
  std::vector<ContractionFactor> fast, slow;
  for (const auto& e : envelopes) {
    if (!(e.min_abs_deriv > 1.0)) {
      throw Error(ErrorCode::NotExpanding,
                  "group " + std::to_string(e.group) + " has |F'| <= 1 somewhere");
    }
    if (e.max_abs_deriv < e.min_abs_deriv || e.multiplicity < 1) {
      throw Error(ErrorCode::InvalidArgument, "malformed envelope");
    }
    fast.push_back({1.0 / e.max_abs_deriv, e.multiplicity});
    slow.push_back({1.0 / e.min_abs_deriv, e.multiplicity});
  }
  const double lower = solve_similarity_dimension(fast).exponent;
  const double upper = solve_similarity_dimension(slow).exponent;
  return {lower, upper, BoundsMethod::FalconerBracket};
}

}  // namespace cantor
