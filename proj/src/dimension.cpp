#include "cantor/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cantor/error.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 64;

// f strictly decreasing with f(lo) > 0 > f(hi).
template <class F>
MoranSolution bisect(F&& f, double lo, double hi) {
  MoranSolution out;
  double mid = 0.5 * (lo + hi);
  double value = f(mid);
  for (int it = 1; it <= kMaxIterations; ++it) {
    out.iterations = it;
    if (value > 0.0) {
      lo = mid;
    } else if (value < 0.0) {
      hi = mid;
    } else {
      lo = hi = mid;
      break;
    }
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) {
      mid = next;
      value = f(mid);
      break;
    }
    mid = next;
    value = f(mid);
    if (hi - lo <= kTolerance && std::abs(value) <= kTolerance) break;
  }
  out.exponent = mid;
  out.residual = value;
  out.bracket_lower = lo;
  out.bracket_upper = hi;
  return out;
}

}  // namespace

std::string_view method_name(BoundsMethod method) noexcept {
  switch (method) {
    case BoundsMethod::MoranExact: return "MoranExact";
    case BoundsMethod::FalconerBracket: return "FalconerBracket";
    case BoundsMethod::BoxCount: return "BoxCount";
  }
  return "?";
}

MoranSolution alpha_root(const DegreeVector& degrees) {
  if (degrees.size() < 2 || !satisfies_module_inequality(degrees)) {
    throw Error(ErrorCode::InvalidDegrees,
                "alpha_root needs n >= 2 degrees, each >= 2, with sum 1/d_i < 1");
  }
  std::vector<double> logs;
  logs.reserve(degrees.size());
  for (int d : degrees) logs.push_back(std::log(static_cast<double>(d)));
  auto f = [&](double a) {
    double sum = 0.0;
    for (double l : logs) sum += std::exp(-a * l);
    return sum - 1.0;
  };
  // f(0) = n - 1 > 0 and f(1) = sum 1/d_i - 1 < 0
  return bisect(f, 0.0, 1.0);
}

double conformal_dimension(const DegreeVector& degrees) {
  return 1.0 + alpha_root(degrees).exponent;
}

MoranSolution solve_similarity_dimension(std::span<const ContractionFactor> factors) {
  long total = 0;
  for (const auto& f : factors) {
    if (!(f.ratio > 0.0 && f.ratio < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "contraction ratios must lie in (0, 1)");
    }
    if (f.multiplicity < 1) {
      throw Error(ErrorCode::InvalidArgument, "multiplicities must be positive");
    }
    total += f.multiplicity;
  }
  if (total < 2) {
    throw Error(ErrorCode::DegenerateSystem, "a single contraction has no positive Moran root");
  }
  std::vector<std::pair<double, double>> terms;  // (multiplicity, log ratio)
  for (const auto& f : factors) terms.emplace_back(f.multiplicity, std::log(f.ratio));
  auto g = [&](double s) {
    double sum = 0.0;
    for (auto [m, l] : terms) sum += m * std::exp(s * l);
    return sum - 1.0;
  };
  double hi = 1.0;
  while (g(hi) >= 0.0) hi *= 2.0;
  return bisect(g, 0.0, hi);
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::vector<std::size_t> default_box_sizes(std::size_t width, std::size_t height) {
  std::vector<std::size_t> sizes;
  const std::size_t limit = std::min(width, height) / 4;
  for (std::size_t s = 4; s <= limit; s *= 2) sizes.push_back(s);
  return sizes;
}

BoxCountFit box_counting_dimension(const Mask& mask, double pixel_scale,
                                   std::span<const std::size_t> box_sizes) {
  if (mask.width == 0 || mask.height == 0 || mask.bits.size() != mask.width * mask.height) {
    throw Error(ErrorCode::BadImageDims, "mask dimensions do not match its data");
  }
  if (mask.count() == 0) throw Error(ErrorCode::EmptyMask, "mask has no set pixels");
  if (!(pixel_scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "pixel scale must be positive");
  if (box_sizes.size() < 4) {
    throw Error(ErrorCode::InsufficientScales, "box counting needs at least 4 scales");
  }
  const auto [min_it, max_it] = std::minmax_element(box_sizes.begin(), box_sizes.end());
  if (*min_it == 0 || *max_it < 4 * *min_it) {
    throw Error(ErrorCode::InsufficientScales, "box sizes must span at least 2 octaves");
  }

  BoxCountFit fit;
  fit.box_sizes.assign(box_sizes.begin(), box_sizes.end());
  fit.counts.assign(box_sizes.size(), 0);
  parallel_for(box_sizes.size(), [&](std::size_t k) {
    const std::size_t s = box_sizes[k];
    const std::size_t cols = (mask.width + s - 1) / s;
    const std::size_t rows = (mask.height + s - 1) / s;
    std::vector<std::uint8_t> hit(rows * cols, 0);
    for (std::size_t r = 0; r < mask.height; ++r) {
      const std::uint8_t* line = &mask.bits[r * mask.width];
      std::uint8_t* boxes = &hit[(r / s) * cols];
      for (std::size_t c = 0; c < mask.width; ++c) {
        if (line[c]) boxes[c / s] = 1;
      }
    }
    fit.counts[k] = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
  });

  const std::size_t m = box_sizes.size();
  std::vector<double> x(m), y(m);
  for (std::size_t k = 0; k < m; ++k) {
    x[k] = -std::log(static_cast<double>(box_sizes[k]) * pixel_scale);
    y[k] = std::log(static_cast<double>(fit.counts[k]));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(m);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double e = y[k] - (intercept + fit.slope * x[k]);
    ssr += e * e;
  }
  fit.standard_error = std::sqrt(ssr / static_cast<double>(m - 2) / sxx);
  fit.bounds = {fit.slope - fit.standard_error, fit.slope + fit.standard_error,
                BoundsMethod::BoxCount};
  return fit;
}

}  // namespace cantor
