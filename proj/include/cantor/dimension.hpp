#pragma once

// Moran-type equations (conformal dimension 1 + alpha, similarity
// dimensions of Falconer brackets) and a box-counting estimator.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cantor/combinatorics.hpp"

namespace cantor {

struct MoranSolution {
  double exponent = 0.0;
  double residual = 0.0;  // value of the defining sum minus 1 at exponent
  int iterations = 0;
  // Final bisection bracket; f(lower) > 0 > f(upper).
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
};

enum class BoundsMethod { MoranExact, FalconerBracket, BoxCount };
std::string_view method_name(BoundsMethod method) noexcept;

struct DimensionBounds {
  double lower = 0.0;
  double upper = 0.0;
  BoundsMethod method = BoundsMethod::MoranExact;

  double width() const noexcept { return upper - lower; }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// Root alpha in (0, 1) of sum_i d_i^(-alpha) = 1.
/// Throws Error{InvalidDegrees} unless n >= 2, d_i >= 2 and sum 1/d_i < 1.
MoranSolution alpha_root(const DegreeVector& degrees);

/// 1 + alpha_root(degrees).exponent.
double conformal_dimension(const DegreeVector& degrees);

struct ContractionFactor {
  double ratio;          // in (0, 1)
  int multiplicity = 1;  // number of maps sharing this ratio
};

/// Unique s > 0 with sum_i m_i c_i^s = 1.
/// Throws Error{InvalidArgument} on ratios outside (0, 1) or multiplicities < 1,
/// Error{DegenerateSystem} when the system has fewer than two maps.
MoranSolution solve_similarity_dimension(std::span<const ContractionFactor> factors);

/// Row-major binary raster.
struct Mask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1, width * height entries

  Mask() = default;
  Mask(std::size_t w, std::size_t h) : width(w), height(h), bits(w * h, 0) {}

  bool at(std::size_t row, std::size_t col) const { return bits[row * width + col] != 0; }
  void set(std::size_t row, std::size_t col, bool on) { bits[row * width + col] = on ? 1 : 0; }
  std::size_t count() const;
};

struct BoxCountFit {
  DimensionBounds bounds;  // slope -/+ its standard error
  double slope = 0.0;
  double standard_error = 0.0;
  std::vector<std::size_t> box_sizes;  // in pixels
  std::vector<std::size_t> counts;     // occupied boxes per size
};

/// Box sizes 2^k pixels, skipping the two finest octaves (1 and 2 pixels)
/// and stopping at a quarter of the shorter image side.
std::vector<std::size_t> default_box_sizes(std::size_t width, std::size_t height);

/// Least-squares slope of log N(eps) against log(1/eps), eps = size * pixel_scale.
/// Throws Error{EmptyMask} or Error{InsufficientScales} (< 4 sizes or < 2 octaves).
BoxCountFit box_counting_dimension(const Mask& mask, double pixel_scale,
                                   std::span<const std::size_t> box_sizes);

}  // namespace cantor
