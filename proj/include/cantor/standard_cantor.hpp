#pragma once

// Standard Cantor circles: the modified IFS of power maps attached to a
// combination and a partition of the log-radius interval [-1, 0].

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cantor/combinatorics.hpp"
#include "cantor/dimension.hpp"

namespace cantor {

/// -1 = b_minus[0] < b_plus[0] < b_minus[1] < ... < b_plus[n-1] = 0 with
/// b_plus[i] - b_minus[i] = 1/d_i.
struct Partition {
  std::vector<double> b_minus;
  std::vector<double> b_plus;

  std::size_t size() const noexcept { return b_minus.size(); }
  /// Interleaved endpoints (b_1^-, b_1^+, ..., b_n^-, b_n^+).
  std::vector<double> flattened() const;
};

/// Equal gaps (1 - sum 1/d_i) / (n - 1) between intervals of width 1/d_i.
/// Throws Error{InvalidDegrees}.
Partition default_partition(const DegreeVector& degrees);

/// Builds a partition from 2n interleaved endpoints and checks it against the
/// degrees. Throws Error{PartitionMismatch}.
Partition partition_from_points(const DegreeVector& degrees, const std::vector<double>& points);

/// One map z -> z^(sign*d) / e^(sign*anchor*d) of the modified IFS. In log
/// radius it is the affine expansion x -> sign*d*(x - anchor), which sends
/// [lower, upper] onto [-1, 0].
struct AnnulusMap {
  int sign = 1;  // +1 or -1
  int degree = 2;
  double anchor = 0.0;  // b^+ for sign +1, b^- for sign -1
  double lower = 0.0;   // b^-
  double upper = 0.0;   // b^+

  int exponent() const noexcept { return sign * degree; }
  /// The constant C in z -> C z^(sign*d).
  double coefficient() const;
  std::complex<double> apply(std::complex<double> z) const;
  double expand(double x) const noexcept { return sign * degree * (x - anchor); }
  /// Inverse of expand: the contraction of [-1, 0] onto [lower, upper].
  double contract(double y) const noexcept { return anchor + y / (sign * degree); }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

struct StandardIFS {
  Combination combination;
  Partition partition;
  std::vector<AnnulusMap> maps;
};

/// Sign schedule: map i (1-based) has sign (-1)^i for kinds I and III and
/// (-1)^(i-1) for kind II. Throws Error{PartitionMismatch}.
StandardIFS build_ifs(const Combination& combination, const Partition& partition);

struct InAttractor {
  int depth;
};
struct Escaped {
  int step;  // 1-based step at which x fell into a gap
};
using Membership = std::variant<InAttractor, Escaped>;

/// Forward iteration of the expanding maps from x in [-1, 0]; InAttractor is
/// a depth-k certificate only. Throws Error{OutOfRange}.
Membership cantor_membership(double x, const StandardIFS& ifs, int depth);

inline bool in_attractor(const Membership& m) { return std::holds_alternative<InAttractor>(m); }

struct Interval {
  double lower;
  double upper;
  double length() const noexcept { return upper - lower; }
};

/// The n^k cylinder intervals of depth k, in increasing order.
std::vector<Interval> cylinders(const StandardIFS& ifs, int depth);

/// Axis-aligned window in the complex plane.
struct Window {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
};

struct RenderOptions {
  std::size_t width = 512;
  std::size_t height = 512;
  int depth = 24;
  Window window{};
};

/// Pixel on iff some point of the closed pixel square has a log-modulus in
/// the depth-k cylinder union, i.e. the pixel's range of log-moduli meets the
/// set cantor_membership accepts at that depth. Pixel centers alone would miss
/// a measure-zero set almost everywhere.
/// Throws Error{BadImageDims} or Error{InvalidArgument}.
Mask render_standard(const StandardIFS& ifs, const RenderOptions& options);

/// Fraction of a 2x2 grid of sample points per pixel that pass
/// cantor_membership; cosmetic output only.
std::vector<double> render_standard_coverage(const StandardIFS& ifs, const RenderOptions& options);

}  // namespace cantor
