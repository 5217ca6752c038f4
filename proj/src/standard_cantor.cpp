#include "cantor/standard_cantor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cantor/error.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

namespace {

constexpr double kInputTolerance = 1e-9;

void check_dims(const RenderOptions& o) {
  if (o.width == 0 || o.height == 0 || o.width > 1u << 15 || o.height > 1u << 15) {
    throw Error(ErrorCode::BadImageDims, "image dimensions must be in [1, 32768]");
  }
  if (o.depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  const Window& w = o.window;
  if (!(w.x_min < w.x_max && w.y_min < w.y_max)) {
    throw Error(ErrorCode::InvalidArgument, "window must have positive extent");
  }
  if (w.x_min < -1.0 || w.x_max > 1.0 || w.y_min < -1.0 || w.y_max > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "window must lie inside [-1, 1]^2");
  }
}

// Log-modulus of sample points inside pixel (row, col); row 0 is the top edge.
template <class F>
void for_each_sample(const RenderOptions& o, int per_axis, std::size_t row, F&& f) {
  const Window& w = o.window;
  const double dx = (w.x_max - w.x_min) / static_cast<double>(o.width);
  const double dy = (w.y_max - w.y_min) / static_cast<double>(o.height);
  for (std::size_t col = 0; col < o.width; ++col) {
    for (int sy = 0; sy < per_axis; ++sy) {
      for (int sx = 0; sx < per_axis; ++sx) {
        const double x = w.x_min + (static_cast<double>(col) + (sx + 0.5) / per_axis) * dx;
        const double y = w.y_max - (static_cast<double>(row) + (sy + 0.5) / per_axis) * dy;
        f(col, std::hypot(x, y));
      }
    }
  }
}

bool radius_in_set(double r, const StandardIFS& ifs, int depth) {
  if (r < std::exp(-1.0) || r > 1.0) return false;
  return in_attractor(cantor_membership(std::log(r), ifs, depth));
}

// Does [lo, hi] (inside [-1, 0]) meet the depth-k cylinder union? Both -1 and
// 0 lie in the attractor and every branch sends its endpoints onto {-1, 0},
// so only intervals strictly inside one branch need to be expanded further.
bool interval_meets_set(double lo, double hi, const StandardIFS& ifs, int depth) {
  for (int step = 0; step < depth; ++step) {
    if (lo <= -1.0 || hi >= 0.0) return true;
    const AnnulusMap* hit = nullptr;
    for (const auto& m : ifs.maps) {
      if (hi < m.lower || lo > m.upper) continue;
      if (lo <= m.lower || hi >= m.upper) return true;
      hit = &m;
      break;
    }
    if (hit == nullptr) return false;
    const double a = hit->expand(lo);
    const double b = hit->expand(hi);
    lo = std::max(-1.0, std::min(a, b));
    hi = std::min(0.0, std::max(a, b));
  }
  return true;
}

// Range of |z| over the closed pixel square.
std::pair<double, double> pixel_radii(const RenderOptions& o, std::size_t row, std::size_t col) {
  const Window& w = o.window;
  const double dx = (w.x_max - w.x_min) / static_cast<double>(o.width);
  const double dy = (w.y_max - w.y_min) / static_cast<double>(o.height);
  const double x0 = w.x_min + static_cast<double>(col) * dx;
  const double x1 = x0 + dx;
  const double y1 = w.y_max - static_cast<double>(row) * dy;
  const double y0 = y1 - dy;
  const double nx = std::clamp(0.0, x0, x1);
  const double ny = std::clamp(0.0, y0, y1);
  const double fx = std::max(std::abs(x0), std::abs(x1));
  const double fy = std::max(std::abs(y0), std::abs(y1));
  return {std::hypot(nx, ny), std::hypot(fx, fy)};
}

}  // namespace

std::vector<double> Partition::flattened() const {
  std::vector<double> out;
  out.reserve(2 * size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back(b_minus[i]);
    out.push_back(b_plus[i]);
  }
  return out;
}

Partition default_partition(const DegreeVector& degrees) {
  if (degrees.size() < 2 || !satisfies_module_inequality(degrees)) {
    throw Error(ErrorCode::InvalidDegrees, "partition needs n >= 2 degrees with sum 1/d_i < 1");
  }
  const std::size_t n = degrees.size();
  double width_sum = 0.0;
  for (int d : degrees) width_sum += 1.0 / d;
  const double gap = (1.0 - width_sum) / static_cast<double>(n - 1);
  Partition p;
  p.b_minus.resize(n);
  p.b_plus.resize(n);
  double x = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    p.b_minus[i] = x;
    p.b_plus[i] = x + 1.0 / degrees[i];
    x = p.b_plus[i] + gap;
  }
  p.b_plus[n - 1] = 0.0;
  p.b_minus[n - 1] = -1.0 / degrees[n - 1];
  return p;
}

Partition partition_from_points(const DegreeVector& degrees, const std::vector<double>& points) {
  const std::size_t n = degrees.size();
  if (points.size() != 2 * n) {
    throw Error(ErrorCode::PartitionMismatch,
                "partition needs " + std::to_string(2 * n) + " points, got " +
                    std::to_string(points.size()));
  }
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    if (!(points[k] < points[k + 1])) {
      throw Error(ErrorCode::PartitionMismatch, "partition points must be strictly increasing");
    }
  }
  if (std::abs(points.front() + 1.0) > kInputTolerance || std::abs(points.back()) > kInputTolerance) {
    throw Error(ErrorCode::PartitionMismatch, "partition must start at -1 and end at 0");
  }
  Partition p;
  p.b_minus.resize(n);
  p.b_plus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < 2) throw Error(ErrorCode::PartitionMismatch, "degrees must be >= 2");
    const double width = points[2 * i + 1] - points[2 * i];
    if (std::abs(width - 1.0 / degrees[i]) > kInputTolerance) {
      throw Error(ErrorCode::PartitionMismatch,
                  "interval " + std::to_string(i + 1) + " must have width 1/" +
                      std::to_string(degrees[i]));
    }
    // snap widths to 1/d_i exactly
    p.b_minus[i] = points[2 * i];
    p.b_plus[i] = points[2 * i] + 1.0 / degrees[i];
  }
  p.b_minus.front() = -1.0;
  p.b_plus.front() = -1.0 + 1.0 / degrees.front();
  p.b_plus.back() = 0.0;
  p.b_minus.back() = -1.0 / degrees.back();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(p.b_plus[i] < p.b_minus[i + 1])) {
      throw Error(ErrorCode::PartitionMismatch, "partition intervals must be separated by gaps");
    }
  }
  return p;
}

double AnnulusMap::coefficient() const {
  return std::exp(-static_cast<double>(sign) * anchor * degree);
}

std::complex<double> AnnulusMap::apply(std::complex<double> z) const {
  return coefficient() * std::pow(z, exponent());
}

StandardIFS build_ifs(const Combination& combination, const Partition& partition) {
  const auto& d = combination.degrees();
  const std::size_t n = d.size();
  if (partition.b_minus.size() != n || partition.b_plus.size() != n) {
    throw Error(ErrorCode::PartitionMismatch, "partition length does not match the degrees");
  }
  if (partition.b_minus.front() != -1.0 || partition.b_plus.back() != 0.0) {
    throw Error(ErrorCode::PartitionMismatch, "partition must start at -1 and end at 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double width = partition.b_plus[i] - partition.b_minus[i];
    if (std::abs(width - 1.0 / d[i]) > 1e-15) {
      throw Error(ErrorCode::PartitionMismatch,
                  "interval " + std::to_string(i + 1) + " width differs from 1/d_i");
    }
    if (i + 1 < n && !(partition.b_plus[i] < partition.b_minus[i + 1])) {
      throw Error(ErrorCode::PartitionMismatch, "partition intervals must be separated by gaps");
    }
  }

  StandardIFS ifs{combination, partition, {}};
  ifs.maps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = k + 1;  // 1-based position
    const bool even = i % 2 == 0;
    const int sign = combination.kind() == Kind::II ? (even ? -1 : 1) : (even ? 1 : -1);
    AnnulusMap m;
    m.sign = sign;
    m.degree = d[k];
    m.lower = partition.b_minus[k];
    m.upper = partition.b_plus[k];
    m.anchor = sign > 0 ? m.upper : m.lower;
    ifs.maps.push_back(m);
  }
  return ifs;
}

Membership cantor_membership(double x, const StandardIFS& ifs, int depth) {
  if (!(x >= -1.0 && x <= 0.0)) throw Error(ErrorCode::OutOfRange, "x must lie in [-1, 0]");
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  for (int step = 1; step <= depth; ++step) {
    const AnnulusMap* hit = nullptr;
    for (const auto& m : ifs.maps) {
      if (m.contains(x)) {
        hit = &m;
        break;
      }
    }
    if (hit == nullptr) return Escaped{step};
    // each branch maps its interval onto [-1, 0]; anything outside is rounding
    x = std::clamp(hit->expand(x), -1.0, 0.0);
  }
  return InAttractor{depth};
}

std::vector<Interval> cylinders(const StandardIFS& ifs, int depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be >= 0");
  std::vector<Interval> level{{-1.0, 0.0}};
  for (int k = 0; k < depth; ++k) {
    std::vector<Interval> next;
    next.reserve(level.size() * ifs.maps.size());
    for (const auto& m : ifs.maps) {
      for (const auto& c : level) {
        const double a = m.contract(c.lower);
        const double b = m.contract(c.upper);
        next.push_back({std::min(a, b), std::max(a, b)});
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const Interval& a, const Interval& b) { return a.lower < b.lower; });
  return level;
}

Mask render_standard(const StandardIFS& ifs, const RenderOptions& options) {
  check_dims(options);
  Mask mask(options.width, options.height);
  const double inner = std::exp(-1.0);
  parallel_for(options.height, [&](std::size_t row) {
    for (std::size_t col = 0; col < options.width; ++col) {
      auto [r_lo, r_hi] = pixel_radii(options, row, col);
      r_lo = std::max(r_lo, inner);
      r_hi = std::min(r_hi, 1.0);
      if (r_lo > r_hi) continue;
      const double lo = std::clamp(std::log(r_lo), -1.0, 0.0);
      const double hi = std::clamp(std::log(r_hi), -1.0, 0.0);
      if (interval_meets_set(lo, hi, ifs, options.depth)) mask.set(row, col, true);
    }
  });
  return mask;
}

std::vector<double> render_standard_coverage(const StandardIFS& ifs, const RenderOptions& options) {
  check_dims(options);
  std::vector<double> coverage(options.width * options.height, 0.0);
  parallel_for(options.height, [&](std::size_t row) {
    for_each_sample(options, 2, row, [&](std::size_t col, double r) {
      if (radius_in_set(r, ifs, options.depth)) coverage[row * options.width + col] += 0.25;
    });
  });
  return coverage;
}

}  // namespace cantor
