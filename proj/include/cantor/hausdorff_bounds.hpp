#pragma once

// Hausdorff dimension brackets from derivative envelopes of the log map
// F(Z) = log f(e^Z) on each branch group.

#include <cstddef>
#include <vector>

#include "cantor/dimension.hpp"
#include "cantor/rational_family.hpp"

namespace cantor {

/// F'(Z) = s (d_1 + sum (-1)^i k_i z^k_i / (z^k_i - a_i^k_i)) with z = e^Z.
/// Throws Error{PoleHit} within 1e-14 a_i^k_i of a root.
Complex log_map_derivative(const FamilyParams& params, Complex Z);

struct EnvelopeGrid {
  std::size_t radial = 128;
  std::size_t angular = 512;
};

/// Sampled bounds of |F'| on the group annulus (R_(i-1)^+, R_i^-). The
/// padded bounds subtract / add the largest change between adjacent samples.
/// Sampling only: these are not certified bounds.
struct BranchEnvelope {
  std::size_t group = 0;  // 1-based
  double min_abs_deriv = 0.0;
  double max_abs_deriv = 0.0;
  double sampled_min = 0.0;
  double sampled_max = 0.0;
  int multiplicity = 0;  // d_i
  EnvelopeGrid grid;
};

/// Throws Error{GridTooCoarse} below 64 x 256 and Error{StructureUnverified}
/// when verify_structure fails for these radii.
std::vector<BranchEnvelope> branch_envelopes(const FamilyParams& params,
                                             const AnnulusRadii& radii,
                                             EnvelopeGrid grid = {});

/// Same sampling without the structure check.
std::vector<BranchEnvelope> sample_envelopes(const FamilyParams& params,
                                             const AnnulusRadii& radii, EnvelopeGrid grid);

/// beta_- solves sum d_i (1/max_i)^b = 1, beta_+ solves sum d_i (1/min_i)^b = 1.
/// Throws Error{NotExpanding} if some min_abs_deriv <= 1.
DimensionBounds hdim_bracket(const std::vector<BranchEnvelope>& envelopes);

}  // namespace cantor
