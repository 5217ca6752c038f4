#pragma once

// Cantor-circle combinations (kind; d_1..d_n) and the count N(d) of
// Cantor-circle hyperbolic components of degree d.
//
// All reciprocal-sum tests are done in exact rational arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

using DegreeVector = std::vector<int>;

/// How the two distinguished disks D_0 (around 0) and D_inf map.
///   I:   D_0 -> D_inf, D_inf -> D_inf, n even
///   II:  D_0 -> D_0,   D_inf -> D_inf, n odd
///   III: D_0 -> D_inf, D_inf -> D_0,   n odd
enum class Kind { I, II, III };

std::string_view kind_name(Kind kind) noexcept;
std::optional<Kind> parse_kind(std::string_view text) noexcept;

/// A validated combination. Construct through validate().
class Combination {
 public:
  Kind kind() const noexcept { return kind_; }
  const DegreeVector& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int total_degree() const noexcept;

  friend bool operator==(const Combination&, const Combination&) = default;
  friend auto operator<=>(const Combination&, const Combination&) = default;

 private:
  Combination(Kind kind, DegreeVector degrees)
      : kind_(kind), degrees_(std::move(degrees)) {}
  friend Combination validate(Kind, DegreeVector);

  Kind kind_;
  DegreeVector degrees_;
};

/// Reduced fraction sum_i 1/d_i as (numerator, denominator).
struct ReciprocalSum {
  std::int64_t numerator;
  std::int64_t denominator;
};
ReciprocalSum reciprocal_sum(const DegreeVector& degrees);

/// True iff every d_i >= 2 and sum 1/d_i < 1 (exact). Length is not checked.
bool satisfies_module_inequality(const DegreeVector& degrees);

/// Throws Error{TooShort | ParityMismatch | ReciprocalSumTooLarge | InvalidDegrees}.
Combination validate(Kind kind, DegreeVector degrees);

/// All ordered vectors (d_1..d_n), n >= 2, with sum d_i = d and sum 1/d_i < 1,
/// ordered by length first, then lexicographically.
std::vector<DegreeVector> enumerate_degree_vectors(int d);

/// Every valid combination of total degree d, grouped by kind (I, II, III).
std::vector<Combination> enumerate_combinations(int d);

/// Vectors identified under reversal (the conjugation z -> 1/z for kinds II
/// and III). Kind I classes are always singletons.
struct ConjugacyClass {
  Combination representative;
  std::vector<DegreeVector> members;  // 1 or 2 entries, representative first

  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

ConjugacyClass canonical_class(const Combination& c);

/// N(d) = #(all vectors) + #(odd-length palindromic vectors).
std::int64_t count_components(int d);

/// N(d) recomputed as the number of distinct conjugacy classes over
/// enumerate_combinations(d).
std::int64_t count_classes(int d);

}  // namespace cantor
