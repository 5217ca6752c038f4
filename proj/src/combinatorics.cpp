#include "cantor/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <utility>

#include <boost/rational.hpp>

#include "cantor/error.hpp"

namespace cantor {

namespace {

using Rational = boost::rational<std::int64_t>;

const Rational kOne{1};

Rational exact_reciprocal_sum(const DegreeVector& degrees) {
  Rational sum{0};
  for (int d : degrees) sum += Rational{1, d};
  return sum;
}

bool is_palindrome(const DegreeVector& v) {
  return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

// Largest n with n * n < d; any valid vector of total d is at most this long.
std::size_t max_length(int d) {
  std::size_t n = 0;
  while (static_cast<long>((n + 1) * (n + 1)) < d) ++n;
  return n;
}

void extend(DegreeVector& prefix, int remaining, const Rational& sum, std::size_t max_len,
            std::vector<DegreeVector>& out) {
  for (int part = 2; part <= remaining; ++part) {
    const Rational next = sum + Rational{1, part};
    if (next >= kOne) continue;
    const int rest = remaining - part;
    if (rest == 0) {
      if (prefix.size() + 1 >= 2) {
        prefix.push_back(part);
        out.push_back(prefix);
        prefix.pop_back();
      }
      continue;
    }
    // at least one more part of size >= 2; the cheapest completion adds 1/rest
    if (rest < 2 || prefix.size() + 2 > max_len) continue;
    if (next + Rational{1, rest} >= kOne) continue;
    prefix.push_back(part);
    extend(prefix, rest, next, max_len, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string_view kind_name(Kind kind) noexcept {
  switch (kind) {
    case Kind::I: return "I";
    case Kind::II: return "II";
    case Kind::III: return "III";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) noexcept {
  if (text == "I" || text == "1") return Kind::I;
  if (text == "II" || text == "2") return Kind::II;
  if (text == "III" || text == "3") return Kind::III;
  return std::nullopt;
}

int Combination::total_degree() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

ReciprocalSum reciprocal_sum(const DegreeVector& degrees) {
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::InvalidDegrees, "degrees must be positive integers");
  }
  const Rational sum = exact_reciprocal_sum(degrees);
  return {sum.numerator(), sum.denominator()};
}

bool satisfies_module_inequality(const DegreeVector& degrees) {
  if (degrees.empty()) return false;
  for (int d : degrees) {
    if (d < 2) return false;
  }
  return exact_reciprocal_sum(degrees) < kOne;
}

Combination validate(Kind kind, DegreeVector degrees) {
  if (degrees.empty()) throw Error(ErrorCode::TooShort, "degree vector is empty");
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::InvalidDegrees, "degrees must be positive integers");
  }
  const std::size_t n = degrees.size();
  const bool odd = n % 2 == 1;
  if (kind == Kind::I) {
    if (n < 2) throw Error(ErrorCode::TooShort, "kind I needs at least 2 degrees");
    if (odd) throw Error(ErrorCode::ParityMismatch, "kind I needs an even number of degrees");
  } else {
    if (!odd) throw Error(ErrorCode::ParityMismatch, "kinds II and III need an odd number of degrees");
    if (n < 3) throw Error(ErrorCode::TooShort, "kinds II and III need at least 3 degrees");
  }
  if (exact_reciprocal_sum(degrees) >= kOne) {
    throw Error(ErrorCode::ReciprocalSumTooLarge, "sum of 1/d_i must be < 1");
  }
  return Combination(kind, std::move(degrees));
}

std::vector<DegreeVector> enumerate_degree_vectors(int d) {
  std::vector<DegreeVector> out;
  if (d < 2) return out;
  DegreeVector prefix;
  extend(prefix, d, Rational{0}, max_length(d), out);
  std::sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Combination> enumerate_combinations(int d) {
  const auto vectors = enumerate_degree_vectors(d);
  std::vector<Combination> out;
  for (Kind kind : {Kind::I, Kind::II, Kind::III}) {
    const bool want_odd = kind != Kind::I;
    for (const auto& v : vectors) {
      if ((v.size() % 2 == 1) == want_odd) out.push_back(validate(kind, v));
    }
  }
  return out;
}

ConjugacyClass canonical_class(const Combination& c) {
  if (c.kind() == Kind::I || is_palindrome(c.degrees())) {
    return {c, {c.degrees()}};
  }
  DegreeVector reversed(c.degrees().rbegin(), c.degrees().rend());
  auto lo = std::min(c.degrees(), reversed);
  auto hi = std::max(c.degrees(), reversed);
  return {validate(c.kind(), lo), {lo, hi}};
}

std::int64_t count_components(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be >= 2");
  std::int64_t all = 0;
  std::int64_t odd_palindromes = 0;
  for (const auto& v : enumerate_degree_vectors(d)) {
    ++all;
    if (v.size() % 2 == 1 && is_palindrome(v)) ++odd_palindromes;
  }
  const std::int64_t n = all + odd_palindromes;
  assert(n == count_classes(d));
  return n;
}

std::int64_t count_classes(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be >= 2");
  std::set<std::pair<Kind, DegreeVector>> classes;
  for (const auto& c : enumerate_combinations(d)) {
    const auto cls = canonical_class(c);
    classes.emplace(c.kind(), cls.representative.degrees());
  }
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace cantor
