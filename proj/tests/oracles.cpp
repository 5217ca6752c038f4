#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace oracle {

namespace {

void compositions(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

bool reciprocal_sum_below_one(const std::vector<int>& v) {
  // sum 1/v_i < 1  <=>  sum prod_{j != i} v_j < prod v_j, in 128-bit integers
  __int128 product = 1;
  for (int x : v) product *= x;
  __int128 sum = 0;
  for (int x : v) sum += product / x;
  return sum < product;
}

}  // namespace

std::vector<std::vector<int>> brute_force_vectors(int d) {
  std::vector<std::vector<int>> all;
  std::vector<int> prefix;
  compositions(d, prefix, all);
  std::vector<std::vector<int>> out;
  for (auto& v : all) {
    if (v.size() >= 2 && reciprocal_sum_below_one(v)) out.push_back(v);
  }
  return out;
}

std::int64_t brute_force_class_count(int d) {
  std::set<std::pair<int, std::vector<int>>> classes;
  for (const auto& v : brute_force_vectors(d)) {
    if (v.size() % 2 == 0) {
      classes.insert({1, v});
    } else {
      std::vector<int> r(v.rbegin(), v.rend());
      const auto& key = std::min(v, r);
      classes.insert({2, key});
      classes.insert({3, key});
    }
  }
  return static_cast<std::int64_t>(classes.size());
}

long double newton_alpha(const std::vector<int>& degrees) {
  long double a = 0.5L;
  for (int it = 0; it < 100; ++it) {
    long double f = -1.0L;
    long double df = 0.0L;
    for (int d : degrees) {
      const long double t = std::pow(static_cast<long double>(d), -a);
      f += t;
      df -= t * std::log(static_cast<long double>(d));
    }
    const long double step = f / df;
    a -= step;
    if (std::fabs(step) < 1e-18L) break;
  }
  return a;
}

FamilyValue product_rule(int rho, const std::vector<int>& d, const std::vector<double>& a,
                         std::complex<long double> z) {
  using C = std::complex<long double>;
  const int n = static_cast<int>(d.size());
  auto pm = [](int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; };
  // f = prod of factors g_j^(m_j); f' = sum_j m_j g_j^(m_j - 1) g_j' prod_{l != j} g_l^(m_l)
  std::vector<C> g;
  std::vector<C> dg;
  std::vector<int> m;
  g.push_back(z);
  dg.push_back(1.0L);
  m.push_back(pm(n - rho) * d[0]);
  for (int i = 1; i < n; ++i) {
    const int k = d[i - 1] + d[i];
    const long double c = std::pow(static_cast<long double>(a[i - 1]), k);
    g.push_back(std::pow(z, k) - c);
    dg.push_back(static_cast<long double>(k) * std::pow(z, k - 1));
    m.push_back(pm(n - i - rho));
  }
  FamilyValue out{1.0L, 0.0L};
  for (std::size_t j = 0; j < g.size(); ++j) out.value *= std::pow(g[j], m[j]);
  for (std::size_t j = 0; j < g.size(); ++j) {
    C term = static_cast<long double>(m[j]) * std::pow(g[j], m[j] - 1) * dg[j];
    for (std::size_t l = 0; l < g.size(); ++l) {
      if (l != j) term *= std::pow(g[l], m[l]);
    }
    out.derivative += term;
  }
  return out;
}

const std::vector<std::int64_t>& table_one() {
  static const std::vector<std::int64_t> values{
      2,    3,    4,    5,    6,    11,   22,   37,   46,   57,    68,    81,    110,   159,   228,   290,
      410,  519,  716,  872,  1070, 1323, 1722, 2258, 3066, 4227,  5566,  6950,  8604,  10483, 12916, 15838};
  return values;
}

}  // namespace oracle
