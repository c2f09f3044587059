#pragma once

// Seeded inputs shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "xrank/core/mpoly.hpp"

namespace fixture {

using xrank::MPoly;
using xrank::Rational;

/// Form of degree d in n variables with coefficients drawn from [-5, 5].
inline MPoly random_form(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<xrank::Term> t;
  for (const auto& m : xrank::monomials_of_degree(n, d)) t.push_back({m, Rational(static_cast<long>(rng() % 11) - 5)});
  MPoly f = MPoly::from_terms(n, std::move(t));
  if (f.is_zero()) f = MPoly::monomial(n, xrank::monomials_of_degree(n, d).front());
  return f;
}

inline MPoly xyz(int i) { return MPoly::var(3, i); }

}  // namespace fixture
