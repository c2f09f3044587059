#pragma once

// Singularities of the image of a rational plane curve.
//
// Pairs s != t with proportional images give nodes and tacnodes; parameters
// where phi and phi' are dependent give cusps. A cusp of multiplicity 2 is
// typed by the first odd exponent of its Puiseux expansion: 3 for an ordinary
// cusp, 5 for a ramphoid cusp.

#include <optional>
#include <string>
#include <vector>

#include "xrank/curves/curve.hpp"

namespace xrank {

struct SingularityEntry {
  std::string type;                                // node, ordinary-cusp, ramphoid-cusp, tacnode, other
  int points = 1;                                  // image points described by this entry
  int delta = -1;                                  // per point; -1 when not determined
  std::vector<Rational> point;                     // set when the image point is rational
  std::vector<std::vector<Rational>> parameters;   // rational branch parameters
  std::vector<UPoly<Rational>> parameter_moduli;   // otherwise the branch parameters are roots of these
  std::string multiplicity;                        // e.g. "m=2 puiseux (2,3)"
};

struct SingularityReport {
  std::vector<SingularityEntry> entries;
  int kappa = 0;
  int delta_sum = 0;
  std::optional<int> genus;  // withheld when an entry is typed other
};

/// Throws InvalidInput for a curve outside P^2 or a parametrization that is not
/// birational onto its image, and Undecided at the solver limits.
SingularityReport plane_singularities(const RationalCurve& c, const SolveOptions& opt = {});

/// Power series helpers (coefficient vectors truncated to n terms).
namespace series {

template <class K>
std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b, std::size_t n) {
  std::vector<K> out(n, zero_like(a[0]));
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

/// 1/a for a[0] invertible.
template <class K>
std::vector<K> inverse(const std::vector<K>& a, std::size_t n) {
  std::vector<K> out(n, zero_like(a[0]));
  const K c = inv(a[0]);
  out[0] = c;
  for (std::size_t k = 1; k < n; ++k) {
    K acc = zero_like(a[0]);
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc = acc + a[i] * out[k - i];
    out[k] = -(acc * c);
  }
  return out;
}

/// Square root of a series with a[0] = 1.
template <class K>
std::vector<K> sqrt1(const std::vector<K>& a, std::size_t n) {
  std::vector<K> out(n, zero_like(a[0]));
  out[0] = one_like(a[0]);
  const K half = from_rational(a[0], Rational(1, 2));
  for (std::size_t k = 1; k < n; ++k) {
    K acc = k < a.size() ? a[k] : zero_like(a[0]);
    for (std::size_t i = 1; i < k; ++i) acc = acc - out[i] * out[k - i];
    out[k] = acc * half;
  }
  return out;
}

/// f(g) for g[0] = 0.
template <class K>
std::vector<K> compose(const std::vector<K>& f, const std::vector<K>& g, std::size_t n) {
  std::vector<K> out(n, zero_like(f[0]));
  std::vector<K> p(n, zero_like(f[0]));
  p[0] = one_like(f[0]);
  for (std::size_t k = 0; k < f.size() && k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) out[i] = out[i] + f[k] * p[i];
    p = mul(p, g, n);
  }
  return out;
}

/// Compositional inverse of f = w + O(w^2).
template <class K>
std::vector<K> revert(const std::vector<K>& f, std::size_t n) {
  std::vector<K> u(n, zero_like(f[0]));
  if (n > 1) u[1] = one_like(f[0]);
  // u <- u - (f(u) - w); each pass fixes one more coefficient
  for (std::size_t pass = 2; pass < n; ++pass) {
    std::vector<K> fu = compose(f, u, n);
    for (std::size_t i = 2; i < n; ++i) u[i] = u[i] - fu[i];
  }
  return u;
}

}  // namespace series

}  // namespace xrank
