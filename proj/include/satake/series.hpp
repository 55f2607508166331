#pragma once

#include "satake/root_datum.hpp"

#include <map>

namespace satake {

/// Monomial exponent of v^n x^lam inside a fixed-level series.
struct SeriesKey {
  Int n;
  LatticeVector lam;

  bool operator==(const SeriesKey&) const = default;
  bool operator<(const SeriesKey& o) const {
    if (n != o.n) return n < o.n;
    return lam < o.lam;
  }
};

/// Laurent-type series in v with x-monomial coefficients at a fixed level k.
/// Coefficients are certified only for n < trunc; n_min is a proven lower
/// bound for the v-support of the untruncated series (what makes products
/// of truncations certifiable).
struct GradedSeries {
  Int k = 0;
  Int n_min = 0;
  Int trunc = 0;
  std::map<SeriesKey, Rat> coeffs;

  Rat coeff(const SeriesKey& key) const {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void set(const SeriesKey& key, const Rat& c) {
    if (c == 0)
      coeffs.erase(key);
    else
      coeffs[key] = c;
  }
};

GradedSeries series_monomial(const AffineWeight& w, const Int& trunc);
GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_scale(const Rat& c, const GradedSeries& s);
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

/// Sum of v^n x^lam over the affine Weyl orbit of a level-dominant weight.
GradedSeries orbit_sum(const RootDatum& rd, const AffineWeight& hw, const Int& trunc);

/// True iff the series is fixed by every finite simple reflection and by
/// the unit translations, checked exhaustively inside the certified window.
bool check_invariance(const RootDatum& rd, const GradedSeries& s);

/// w1 <= w2 in the affine dominance order at a shared level: w2 - w1 is a
/// nonnegative rational combination of {(alpha_i^vee, 0)} and the affine
/// generator (-theta^vee, -1).
bool dominance_leq(const RootDatum& rd, const AffineWeight& w1, const AffineWeight& w2);

/// Coordinates of an invariant series over the orbit-sum basis, by greedy
/// peeling of dominant keys in ascending v-degree.
std::map<AffineWeight, Rat> expand_in_orbit_sums(const RootDatum& rd, const GradedSeries& s);

}  // namespace satake
