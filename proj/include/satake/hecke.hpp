#pragma once

#include "satake/heisenberg.hpp"
#include "satake/series.hpp"

namespace satake {

struct HeckeKey {
  Int a;
  LatticeVector mu_bar;

  bool operator==(const HeckeKey&) const = default;
  bool operator<(const HeckeKey& o) const {
    if (a != o.a) return a < o.a;
    return mu_bar < o.mu_bar;
  }
};

/// A v-truncated bi-invariant function: coefficients f(a, mu_bar) with
/// mu_bar in the box [0,k)^r, certified for a < trunc.
struct HeckeElement {
  Int k = 0;
  Int trunc = 0;
  std::map<HeckeKey, Rat> coeffs;

  Rat coeff(const HeckeKey& key) const {
    auto it = coeffs.find(key);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void set(const HeckeKey& key, const Rat& c) {
    if (c == 0)
      coeffs.erase(key);
    else
      coeffs[key] = c;
  }
};

HeckeElement delta(const DoubleCosetLabel& label, const Int& trunc);

/// Smallest possible v-drop of a theta orbit at level k: the minimum over
/// mu_bar in [0,k)^r of the orbit's sublevel minimum (always <= 0). This is
/// what a truncated Hecke element's theta window must be shrunk by.
Int theta_dip(const EvenSymmetricForm& q, const Int& k);

GradedSeries to_theta_series(const EvenSymmetricForm& q, const HeckeElement& h);

/// Inverse of to_theta_series; rejects series that fail to be translation
/// invariant on the certified window.
HeckeElement from_theta_series(const EvenSymmetricForm& q, const GradedSeries& s);

/// Convolution through the theta model.
HeckeElement convolve(const EvenSymmetricForm& q, const HeckeElement& h1,
                      const HeckeElement& h2);

/// Convolution by direct coset-pair counting in the group; no series
/// arithmetic. Output degrees are certified up to min(window, what the
/// operand truncations allow).
HeckeElement convolve_oracle(const EvenSymmetricForm& q, const HeckeElement& h1,
                             const HeckeElement& h2, const Int& window);

/// Element of the principal-series model: function on Z x L x Z cosets,
/// mixed levels allowed, coefficients certified for n < trunc.
struct PrincipalSeriesElement {
  Int trunc = 0;
  Int n_min = 0;
  std::map<AffineWeight, Rat> coeffs;

  Rat coeff(const AffineWeight& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
};

PrincipalSeriesElement act_on_principal_series(const RootDatum& rd, const HeckeElement& h,
                                               const PrincipalSeriesElement& f);

/// The same action computed by raw group multiplication against left-coset
/// representatives; independent cross-check for act_on_principal_series.
PrincipalSeriesElement act_oracle(const IntegerBilinearForm& b, const EvenSymmetricForm& q,
                                  const HeckeElement& h, const PrincipalSeriesElement& f);

}  // namespace satake
