#include "satake/series.hpp"

#include <algorithm>
#include <set>

namespace satake {

GradedSeries series_monomial(const AffineWeight& w, const Int& trunc) {
  GradedSeries s;
  s.k = w.k;
  s.n_min = w.n;
  s.trunc = trunc;
  if (w.n < trunc) s.coeffs[SeriesKey{w.n, w.lam}] = 1;
  return s;
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) {
  if (a.k != b.k) throw domain_error("inhomogeneous sum not representable");
  GradedSeries out;
  out.k = a.k;
  out.n_min = std::min(a.n_min, b.n_min);
  out.trunc = std::min(a.trunc, b.trunc);
  for (const auto& [key, c] : a.coeffs)
    if (key.n < out.trunc) out.coeffs[key] = c;
  for (const auto& [key, c] : b.coeffs) {
    if (key.n >= out.trunc) continue;
    Rat v = out.coeff(key) + c;
    out.set(key, v);
  }
  return out;
}

GradedSeries series_scale(const Rat& c, const GradedSeries& s) {
  GradedSeries out = s;
  if (c == 0) {
    out.coeffs.clear();
    return out;
  }
  for (auto& [key, v] : out.coeffs) v *= c;
  return out;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out;
  out.k = a.k + b.k;
  out.n_min = a.n_min + b.n_min;
  // A term missing from one factor above its window would pair with the
  // other factor's lowest possible degree, hence the cross bounds.
  out.trunc = std::min(a.trunc + b.n_min, b.trunc + a.n_min);
  for (const auto& [ka, ca] : a.coeffs) {
    for (const auto& [kb, cb] : b.coeffs) {
      Int n = ka.n + kb.n;
      if (n >= out.trunc) continue;
      SeriesKey key{n, vec_add(ka.lam, kb.lam)};
      Rat v = out.coeff(key) + ca * cb;
      out.set(key, v);
    }
  }
  return out;
}

GradedSeries orbit_sum(const RootDatum& rd, const AffineWeight& hw, const Int& trunc) {
  if (!is_level_dominant(rd, hw.lam, hw.k))
    throw domain_error("orbit sum requires a level-dominant weight");
  GradedSeries s;
  s.k = hw.k;
  s.trunc = trunc;
  s.n_min = hw.n;
  if (hw.k > 0) {
    std::set<LatticeVector> seen;
    Int lo = hw.n;
    auto consider = [&](const LatticeVector& wl) {
      if (!seen.insert(wl).second) return;
      Int m = hw.n + sublevel_min(rd.q, hw.k, e_map(rd.q, wl));
      if (m < lo) lo = m;
    };
    if (rd.ss_rank == 0) {
      consider(hw.lam);
    } else {
      for (const auto& w : rd.weyl) consider(apply_matrix(w, hw.lam));
    }
    s.n_min = lo;
  }
  for (const auto& w : affine_orbit(rd, hw, trunc)) s.coeffs[SeriesKey{w.n, w.lam}] = 1;
  return s;
}

bool check_invariance(const RootDatum& rd, const GradedSeries& s) {
  for (int i = 0; i < rd.ss_rank; ++i) {
    for (const auto& [key, c] : s.coeffs) {
      if (key.n >= s.trunc) continue;
      if (s.coeff(SeriesKey{key.n, simple_reflect(rd, i, key.lam)}) != c) return false;
    }
  }
  for (int j = 0; j < rd.rank; ++j) {
    for (int sign : {1, -1}) {
      LatticeVector nu(rd.rank, 0);
      nu[j] = sign;
      for (const auto& [key, c] : s.coeffs) {
        if (key.n >= s.trunc) continue;
        AffineWeight img = monomial_translate(rd.q, AffineWeight{s.k, key.lam, key.n}, nu);
        if (img.n >= s.trunc) continue;
        if (s.coeff(SeriesKey{img.n, img.lam}) != c) return false;
      }
    }
  }
  return true;
}

bool dominance_leq(const RootDatum& rd, const AffineWeight& w1, const AffineWeight& w2) {
  if (w1.k != w2.k) throw domain_error("dominance compares weights of equal level");
  Int c0 = w1.n - w2.n;
  if (c0 < 0) return false;
  for (int j = 0; j < rd.rank; ++j) {
    Int cj = w2.lam[j] - w1.lam[j];
    if (j < rd.ss_rank) cj += c0 * rd.theta_coroot[j];
    if (j < rd.ss_rank ? (cj < 0) : (cj != 0)) return false;
  }
  return true;
}

std::map<AffineWeight, Rat> expand_in_orbit_sums(const RootDatum& rd, const GradedSeries& s) {
  std::map<AffineWeight, Rat> out;
  GradedSeries residual = s;
  if (!residual.coeffs.empty()) {
    Int n = residual.coeffs.begin()->first.n;
    while (n < residual.trunc) {
      std::vector<std::pair<AffineWeight, Rat>> peel;
      for (const auto& [key, c] : residual.coeffs) {
        if (key.n != n) {
          if (key.n > n) break;
          continue;
        }
        if (is_level_dominant(rd, key.lam, residual.k))
          peel.emplace_back(AffineWeight{residual.k, key.lam, key.n}, c);
      }
      for (const auto& [hw, c] : peel) {
        out[hw] = c;
        GradedSeries m = orbit_sum(rd, hw, residual.trunc);
        for (const auto& [key, mc] : m.coeffs) {
          Rat v = residual.coeff(key) - c * mc;
          residual.set(key, v);
        }
      }
      ++n;
    }
  }
  for (const auto& [key, c] : residual.coeffs) {
    if (key.n >= residual.trunc) continue;
    AffineWeight dom = reduce_weight_to_dominant(rd, AffineWeight{residual.k, key.lam, key.n});
    if (dom.n < residual.trunc)
      throw domain_error("series not invariant within window");
  }
  return out;
}

}  // namespace satake
