#include "satake/hecke.hpp"

#include <algorithm>

namespace satake {

namespace {

bool in_box(const LatticeVector& mu, const Int& k) {
  if (k == 0) return is_zero(mu);
  for (const auto& c : mu)
    if (c < 0 || c >= k) return false;
  return true;
}

std::vector<LatticeVector> box_points(int rank, const Int& k) {
  std::vector<LatticeVector> out;
  if (k <= 0) {
    out.push_back(zero_vector(rank));
    return out;
  }
  LatticeVector cur(rank, 0);
  while (true) {
    out.push_back(cur);
    int pos = rank - 1;
    while (pos >= 0) {
      if (++cur[pos] < k) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Int orbit_min(const EvenSymmetricForm& q, const Int& k, const LatticeVector& mu) {
  if (k <= 0) return 0;
  return sublevel_min(q, k, e_map(q, mu));
}

}  // namespace

HeckeElement delta(const DoubleCosetLabel& label, const Int& trunc) {
  if (label.k < 0) throw domain_error("negative level has no Hecke elements");
  if (!in_box(label.mu_bar, label.k))
    throw domain_error("label residue lies outside the fundamental box");
  HeckeElement h;
  h.k = label.k;
  h.trunc = trunc;
  if (label.a < trunc) h.coeffs[HeckeKey{label.a, label.mu_bar}] = 1;
  return h;
}

Int theta_dip(const EvenSymmetricForm& q, const Int& k) {
  if (k <= 0) return 0;
  Int dip = 0;
  for (const auto& mu : box_points(q.rank(), k)) {
    Int m = orbit_min(q, k, mu);
    if (m < dip) dip = m;
  }
  return dip;
}

GradedSeries to_theta_series(const EvenSymmetricForm& q, const HeckeElement& h) {
  if (!is_negative_definite(q))
    throw domain_error("theta series needs a negative definite form");
  GradedSeries s;
  s.k = h.k;
  s.trunc = h.trunc + theta_dip(q, h.k);
  s.n_min = s.trunc;
  for (const auto& [key, c] : h.coeffs) {
    if (h.k == 0) {
      if (key.a < s.trunc) {
        Rat v = s.coeff(SeriesKey{key.a, key.mu_bar}) + c;
        s.set(SeriesKey{key.a, key.mu_bar}, v);
      }
      if (key.a < s.n_min) s.n_min = key.a;
      continue;
    }
    Int lo = key.a + orbit_min(q, h.k, key.mu_bar);
    if (lo < s.n_min) s.n_min = lo;
    for (const auto& pt : enumerate_sublevel(q, h.k, e_map(q, key.mu_bar),
                                             s.trunc - 1 - key.a)) {
      SeriesKey sk{key.a + pt.value, vec_add(key.mu_bar, vec_scale(h.k, pt.nu))};
      Rat v = s.coeff(sk) + c;
      s.set(sk, v);
    }
  }
  return s;
}

HeckeElement from_theta_series(const EvenSymmetricForm& q, const GradedSeries& s) {
  if (s.k < 0) throw domain_error("negative level has no Hecke elements");
  HeckeElement h;
  h.k = s.k;
  h.trunc = s.trunc;
  for (const auto& [key, c] : s.coeffs) {
    if (key.n >= s.trunc) continue;
    if (s.k == 0) {
      if (!is_zero(key.lam))
        throw domain_error("series is not in the image of the Hecke algebra");
      h.coeffs[HeckeKey{key.n, key.lam}] = c;
    } else if (in_box(key.lam, s.k)) {
      h.coeffs[HeckeKey{key.n, key.lam}] = c;
    }
  }
  if (s.k > 0) {
    // The residue-box coefficients determine the series iff it really is
    // the theta transform of something; rebuild and compare.
    GradedSeries check = to_theta_series(q, h);
    Int window = std::min(check.trunc, s.trunc);
    for (const auto& [key, c] : s.coeffs)
      if (key.n < window && check.coeff(key) != c)
        throw domain_error("series is not in the image of the Hecke algebra");
    for (const auto& [key, c] : check.coeffs)
      if (key.n < window && s.coeff(key) != c)
        throw domain_error("series is not in the image of the Hecke algebra");
  }
  return h;
}

HeckeElement convolve(const EvenSymmetricForm& q, const HeckeElement& h1,
                      const HeckeElement& h2) {
  return from_theta_series(q, series_mul(to_theta_series(q, h1), to_theta_series(q, h2)));
}

HeckeElement convolve_oracle(const EvenSymmetricForm& q, const HeckeElement& h1,
                             const HeckeElement& h2, const Int& window) {
  if (h1.k < 0 || h2.k < 0) throw domain_error("negative level has no Hecke elements");
  Int k = h1.k + h2.k;
  // Degrees above the operand windows could receive contributions from
  // unknown coefficients; cap the certified output degree accordingly.
  Int trunc = window + 1;
  auto low = [&](const HeckeElement& h) {
    Int lo = h.trunc;
    for (const auto& [key, c] : h.coeffs) {
      Int m = key.a + orbit_min(q, h.k, key.mu_bar);
      if (m < lo) lo = m;
    }
    return lo;
  };
  Int lo1 = low(h1), lo2 = low(h2);
  trunc = std::min(trunc, h1.trunc + theta_dip(q, h1.k) + lo2);
  trunc = std::min(trunc, h2.trunc + theta_dip(q, h2.k) + lo1);

  HeckeElement out;
  out.k = k;
  out.trunc = trunc;
  for (const auto& [key1, c1] : h1.coeffs) {
    DoubleCosetLabel l1{h1.k, key1.a, key1.mu_bar};
    for (const auto& [key2, c2] : h2.coeffs) {
      DoubleCosetLabel l2{h2.k, key2.a, key2.mu_bar};
      Int min1 = key1.a + orbit_min(q, h1.k, key1.mu_bar);
      Int min2 = key2.a + orbit_min(q, h2.k, key2.mu_bar);
      auto xs = left_coset_reps(q, l1, trunc - 1 - min2);
      auto ys = left_coset_reps(q, l2, trunc - 1 - min1);
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          Int a = x.a + y.a;
          if (a >= trunc) continue;
          LatticeVector mu = vec_add(x.mu, y.mu);
          if (!in_box(mu, k)) continue;
          HeckeKey key{a, mu};
          Rat v = out.coeff(key) + c1 * c2;
          out.set(key, v);
        }
      }
    }
  }
  return out;
}

PrincipalSeriesElement act_on_principal_series(const RootDatum& rd, const HeckeElement& h,
                                               const PrincipalSeriesElement& f) {
  if (!rd.is_torus())
    throw domain_error("principal-series action implemented for torus only");
  GradedSeries s = to_theta_series(rd.q, h);
  PrincipalSeriesElement out;
  out.n_min = s.n_min + f.n_min;
  out.trunc = std::min(s.trunc + f.n_min, f.trunc + s.n_min);
  for (const auto& [sk, cs] : s.coeffs) {
    for (const auto& [w, cf] : f.coeffs) {
      AffineWeight key{h.k + w.k, vec_add(sk.lam, w.lam), sk.n + w.n};
      if (key.n >= out.trunc) continue;
      Rat v = out.coeff(key) + cs * cf;
      if (v == 0)
        out.coeffs.erase(key);
      else
        out.coeffs[key] = v;
    }
  }
  return out;
}

PrincipalSeriesElement act_oracle(const IntegerBilinearForm& b, const EvenSymmetricForm& q,
                                  const HeckeElement& h, const PrincipalSeriesElement& f) {
  GradedSeries s = to_theta_series(q, h);  // window bookkeeping only
  PrincipalSeriesElement out;
  out.n_min = s.n_min + f.n_min;
  out.trunc = std::min(s.trunc + f.n_min, f.trunc + s.n_min);
  for (const auto& [key, ch] : h.coeffs) {
    DoubleCosetLabel label{h.k, key.a, key.mu_bar};
    auto reps = left_coset_reps(q, label, out.trunc - 1 - f.n_min);
    for (const auto& x : reps) {
      for (const auto& [w, cf] : f.coeffs) {
        HeisenbergElement gw{w.n, zero_vector(q.rank()), w.lam, w.k};
        HeisenbergElement prod = multiply(b, gw, x);
        LeftNormalForm nf = left_normal_form(b, prod);
        AffineWeight out_key{nf.rep.k, nf.rep.mu, nf.rep.a};
        if (out_key.n >= out.trunc) continue;
        Rat v = out.coeff(out_key) + ch * cf;
        if (v == 0)
          out.coeffs.erase(out_key);
        else
          out.coeffs[out_key] = v;
      }
    }
  }
  return out;
}

}  // namespace satake
