#include "satake/characters.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace satake {

namespace {

using RatVec = std::vector<Rat>;

RatVec to_rat(const LatticeVector& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

RatVec apply_matrix_rat(const Matrix& m, const RatVec& v) {
  int n = static_cast<int>(m.size());
  RatVec out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

RatVec gram_times(const EvenSymmetricForm& q, const RatVec& v) {
  int n = q.rank();
  RatVec out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rat(q.gram[i][j]) * v[j];
  return out;
}

Rat eval_q_rat(const EvenSymmetricForm& q, const RatVec& x, const RatVec& y) {
  RatVec qy = gram_times(q, y);
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * qy[i];
  return s;
}

Int as_int(const Rat& r, const char* what) {
  if (denominator(r) != 1) throw domain_error(std::string("non-integral ") + what);
  return numerator(r);
}

void require_character_domain(const RootDatum& rd, const AffineWeight& hw) {
  if (rd.ss_rank == 0 || rd.ss_rank != rd.rank)
    throw domain_error("characters need a semisimple datum without central factor");
  if (!rd.simply_laced) throw domain_error("twisted dual not supported");
  if (hw.k < 1) throw domain_error("characters need level at least 1");
  if (!is_level_dominant(rd, hw.lam, hw.k))
    throw domain_error("highest weight must be level-dominant");
}

Int coord_sum(const LatticeVector& v) {
  Int s = 0;
  for (const auto& c : v) s += c;
  return s;
}

// Candidate support: weights mu of the module satisfy
// P(mu + rho) <= P(hw.lam + rho) + 2K * depth with P = -Q, K = k + h_vee.
// Maps each admissible lam to the least depth at which it may appear.
std::map<LatticeVector, Int> candidate_ball(const RootDatum& rd, const AffineWeight& hw,
                                            const Int& max_depth, const Int& K) {
  std::map<LatticeVector, Int> dmin;
  if (max_depth < 0) return dmin;
  RatVec hwr = to_rat(hw.lam);
  for (int j = 0; j < rd.rank; ++j) hwr[j] += rd.rho[j];
  Rat p0 = -eval_q_rat(rd.q, hwr, hwr);
  Rat prho = -eval_q_rat(rd.q, rd.rho, rd.rho);
  // val(lam) = -2Q(rho,lam) - Q(lam,lam) = P(lam+rho) - P(rho)
  RatVec shift = gram_times(rd.q, rd.rho);
  for (auto& s : shift) s *= 2;
  Rat bound = p0 + Rat(2 * K * max_depth) - prho;
  for (const auto& pt : enumerate_sublevel_rat(rd.q, 2, shift, bound)) {
    Rat p = pt.value + prho;  // P(lam + rho)
    Rat excess = (p - p0) / Rat(2 * K);
    Int d = rat_ceil(excess);
    if (d < 0) d = 0;
    dmin[pt.nu] = d;
  }
  return dmin;
}

// Keys at a fixed depth, ordered so that adding a positive coroot moves
// strictly earlier: coordinate-sum descending, then lexicographic.
std::vector<LatticeVector> layer_order(const std::map<LatticeVector, Int>& ball,
                                       const Int& depth) {
  std::vector<LatticeVector> out;
  for (const auto& [lam, d] : ball)
    if (d <= depth) out.push_back(lam);
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    Int sa = coord_sum(a), sb = coord_sum(b);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return out;
}

GradedSeries series_from_map(const AffineWeight& hw, const Int& trunc,
                             const std::map<SeriesKey, Rat>& m) {
  GradedSeries out;
  out.k = hw.k;
  out.n_min = hw.n;
  out.trunc = trunc;
  for (const auto& [key, c] : m)
    if (c != 0) out.coeffs[key] = c;
  return out;
}

}  // namespace

GradedSeries weyl_kac_character(const RootDatum& rd, const AffineWeight& hw, const Int& trunc) {
  require_character_domain(rd, hw);
  Int K = hw.k + rd.dual_coxeter;
  Int T = trunc - hw.n;  // depth window

  // Alternating numerator: sum of det(w) over the shifted affine orbit of
  // hw + rho_hat, recentred by -rho_hat.
  std::map<SeriesKey, Rat> num;
  RatVec hwr = to_rat(hw.lam);
  for (int j = 0; j < rd.rank; ++j) hwr[j] += rd.rho[j];
  for (size_t wi = 0; wi < rd.weyl.size(); ++wi) {
    RatVec u = apply_matrix_rat(rd.weyl[wi], hwr);
    RatVec shift = gram_times(rd.q, u);
    for (const auto& pt : enumerate_sublevel_rat(rd.q, K, shift, Rat(T))) {
      Rat n_rat = Rat(hw.n) + pt.value;
      Int n = as_int(n_rat, "character v-degree");
      if (n >= trunc) continue;
      LatticeVector lam(rd.rank);
      for (int j = 0; j < rd.rank; ++j)
        lam[j] = as_int(u[j] + Rat(K * pt.nu[j]) - rd.rho[j], "character exponent");
      SeriesKey key{n, lam};
      Rat c = num.count(key) ? num[key] : Rat(0);
      c += rd.weyl_sign[wi];
      if (c == 0)
        num.erase(key);
      else
        num[key] = c;
    }
  }

  // Denominator: product over the positive roots of the untwisted dual,
  // real roots with multiplicity 1 and imaginary ones with the rank.
  std::map<SeriesKey, Rat> den;
  den[SeriesKey{0, zero_vector(rd.rank)}] = 1;
  auto apply_binomial = [&](const Int& dn, const LatticeVector& dlam) {
    // den *= 1 - v^dn x^dlam, truncated to depth < T
    std::map<SeriesKey, Rat> next = den;
    for (const auto& [key, c] : den) {
      Int n = key.n + dn;
      if (n >= T) continue;
      SeriesKey shifted{n, vec_add(key.lam, dlam)};
      Rat v = (next.count(shifted) ? next[shifted] : Rat(0)) - c;
      if (v == 0)
        next.erase(shifted);
      else
        next[shifted] = v;
    }
    den = std::move(next);
  };
  for (const auto& beta : rd.positive_coroots) apply_binomial(0, vec_neg(beta));
  for (Int m = 1; m < T; ++m) {
    for (int r = 0; r < rd.rank; ++r) apply_binomial(m, zero_vector(rd.rank));
    for (const auto& beta : rd.all_coroots) apply_binomial(m, vec_neg(beta));
  }

  // Divide: c(key) = num(key) - sum over den terms of den(d) * c(key - d).
  auto ball = candidate_ball(rd, hw, T - 1, K);
  std::map<SeriesKey, Rat> ch;
  for (Int n = hw.n; n < trunc; ++n) {
    Int depth = n - hw.n;
    for (const auto& lam : layer_order(ball, depth)) {
      SeriesKey key{n, lam};
      Rat c = num.count(key) ? num.at(key) : Rat(0);
      for (const auto& [d, dc] : den) {
        if (d.n == 0 && is_zero(d.lam)) continue;
        SeriesKey prev{n - d.n, vec_sub(lam, d.lam)};
        auto it = ch.find(prev);
        if (it != ch.end()) c -= dc * it->second;
      }
      if (c != 0) ch[key] = c;
    }
  }
  return series_from_map(hw, trunc, ch);
}

GradedSeries freudenthal_character(const RootDatum& rd, const AffineWeight& hw,
                                   const Int& trunc) {
  require_character_domain(rd, hw);
  Int K = hw.k + rd.dual_coxeter;
  Int T = trunc - hw.n;
  auto ball = candidate_ball(rd, hw, T - 1, K);

  RatVec rho = rd.rho;
  RatVec hwr = to_rat(hw.lam);
  for (int j = 0; j < rd.rank; ++j) hwr[j] += rho[j];
  Rat p0 = -eval_q_rat(rd.q, hwr, hwr);

  auto in_ball = [&](const LatticeVector& lam, const Int& depth) {
    auto it = ball.find(lam);
    return it != ball.end() && it->second <= depth;
  };

  std::map<SeriesKey, Rat> mult;
  auto mult_of = [&](const Int& n, const LatticeVector& lam) -> Rat {
    auto it = mult.find(SeriesKey{n, lam});
    return it == mult.end() ? Rat(0) : it->second;
  };

  for (Int n = hw.n; n < trunc; ++n) {
    Int depth = n - hw.n;
    for (const auto& lam : layer_order(ball, depth)) {
      SeriesKey key{n, lam};
      if (lam == hw.lam && n == hw.n) {
        mult[key] = 1;
        continue;
      }
      RatVec lr = to_rat(lam);
      for (int j = 0; j < rd.rank; ++j) lr[j] += rho[j];
      Rat c = p0 + eval_q_rat(rd.q, lr, lr) + Rat(2 * K * depth);

      Rat rhs = 0;
      // Depth-preserving positive roots.
      for (const auto& beta : rd.positive_coroots) {
        LatticeVector cur = lam;
        for (Int j = 1;; ++j) {
          cur = vec_add(cur, beta);
          if (!in_ball(cur, depth)) break;
          Rat mv = mult_of(n, cur);
          if (mv != 0) rhs += mv * Rat(-eval_q(rd.q, cur, beta));
        }
      }
      // Depth-lowering real and imaginary roots.
      for (Int m = 1; m <= depth; ++m) {
        for (const auto& beta : rd.all_coroots) {
          for (Int j = 1; j * m <= depth; ++j) {
            LatticeVector cur = vec_add(lam, vec_scale(j, beta));
            Rat mv = mult_of(n - j * m, cur);
            if (mv != 0) rhs += mv * Rat(-eval_q(rd.q, cur, beta) + hw.k * m);
          }
        }
        for (Int j = 1; j * m <= depth; ++j) {
          Rat mv = mult_of(n - j * m, lam);
          if (mv != 0) rhs += Rat(rd.rank) * mv * Rat(hw.k * m);
        }
      }
      rhs *= 2;

      if (c == 0) {
        if (rhs != 0) throw domain_error("multiplicity recursion is inconsistent");
        continue;
      }
      Rat m = rhs / c;
      if (denominator(m) != 1 || m < 0)
        throw domain_error("multiplicity recursion produced a non-integer");
      if (m != 0) mult[key] = m;
    }
  }
  return series_from_map(hw, trunc, mult);
}

}  // namespace satake
