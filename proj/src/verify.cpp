#include "satake/verify.hpp"

#include "satake/characters.hpp"
#include "satake/format.hpp"
#include "satake/hecke.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace satake {

namespace {

struct Checker {
  VerifyReport report;

  void check(const std::string& name, bool cond) {
    if (cond) {
      ++report.passed;
      report.text += "PASS " + name + "\n";
    } else {
      ++report.failed;
      report.text += "FAIL " + name + "\n";
    }
  }
};

LatticeVector random_vector(Rng& rng, int rank, long long radius) {
  LatticeVector v(rank);
  for (auto& c : v) c = rng.range(-radius, radius);
  return v;
}

HeisenbergElement random_element(Rng& rng, int rank) {
  return HeisenbergElement{Int(rng.range(-4, 4)), random_vector(rng, rank, 3),
                           random_vector(rng, rank, 3), Int(rng.range(-2, 3))};
}

// Random strictly diagonally dominant negative b, so Q = b + b^T is
// negative definite.
IntegerBilinearForm random_form(Rng& rng, int rank) {
  IntegerBilinearForm b;
  b.gram.assign(rank, std::vector<Int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j) b.gram[i][j] = rng.range(-1, 1);
  for (int i = 0; i < rank; ++i) {
    Int row = 0;
    for (int j = 0; j < rank; ++j)
      if (j != i) row += abs(b.gram[i][j]) + abs(b.gram[j][i]);
    b.gram[i][i] = -(1 + row + rng.range(0, 1));
  }
  return b;
}

bool hecke_eq_window(const HeckeElement& a, const HeckeElement& b) {
  if (a.k != b.k) return false;
  Int w = std::min(a.trunc, b.trunc);
  for (const auto& [key, c] : a.coeffs)
    if (key.a < w && b.coeff(key) != c) return false;
  for (const auto& [key, c] : b.coeffs)
    if (key.a < w && a.coeff(key) != c) return false;
  return true;
}

bool series_eq_window(const GradedSeries& a, const GradedSeries& b) {
  if (a.k != b.k) return false;
  Int w = std::min(a.trunc, b.trunc);
  for (const auto& [key, c] : a.coeffs)
    if (key.n < w && b.coeff(key) != c) return false;
  for (const auto& [key, c] : b.coeffs)
    if (key.n < w && a.coeff(key) != c) return false;
  return true;
}

bool principal_eq_window(const PrincipalSeriesElement& a, const PrincipalSeriesElement& b) {
  Int w = std::min(a.trunc, b.trunc);
  for (const auto& [key, c] : a.coeffs)
    if (key.n < w && b.coeff(key) != c) return false;
  for (const auto& [key, c] : b.coeffs)
    if (key.n < w && a.coeff(key) != c) return false;
  return true;
}

RootDatum a_type_datum(int n) {
  Matrix cartan = cartan_type_a(n);
  EvenSymmetricForm q;
  q.gram.assign(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q.gram[i][j] = -cartan[i][j];
  return make_semisimple(cartan, q);
}

}  // namespace

VerifyReport verify_group(const WorkbenchConfig& cfg, std::uint64_t seed, int cases) {
  Checker ck;
  Rng rng(seed);

  std::vector<IntegerBilinearForm> forms{cfg.b};
  for (int rank = 1; rank <= 3; ++rank) forms.push_back(random_form(rng, rank));

  for (const auto& b : forms) {
    int rank = b.rank();
    EvenSymmetricForm q = derive_q(b);
    HeisenbergElement id = heisenberg_identity(rank);
    std::ostringstream tag;
    tag << "rank " << rank;

    bool assoc = true, inv = true, nf = true, semi = true, dc = true;
    for (int c = 0; c < cases; ++c) {
      HeisenbergElement g1 = random_element(rng, rank);
      HeisenbergElement g2 = random_element(rng, rank);
      HeisenbergElement g3 = random_element(rng, rank);
      if (multiply(b, multiply(b, g1, g2), g3) != multiply(b, g1, multiply(b, g2, g3)))
        assoc = false;
      if (multiply(b, g1, inverse(b, g1)) != id || multiply(b, inverse(b, g1), g1) != id)
        inv = false;

      LeftNormalForm f = left_normal_form(b, g1);
      HeisenbergElement gamma{0, random_vector(rng, rank, 3), zero_vector(rank), 0};
      if (left_normal_form(b, multiply(b, gamma, g1)).rep != f.rep) nf = false;
      if (multiply(b, HeisenbergElement{0, f.witness, zero_vector(rank), 0}, g1) != f.rep)
        nf = false;

      HeisenbergElement p1{Int(rng.range(-4, 4)), random_vector(rng, rank, 3),
                           random_vector(rng, rank, 3), Int(rng.range(1, 3))};
      HeisenbergElement p2{Int(rng.range(-4, 4)), random_vector(rng, rank, 3),
                           random_vector(rng, rank, 3), Int(rng.range(0, 3))};
      if (p2.k == 0) p2.mu = zero_vector(rank);
      if (!in_positive_semigroup(multiply(b, p1, p2))) semi = false;

      HeisenbergElement gamma2{0, random_vector(rng, rank, 3), zero_vector(rank), 0};
      if (double_coset_normal_form(b, q, multiply(b, gamma, multiply(b, p1, gamma2))) !=
          double_coset_normal_form(b, q, p1))
        dc = false;
    }
    ck.check("group associativity (" + tag.str() + ")", assoc);
    ck.check("group inverses (" + tag.str() + ")", inv);
    ck.check("left normal form is coset-invariant (" + tag.str() + ")", nf);
    ck.check("positive semigroup closed under products (" + tag.str() + ")", semi);
    ck.check("double-coset label is sandwich-invariant (" + tag.str() + ")", dc);
  }
  return ck.report;
}

VerifyReport verify_hecke(const WorkbenchConfig& cfg, std::uint64_t seed, int cases) {
  Checker ck;
  Rng rng(seed + 1);
  const EvenSymmetricForm& q = cfg.q;
  int rank = q.rank();
  Int W = rank == 1 ? 8 : 6;

  auto random_label = [&](Int k) {
    LatticeVector mu(rank);
    for (auto& c : mu) c = k == 0 ? Int(0) : Int(rng.range(0, static_cast<long long>(k) - 1));
    return DoubleCosetLabel{k, Int(rng.range(-2, 2)), mu};
  };

  HeckeElement unit = delta(DoubleCosetLabel{0, 0, zero_vector(rank)}, W + 3);

  bool hom = true, comm = true, unit_law = true, shift = true, round_trip = true;
  int pairs = std::max(1, cases / 4);
  for (int c = 0; c < pairs; ++c) {
    HeckeElement h1 = delta(random_label(Int(rng.range(1, 2))), W + 3);
    HeckeElement h2 = delta(random_label(Int(rng.range(1, 2))), W + 3);
    HeckeElement o12 = convolve_oracle(q, h1, h2, W);
    HeckeElement o21 = convolve_oracle(q, h2, h1, W);
    if (!hecke_eq_window(o12, o21)) comm = false;
    if (!series_eq_window(to_theta_series(q, o12),
                          series_mul(to_theta_series(q, h1), to_theta_series(q, h2))))
      hom = false;
    if (!hecke_eq_window(convolve_oracle(q, unit, h1, W), h1)) unit_law = false;
    if (!hecke_eq_window(convolve(q, unit, h1), h1)) unit_law = false;
    if (!hecke_eq_window(from_theta_series(q, to_theta_series(q, h1)), h1)) round_trip = false;

    Int a = rng.range(0, 2);
    HeckeElement va = delta(DoubleCosetLabel{0, a, zero_vector(rank)}, W + 3);
    HeckeElement shifted = convolve_oracle(q, va, h1, W);
    HeckeElement expect;
    expect.k = h1.k;
    expect.trunc = shifted.trunc;
    for (const auto& [key, cc] : h1.coeffs)
      if (key.a + a < expect.trunc) expect.coeffs[HeckeKey{key.a + a, key.mu_bar}] = cc;
    if (!hecke_eq_window(shifted, expect)) shift = false;
  }
  ck.check("theta transform is an algebra map (oracle vs series)", hom);
  ck.check("oracle convolution commutes", comm);
  ck.check("delta(0,0,0) is a unit", unit_law);
  ck.check("central shift moves v-degrees", shift);
  ck.check("theta round trip is the identity", round_trip);

  bool assoc = true;
  int triples = std::max(1, cases / 8);
  for (int c = 0; c < triples; ++c) {
    HeckeElement h1 = delta(random_label(1), W + 4);
    HeckeElement h2 = delta(random_label(1), W + 4);
    HeckeElement h3 = delta(random_label(1), W + 4);
    HeckeElement left = convolve_oracle(q, convolve_oracle(q, h1, h2, W), h3, W);
    HeckeElement right = convolve_oracle(q, h1, convolve_oracle(q, h2, h3, W), W);
    if (!hecke_eq_window(left, right)) assoc = false;
  }
  ck.check("oracle convolution associates", assoc);

  if (cfg.rd.is_torus()) {
    bool module_law = true, act_matches = true;
    PrincipalSeriesElement f0;
    f0.trunc = W;
    f0.n_min = 0;
    f0.coeffs[AffineWeight{0, zero_vector(rank), 0}] = 1;
    for (int c = 0; c < std::max(1, cases / 8); ++c) {
      HeckeElement h1 = delta(random_label(1), W + 2);
      HeckeElement h2 = delta(random_label(Int(rng.range(1, 2))), W + 2);
      PrincipalSeriesElement lhs =
          act_on_principal_series(cfg.rd, convolve(q, h1, h2), f0);
      PrincipalSeriesElement rhs =
          act_on_principal_series(cfg.rd, h1, act_on_principal_series(cfg.rd, h2, f0));
      if (!principal_eq_window(lhs, rhs)) module_law = false;
      if (!principal_eq_window(act_on_principal_series(cfg.rd, h1, f0),
                               act_oracle(cfg.b, q, h1, f0)))
        act_matches = false;
    }
    ck.check("principal-series action is a module action", module_law);
    ck.check("principal-series action matches the coset oracle", act_matches);
  }
  return ck.report;
}

VerifyReport verify_weyl(std::uint64_t seed, int cases) {
  Checker ck;
  Rng rng(seed + 2);

  for (int type = 1; type <= 2; ++type) {
    RootDatum rd = a_type_datum(type);
    std::string tag = "A" + std::to_string(type);

    bool orbit_const = true, cocycle = true, w_closed = true;
    for (int c = 0; c < cases; ++c) {
      Int k = rng.range(1, 4);
      LatticeVector lam = random_vector(rng, type, 12);
      LatticeVector moved = lam;
      for (int step = 0; step < 6; ++step) {
        if (rng.range(0, 1) == 0 && rd.ss_rank > 0) {
          moved = simple_reflect(rd, static_cast<int>(rng.range(0, type - 1)), moved);
        } else {
          LatticeVector nu = random_vector(rng, type, 2);
          moved = vec_add(moved, vec_scale(k, nu));
        }
      }
      if (reduce_to_dominant(rd, moved, k).rep != reduce_to_dominant(rd, lam, k).rep)
        orbit_const = false;

      AffineWeight w{k, lam, Int(rng.range(-3, 3))};
      LatticeVector nu1 = random_vector(rng, type, 2);
      LatticeVector nu2 = random_vector(rng, type, 2);
      if (monomial_translate(rd.q, monomial_translate(rd.q, w, nu1), nu2) !=
          monomial_translate(rd.q, w, vec_add(nu1, nu2)))
        cocycle = false;
    }
    {
      RootDatum rd1 = rd;
      AffineWeight base{2, zero_vector(type), 0};
      auto orb = affine_orbit(rd1, base, 6);
      std::set<AffineWeight> orbset(orb.begin(), orb.end());
      for (const auto& w : orb)
        for (const auto& m : rd1.weyl)
          if (!orbset.count(AffineWeight{w.k, apply_matrix(m, w.lam), w.n})) w_closed = false;
    }
    ck.check("reduction is constant on orbits (" + tag + ")", orbit_const);
    ck.check("translation cocycle cancels (" + tag + ")", cocycle);
    ck.check("orbits are W-closed in the window (" + tag + ")", w_closed);

    // Exhaustive agreement with brute-force orbit membership in a window.
    bool unique_rep = true, member = true;
    long long radius = type == 1 ? 50 : 12;
    for (Int k = 1; k <= 4; ++k) {
      auto doms = enumerate_level_k_dominants(rd, k);
      std::set<LatticeVector> domset(doms.begin(), doms.end());
      auto same_orbit = [&](const LatticeVector& x, const LatticeVector& y) {
        for (const auto& m : rd.weyl) {
          LatticeVector wy = apply_matrix(m, y);
          bool all = true;
          for (int j = 0; j < type; ++j) {
            Int d = x[j] - wy[j];
            if (d % k != 0) all = false;
          }
          if (all) return true;
        }
        return false;
      };
      std::function<void(LatticeVector&, int)> scan = [&](LatticeVector& cur, int pos) {
        if (pos == type) {
          LatticeVector rep = reduce_to_dominant(rd, cur, k).rep;
          if (!domset.count(rep)) unique_rep = false;
          if (!same_orbit(cur, rep)) member = false;
          return;
        }
        for (long long v = -radius; v <= radius; ++v) {
          cur[pos] = v;
          scan(cur, pos + 1);
        }
      };
      LatticeVector cur(type, 0);
      scan(cur, 0);
      for (const auto& d1 : doms)
        for (const auto& d2 : doms)
          if (d1 < d2 && same_orbit(d1, d2)) unique_rep = false;
    }
    ck.check("reduction lands on the unique dominant representative (" + tag + ")",
             unique_rep && member);
  }

  {
    RootDatum a1 = a_type_datum(1);
    bool sizes = true;
    for (Int k = 1; k <= 4; ++k) {
      size_t expect = static_cast<size_t>(k / 2) + 1;
      if (enumerate_level_k_dominants(a1, k).size() != expect) sizes = false;
    }
    ck.check("level-k dominant count for A1 is floor(k/2)+1", sizes);
  }
  return ck.report;
}

VerifyReport verify_char(std::uint64_t seed, int cases) {
  Checker ck;
  Rng rng(seed + 3);
  RootDatum a1 = a_type_datum(1);
  Int T = 7;

  bool oracle_pair = true, invariant = true, unitri = true, nonneg = true;
  for (Int k = 1; k <= 2; ++k) {
    for (const auto& lam : enumerate_level_k_dominants(a1, k)) {
      AffineWeight hw{k, lam, 0};
      GradedSeries wk = weyl_kac_character(a1, hw, T);
      GradedSeries fr = freudenthal_character(a1, hw, T);
      if (!series_eq_window(wk, fr)) oracle_pair = false;
      if (!check_invariance(a1, wk)) invariant = false;
      for (const auto& [key, c] : wk.coeffs)
        if (denominator(c) != 1 || c < 0) nonneg = false;

      auto expansion = expand_in_orbit_sums(a1, wk);
      if (expansion.count(hw) == 0 || expansion.at(hw) != 1) unitri = false;
      for (const auto& [w, c] : expansion)
        if (!dominance_leq(a1, w, hw)) unitri = false;
    }
  }
  ck.check("Weyl-Kac and Freudenthal characters agree (A1, levels 1-2)", oracle_pair);
  ck.check("characters are Weyl invariant on their windows", invariant);
  ck.check("character coefficients are nonnegative integers", nonneg);
  ck.check("orbit-sum expansion of a character is unitriangular", unitri);

  {
    GradedSeries basic = weyl_kac_character(a1, AffineWeight{1, zero_vector(1), 0}, 7);
    std::vector<Int> expect{1, 1, 2, 3, 5, 7, 11};
    bool partitions = true;
    for (int n = 0; n <= 6; ++n)
      if (basic.coeff(SeriesKey{n, zero_vector(1)}) != expect[n]) partitions = false;
    ck.check("basic representation zero-string gives partition numbers", partitions);
  }

  {
    // Torus ring sanity: orbit sums multiply associatively/commutatively and
    // expansion inverts orbit_sum.
    EvenSymmetricForm q;
    q.gram = {{-2}};
    RootDatum torus = make_torus(1, q);
    bool assoc = true, comm = true, basis = true, inv_orbit = true;
    for (int c = 0; c < std::max(1, cases / 10); ++c) {
      auto rand_orbit = [&]() {
        Int k = rng.range(1, 2);
        LatticeVector lam{Int(rng.range(0, static_cast<long long>(k) - 1))};
        return orbit_sum(torus, AffineWeight{k, lam, Int(rng.range(-1, 2))}, 8);
      };
      GradedSeries s1 = rand_orbit(), s2 = rand_orbit(), s3 = rand_orbit();
      if (!series_eq_window(series_mul(series_mul(s1, s2), s3),
                            series_mul(s1, series_mul(s2, s3))))
        assoc = false;
      if (!series_eq_window(series_mul(s1, s2), series_mul(s2, s1))) comm = false;
      if (!check_invariance(torus, s1)) inv_orbit = false;
      AffineWeight w{s1.k, LatticeVector{0}, 0};
      auto exp1 = expand_in_orbit_sums(torus, s1);
      (void)w;
      if (exp1.size() != 1 || exp1.begin()->second != 1) basis = false;
    }
    ck.check("series multiplication associates and commutes", assoc && comm);
    ck.check("orbit sums are invariant and expand to a single basis term",
             inv_orbit && basis);
  }

  {
    RootDatum a1d = a_type_datum(1);
    bool dom = true;
    if (!dominance_leq(a1d, AffineWeight{1, {0}, 0}, AffineWeight{1, {0}, 0})) dom = false;
    if (!dominance_leq(a1d, AffineWeight{1, {0}, 1}, AffineWeight{1, {0}, 0})) dom = false;
    if (dominance_leq(a1d, AffineWeight{1, {0}, 0}, AffineWeight{1, {0}, 1})) dom = false;
    if (!dominance_leq(a1d, AffineWeight{1, {0}, 0}, AffineWeight{1, {1}, 0})) dom = false;
    ck.check("dominance order matches the affine simple-root cone", dom);
  }
  return ck.report;
}

VerifyReport verify_all(const WorkbenchConfig& cfg, std::uint64_t seed, int cases) {
  VerifyReport r;
  r.merge(verify_group(cfg, seed, cases));
  r.merge(verify_hecke(cfg, seed, cases));
  r.merge(verify_weyl(seed, cases));
  r.merge(verify_char(seed, cases));
  return r;
}

}  // namespace satake
