#include "satake/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace satake {

namespace {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Full-rank matrix of s_i in coroot coordinates: e_j -> e_j - C[i][j] e_i,
// identity on the central block.
Matrix simple_reflection_matrix(const Matrix& cartan, int rank, int i) {
  Matrix m = identity_matrix(rank);
  int ss = static_cast<int>(cartan.size());
  for (int j = 0; j < ss; ++j) m[i][j] -= cartan[i][j];
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Covector covector_compose(const Covector& c, const Matrix& m) {
  int n = static_cast<int>(m.size());
  Covector out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) out[j] += c[a] * m[a][j];
  return out;
}

std::vector<Rat> solve_rational(const Matrix& a, const std::vector<Rat>& rhs) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n] = rhs[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw domain_error("singular pairing matrix");
    std::swap(m[col], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

void validate_cartan(const Matrix& c) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n)
      throw config_error("Cartan matrix is not square");
    if (c[i][i] != 2) throw config_error("Cartan matrix diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) throw config_error("Cartan matrix has a positive off-diagonal entry");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw config_error("Cartan matrix zero pattern is not symmetric");
    }
  }
  // Finite type: all leading principal minors positive.
  for (int s = 1; s <= n; ++s) {
    Matrix sub(s, std::vector<Int>(s));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) sub[i][j] = c[i][j];
    if (determinant(sub) <= 0)
      throw config_error("Cartan matrix is not of finite type");
  }
}

void validate_invariance(const RootDatum& rd) {
  for (int i = 0; i < rd.ss_rank; ++i) {
    Matrix s = simple_reflection_matrix(rd.cartan, rd.rank, i);
    for (int a = 0; a < rd.rank; ++a) {
      LatticeVector ea(rd.rank, 0), sa;
      ea[a] = 1;
      sa = apply_matrix(s, ea);
      for (int b = 0; b < rd.rank; ++b) {
        LatticeVector eb(rd.rank, 0);
        eb[b] = 1;
        LatticeVector sb = apply_matrix(s, eb);
        if (eval_q(rd.q, sa, sb) != eval_q(rd.q, ea, eb)) {
          std::ostringstream os;
          os << "form is not reflection-invariant at basis pair (" << a << "," << b
             << ") under generator " << i;
          throw config_error(os.str());
        }
      }
    }
  }
}

}  // namespace

LatticeVector apply_matrix(const Matrix& m, const LatticeVector& v) {
  int n = static_cast<int>(m.size());
  LatticeVector out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Int simple_pairing(const RootDatum& rd, int i, const LatticeVector& lam) {
  Int s = 0;
  for (int j = 0; j < rd.ss_rank; ++j) s += rd.cartan[i][j] * lam[j];
  return s;
}

LatticeVector simple_reflect(const RootDatum& rd, int i, const LatticeVector& lam) {
  LatticeVector out = lam;
  out[i] -= simple_pairing(rd, i, lam);
  return out;
}

RootDatum make_torus(int rank, const EvenSymmetricForm& q) {
  if (rank <= 0) throw config_error("torus rank must be positive");
  if (static_cast<int>(q.gram.size()) != rank)
    throw config_error("form size does not match rank");
  validate_even_symmetric(q);
  RootDatum rd;
  rd.rank = rank;
  rd.ss_rank = 0;
  rd.q = q;
  rd.simply_laced = true;
  return rd;
}

RootDatum make_semisimple(const Matrix& cartan, const EvenSymmetricForm& q, int central_rank) {
  validate_cartan(cartan);
  if (central_rank < 0) throw config_error("central rank must be nonnegative");
  int ss = static_cast<int>(cartan.size());
  int rank = ss + central_rank;
  if (static_cast<int>(q.gram.size()) != rank)
    throw config_error("form size does not match rank");
  validate_even_symmetric(q);

  RootDatum rd;
  rd.rank = rank;
  rd.ss_rank = ss;
  rd.cartan = cartan;
  rd.q = q;
  rd.simply_laced = true;
  for (int i = 0; i < ss && rd.simply_laced; ++i)
    for (int j = 0; j < ss; ++j)
      if (i != j && cartan[i][j] < -1) rd.simply_laced = false;

  validate_invariance(rd);

  // Finite Weyl group by closure under the simple reflections.
  std::vector<Matrix> gens(ss);
  for (int i = 0; i < ss; ++i) gens[i] = simple_reflection_matrix(cartan, rank, i);
  std::map<Matrix, int> seen;
  std::deque<Matrix> queue;
  Matrix id = identity_matrix(rank);
  seen[id] = 1;
  queue.push_back(id);
  while (!queue.empty()) {
    Matrix w = queue.front();
    queue.pop_front();
    int sign = seen[w];
    for (const auto& g : gens) {
      Matrix wg = mat_mul(g, w);
      if (seen.emplace(wg, -sign).second) queue.push_back(wg);
    }
  }
  for (const auto& [w, sign] : seen) {
    rd.weyl.push_back(w);
    rd.weyl_sign.push_back(sign);
  }

  // Roots as (pairing covector, coroot) pairs, closed under reflections.
  std::set<std::pair<Covector, LatticeVector>> root_set;
  std::deque<std::pair<Covector, LatticeVector>> rq;
  for (int i = 0; i < ss; ++i) {
    Covector ci(rank, 0);
    for (int j = 0; j < ss; ++j) ci[j] = cartan[i][j];
    LatticeVector ei(rank, 0);
    ei[i] = 1;
    auto p = std::make_pair(ci, ei);
    root_set.insert(p);
    rq.push_back(p);
  }
  while (!rq.empty()) {
    auto [cov, crt] = rq.front();
    rq.pop_front();
    for (int i = 0; i < ss; ++i) {
      auto p = std::make_pair(covector_compose(cov, gens[i]), apply_matrix(gens[i], crt));
      if (root_set.insert(p).second) rq.push_back(p);
    }
  }
  std::map<LatticeVector, Covector> pairing_of;
  for (const auto& [cov, crt] : root_set) {
    rd.all_coroots.push_back(crt);
    pairing_of[crt] = cov;
    bool pos = true;
    for (int j = 0; j < ss; ++j)
      if (crt[j] < 0) pos = false;
    if (pos) rd.positive_coroots.push_back(crt);
  }

  // Highest root: the positive root of maximal height in the simple-root
  // basis (coefficients recovered from the pairing covector).
  Matrix ct(ss, std::vector<Int>(ss));
  for (int i = 0; i < ss; ++i)
    for (int j = 0; j < ss; ++j) ct[i][j] = cartan[j][i];
  Rat best_height(-1);
  for (const auto& crt : rd.positive_coroots) {
    const Covector& cov = pairing_of[crt];
    std::vector<Rat> rhs(ss);
    for (int j = 0; j < ss; ++j) rhs[j] = Rat(cov[j]);
    std::vector<Rat> coeffs = solve_rational(ct, rhs);
    Rat h = 0;
    for (const auto& c : coeffs) h += c;
    if (h > best_height) {
      best_height = h;
      rd.theta_coroot = crt;
      rd.theta_pairing = cov;
    }
  }

  rd.dual_coxeter = 1;
  for (int j = 0; j < ss; ++j) rd.dual_coxeter += rd.theta_coroot[j];

  std::vector<Rat> ones(ss, Rat(1));
  std::vector<Rat> rho_ss = solve_rational(cartan, ones);
  rd.rho.assign(rank, Rat(0));
  for (int j = 0; j < ss; ++j) rd.rho[j] = rho_ss[j];

  return rd;
}

namespace {

Int theta_value(const RootDatum& rd, const LatticeVector& lam) {
  Int s = 0;
  for (int j = 0; j < rd.rank; ++j) s += rd.theta_pairing[j] * lam[j];
  return s;
}

// lam -> s_theta(lam) + k * theta^vee
LatticeVector affine_flip(const RootDatum& rd, const LatticeVector& lam, const Int& k) {
  LatticeVector out = lam;
  Int t = theta_value(rd, lam);
  for (int j = 0; j < rd.rank; ++j) out[j] += (k - t) * rd.theta_coroot[j];
  return out;
}

}  // namespace

Reduction reduce_to_dominant(const RootDatum& rd, const LatticeVector& lam, const Int& k) {
  if (k < 0) throw domain_error("level must be nonnegative");
  Reduction r;
  r.rep = lam;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rd.ss_rank; ++i) {
      if (simple_pairing(rd, i, r.rep) < 0) {
        r.rep = simple_reflect(rd, i, r.rep);
        r.transcript.push_back("s" + std::to_string(i + 1));
        moved = true;
        break;
      }
    }
    if (moved) continue;
    if (rd.ss_rank > 0 && k > 0 && theta_value(rd, r.rep) > k) {
      r.rep = affine_flip(rd, r.rep, k);
      r.transcript.push_back("s0");
      moved = true;
    }
  }
  // Central/torus directions: translate into [0, k) coordinatewise.
  if (k > 0) {
    LatticeVector nu(rd.rank, 0);
    bool shifted = false;
    for (int j = rd.ss_rank == 0 ? 0 : rd.ss_rank; j < rd.rank; ++j) {
      Int rem = r.rep[j] % k;
      if (rem < 0) rem += k;
      nu[j] = (rem - r.rep[j]) / k;
      if (nu[j] != 0) shifted = true;
      r.rep[j] = rem;
    }
    if (shifted) {
      std::ostringstream os;
      os << "t[";
      for (int j = 0; j < rd.rank; ++j) os << (j ? "," : "") << nu[j];
      os << "]";
      r.transcript.push_back(os.str());
    }
  }
  return r;
}

bool is_level_dominant(const RootDatum& rd, const LatticeVector& lam, const Int& k) {
  for (int i = 0; i < rd.ss_rank; ++i)
    if (simple_pairing(rd, i, lam) < 0) return false;
  if (k > 0) {
    if (rd.ss_rank > 0 && theta_value(rd, lam) > k) return false;
    for (int j = rd.ss_rank == 0 ? 0 : rd.ss_rank; j < rd.rank; ++j)
      if (lam[j] < 0 || lam[j] >= k) return false;
  }
  return true;
}

std::vector<LatticeVector> enumerate_level_k_dominants(const RootDatum& rd, const Int& k,
                                                       std::optional<Int> central_box) {
  if (k < 0) throw domain_error("level must be nonnegative");
  int ss = rd.ss_rank;
  int central_lo = ss;
  std::vector<LatticeVector> ss_part;
  if (ss == 0) {
    ss_part.push_back(LatticeVector{});
    central_lo = 0;
  } else if (k == 0) {
    ss_part.push_back(LatticeVector(ss, 0));
  } else {
    // Coroot coordinates of alcove points are bounded by k times the row
    // sums of the inverse Cartan matrix.
    Int box = 0;
    for (int i = 0; i < ss; ++i) {
      std::vector<Rat> e(ss, Rat(0));
      e[i] = 1;
      std::vector<Rat> col = solve_rational(rd.cartan, e);
      Rat rs = 0;
      for (auto& c : col) rs += c < 0 ? -c : c;
      Int ub = rat_ceil(rs * Rat(k));
      if (ub > box) box = ub;
    }
    LatticeVector cur(ss, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == ss) {
        LatticeVector full = cur;
        full.resize(rd.rank, 0);
        bool dom = true;
        for (int i = 0; i < ss && dom; ++i)
          if (simple_pairing(rd, i, full) < 0) dom = false;
        if (dom && theta_value(rd, full) <= k)
          ss_part.push_back(cur);
        return;
      }
      for (Int v = 0; v <= box; ++v) {
        cur[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }

  Int cb = k;
  if (k == 0) {
    if (rd.rank > central_lo || rd.ss_rank == 0) {
      if (!central_box) throw domain_error("level 0 needs an explicit torus box");
      cb = *central_box;
    }
  }
  std::vector<LatticeVector> out;
  int nfree = rd.rank - central_lo;
  std::vector<Int> cen(nfree, 0);
  std::function<void(int)> recc = [&](int pos) {
    if (pos == nfree) {
      for (const auto& sp : ss_part) {
        LatticeVector full(rd.rank, 0);
        for (int j = 0; j < ss; ++j) full[j] = sp[j];
        for (int j = 0; j < nfree; ++j) full[central_lo + j] = cen[j];
        out.push_back(full);
      }
      return;
    }
    for (Int v = 0; v < cb; ++v) {
      cen[pos] = v;
      recc(pos + 1);
    }
    if (cb == 0) recc(pos + 1);
    return;
  };
  if (nfree == 0) {
    for (const auto& sp : ss_part) {
      LatticeVector full(rd.rank, 0);
      for (int j = 0; j < ss; ++j) full[j] = sp[j];
      out.push_back(full);
    }
  } else {
    recc(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineWeight monomial_translate(const EvenSymmetricForm& q, const AffineWeight& w,
                                const LatticeVector& nu) {
  AffineWeight out = w;
  out.lam = vec_add(w.lam, vec_scale(w.k, nu));
  out.n = w.n - eval_q(q, nu, w.lam) - w.k * eval_q(q, nu, nu) / 2;
  return out;
}

AffineWeight affine_reflect_weight(const RootDatum& rd, const AffineWeight& w) {
  if (rd.ss_rank == 0) throw domain_error("affine reflection needs a semisimple block");
  LatticeVector refl = w.lam;
  Int t = theta_value(rd, w.lam);
  for (int j = 0; j < rd.rank; ++j) refl[j] -= t * rd.theta_coroot[j];
  AffineWeight mid{w.k, refl, w.n};
  return monomial_translate(rd.q, mid, rd.theta_coroot);
}

std::vector<AffineWeight> affine_orbit(const RootDatum& rd, const AffineWeight& w,
                                       const Int& trunc) {
  std::set<AffineWeight> out;
  std::vector<std::pair<LatticeVector, Int>> finite_orbit;
  if (rd.ss_rank == 0) {
    finite_orbit.emplace_back(w.lam, w.n);
  } else {
    std::set<LatticeVector> seen;
    for (const auto& m : rd.weyl) {
      LatticeVector wl = apply_matrix(m, w.lam);
      if (seen.insert(wl).second) finite_orbit.emplace_back(wl, w.n);
    }
  }
  if (w.k == 0) {
    for (auto& [lam, n] : finite_orbit)
      if (n < trunc) out.insert(AffineWeight{w.k, lam, n});
  } else {
    for (auto& [lam, n] : finite_orbit) {
      Int budget = trunc - 1 - n;
      for (const auto& pt : enumerate_sublevel(rd.q, w.k, e_map(rd.q, lam), budget)) {
        AffineWeight img = monomial_translate(rd.q, AffineWeight{w.k, lam, n}, pt.nu);
        out.insert(img);
      }
    }
  }
  return std::vector<AffineWeight>(out.begin(), out.end());
}

AffineWeight reduce_weight_to_dominant(const RootDatum& rd, const AffineWeight& w) {
  AffineWeight cur = w;
  if (cur.k < 0) throw domain_error("level must be nonnegative");
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rd.ss_rank; ++i) {
      if (simple_pairing(rd, i, cur.lam) < 0) {
        cur.lam = simple_reflect(rd, i, cur.lam);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    if (rd.ss_rank > 0 && cur.k > 0 && theta_value(rd, cur.lam) > cur.k) {
      cur = affine_reflect_weight(rd, cur);
      moved = true;
    }
  }
  if (cur.k > 0) {
    LatticeVector nu(rd.rank, 0);
    bool shifted = false;
    for (int j = rd.ss_rank == 0 ? 0 : rd.ss_rank; j < rd.rank; ++j) {
      Int rem = cur.lam[j] % cur.k;
      if (rem < 0) rem += cur.k;
      if (rem != cur.lam[j]) shifted = true;
      nu[j] = (rem - cur.lam[j]) / cur.k;
    }
    if (shifted) cur = monomial_translate(rd.q, cur, nu);
  }
  return cur;
}

}  // namespace satake
