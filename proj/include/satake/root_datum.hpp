#pragma once

#include "satake/lattice.hpp"

#include <optional>
#include <string>

namespace satake {

/// A point (k, lam, n) of the affine weight lattice Z x L x Z:
/// k = level, n = loop-rotation (energy) degree.
struct AffineWeight {
  Int k;
  LatticeVector lam;
  Int n;

  bool operator==(const AffineWeight&) const = default;
  bool operator<(const AffineWeight& o) const {
    if (k != o.k) return k < o.k;
    if (n != o.n) return n < o.n;
    return lam < o.lam;
  }
};

/// Finite root datum driving the affine Weyl actions. The lattice basis is
/// the simple-coroot basis on the semisimple block, followed by central
/// torus coordinates the reflections do not touch.
struct RootDatum {
  int rank = 0;      // total lattice rank
  int ss_rank = 0;   // size of the semisimple block (0 for a torus)
  Matrix cartan;     // pairings <alpha_i, alpha_j^vee>, ss_rank x ss_rank
  EvenSymmetricForm q;
  bool simply_laced = false;

  // Derived data (semisimple block only).
  std::vector<LatticeVector> positive_coroots;  // full-rank vectors, zero on central part
  std::vector<LatticeVector> all_coroots;
  LatticeVector theta_coroot;   // theta^vee
  Covector theta_pairing;       // lam -> <theta, lam>
  std::vector<Matrix> weyl;     // finite Weyl group as matrices, [0] = identity
  std::vector<int> weyl_sign;   // det(w)
  std::vector<Rat> rho;         // Weyl vector in coroot coordinates (central part 0)
  Int dual_coxeter = 1;

  bool is_torus() const { return ss_rank == 0; }
};

RootDatum make_torus(int rank, const EvenSymmetricForm& q);
RootDatum make_semisimple(const Matrix& cartan, const EvenSymmetricForm& q, int central_rank = 0);

/// <alpha_i, lam> for a simple root of the semisimple block.
Int simple_pairing(const RootDatum& rd, int i, const LatticeVector& lam);

LatticeVector simple_reflect(const RootDatum& rd, int i, const LatticeVector& lam);

LatticeVector apply_matrix(const Matrix& m, const LatticeVector& v);

struct Reduction {
  LatticeVector rep;
  std::vector<std::string> transcript;  // generator names in application order
};

/// Walk lam into the level-k fundamental domain: W-dominant with
/// <theta, lam> <= k (k >= 1); for k = 0 only the finite reflections act.
/// Torus directions reduce coordinatewise mod k into [0, k).
Reduction reduce_to_dominant(const RootDatum& rd, const LatticeVector& lam, const Int& k);

bool is_level_dominant(const RootDatum& rd, const LatticeVector& lam, const Int& k);

std::vector<LatticeVector> enumerate_level_k_dominants(const RootDatum& rd, const Int& k,
                                                       std::optional<Int> central_box = {});

/// The translation part of the affine Weyl action on level-k weights:
/// (k, lam, n) -> (k, lam + k*nu, n - Q(nu,lam) - k*Q(nu,nu)/2).
AffineWeight monomial_translate(const EvenSymmetricForm& q, const AffineWeight& w,
                                const LatticeVector& nu);

/// The affine reflection s_0 on level-k weights (translate by theta^vee
/// after reflecting in theta). Semisimple data only.
AffineWeight affine_reflect_weight(const RootDatum& rd, const AffineWeight& w);

/// All points of the affine Weyl orbit of w with n < trunc (k >= 1), or the
/// finite W-orbit when k = 0.
std::vector<AffineWeight> affine_orbit(const RootDatum& rd, const AffineWeight& w,
                                       const Int& trunc);

/// Replays reduce_to_dominant on the full weight (k, lam, n), tracking n.
AffineWeight reduce_weight_to_dominant(const RootDatum& rd, const AffineWeight& w);

}  // namespace satake
