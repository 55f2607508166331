#pragma once

#include "satake/lattice.hpp"

namespace satake {

/// An element (a, lam, mu, k) of the centrally extended group
/// Z x (L (+) L) x Z with the twisted multiplication.
struct HeisenbergElement {
  Int a;
  LatticeVector lam;
  LatticeVector mu;
  Int k;

  bool operator==(const HeisenbergElement&) const = default;
};

/// Canonical label of a double coset of the lattice subgroup:
/// level k, v-degree a, and the residue mu_bar in the box [0,k)^r.
struct DoubleCosetLabel {
  Int k;
  Int a;
  LatticeVector mu_bar;

  bool operator==(const DoubleCosetLabel&) const = default;
  auto operator<=>(const DoubleCosetLabel&) const = default;
};

HeisenbergElement heisenberg_identity(int rank);

HeisenbergElement multiply(const IntegerBilinearForm& b, const HeisenbergElement& g1,
                           const HeisenbergElement& g2);

HeisenbergElement inverse(const IntegerBilinearForm& b, const HeisenbergElement& g);

struct LeftNormalForm {
  HeisenbergElement rep;  // the unique coset element with lam = 0
  LatticeVector witness;  // -lam; prepending (0,witness,0,0) recovers rep
};

LeftNormalForm left_normal_form(const IntegerBilinearForm& b, const HeisenbergElement& g);

/// True iff k > 0, or k = 0 and mu = 0.
bool in_positive_semigroup(const HeisenbergElement& g);

DoubleCosetLabel double_coset_normal_form(const IntegerBilinearForm& b,
                                          const EvenSymmetricForm& q,
                                          const HeisenbergElement& g);

/// All left-coset representatives (a_nu, 0, mu_bar + k*nu, k) of the double
/// coset with a_nu <= bound; exhaustive. For k = 0 the single representative
/// is returned regardless of the bound.
std::vector<HeisenbergElement> left_coset_reps(const EvenSymmetricForm& q,
                                               const DoubleCosetLabel& label, const Int& bound);

}  // namespace satake
