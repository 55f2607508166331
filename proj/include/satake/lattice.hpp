#pragma once

#include "satake/numeric.hpp"

#include <optional>
#include <vector>

namespace satake {

using LatticeVector = std::vector<Int>;
using Covector = std::vector<Int>;  // integer linear functional on the lattice
using Matrix = std::vector<std::vector<Int>>;

LatticeVector vec_add(const LatticeVector& x, const LatticeVector& y);
LatticeVector vec_sub(const LatticeVector& x, const LatticeVector& y);
LatticeVector vec_neg(const LatticeVector& x);
LatticeVector vec_scale(const Int& c, const LatticeVector& x);
LatticeVector zero_vector(int rank);
bool is_zero(const LatticeVector& x);

/// A Z-valued bilinear form b on the lattice, given by its Gram matrix.
struct IntegerBilinearForm {
  Matrix gram;
  int rank() const { return static_cast<int>(gram.size()); }
};

/// The even symmetric form Q = b + b^T.
struct EvenSymmetricForm {
  Matrix gram;
  int rank() const { return static_cast<int>(gram.size()); }
};

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const Matrix& m);

EvenSymmetricForm derive_q(const IntegerBilinearForm& b);

Int eval_b(const IntegerBilinearForm& b, const LatticeVector& x, const LatticeVector& y);
Int eval_q(const EvenSymmetricForm& q, const LatticeVector& x, const LatticeVector& y);

/// The dual map e: v -> Q(v, .) as an integer covector.
Covector e_map(const EvenSymmetricForm& q, const LatticeVector& v);

Int eval_covector(const Covector& c, const LatticeVector& v);

/// Leading principal minors alternate in sign (-1)^i.
bool is_negative_definite(const EvenSymmetricForm& q);

/// Symmetry + even diagonal; throws config_error on violation.
void validate_even_symmetric(const EvenSymmetricForm& q);

struct SublevelPoint {
  LatticeVector nu;
  Int value;
};

/// All nu with val(nu) = -shift(nu) - k*Q(nu,nu)/2 <= bound, together with
/// val(nu). Requires Q negative definite and k >= 1; exhaustive by recursive
/// coordinate elimination with exact rational bounds. Output sorted by
/// (value, lex nu).
std::vector<SublevelPoint> enumerate_sublevel(const EvenSymmetricForm& q, const Int& k,
                                              const Covector& shift, const Int& bound);

struct SublevelPointRat {
  LatticeVector nu;
  Rat value;
};

/// Rational-shift generalization used by the character numerators.
std::vector<SublevelPointRat> enumerate_sublevel_rat(const EvenSymmetricForm& q, const Int& k,
                                                     const std::vector<Rat>& shift,
                                                     const Rat& bound);

/// Exact minimum of val(nu) over all nu (attained; Q negative definite).
Int sublevel_min(const EvenSymmetricForm& q, const Int& k, const Covector& shift);

}  // namespace satake
