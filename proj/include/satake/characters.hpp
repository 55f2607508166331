#pragma once

#include "satake/series.hpp"

namespace satake {

/// Truncated character of the integrable irreducible highest-weight module
/// at level hw.k >= 1, computed from the alternating numerator divided by
/// the affine denominator product. Requires a simply-laced semisimple datum
/// with no central factor.
GradedSeries weyl_kac_character(const RootDatum& rd, const AffineWeight& hw, const Int& trunc);

/// Same character via the Freudenthal multiplicity recursion; serves as an
/// independent cross-check of weyl_kac_character. All multiplicities are
/// verified to be nonnegative integers.
GradedSeries freudenthal_character(const RootDatum& rd, const AffineWeight& hw, const Int& trunc);

}  // namespace satake
