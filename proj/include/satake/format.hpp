#pragma once

#include "satake/hecke.hpp"

#include <string>

namespace satake {

/// Canonical renderings: terms sorted by (n, lex lam), rationals in lowest
/// terms, integers without a denominator. Same object, same bytes.
std::string format_series(const GradedSeries& s);
std::string format_hecke(const HeckeElement& h);
std::string format_principal(const PrincipalSeriesElement& f);
std::string format_heisenberg(const HeisenbergElement& g);
std::string format_label(const DoubleCosetLabel& label);
std::string format_weight(const AffineWeight& w);
std::string format_vector(const LatticeVector& v);

/// Comma-separated integers, e.g. "1,0,-2".
LatticeVector parse_int_list(const std::string& text);

}  // namespace satake
