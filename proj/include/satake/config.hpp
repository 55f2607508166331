#pragma once

#include "satake/root_datum.hpp"

#include <string>

namespace satake {

struct WorkbenchConfig {
  IntegerBilinearForm b;
  EvenSymmetricForm q;
  RootDatum rd;
  Int default_trunc = 8;
};

/// Parse and validate a JSON config file:
/// {
///   "lattice":    { "rank": r, "b": [[...]] },
///   "root_datum": { "kind": "torus" | "simple",
///                   "cartan": [[...]] or "cartan_type": "A<n>",
///                   "central_rank": c },        // optional section
///   "defaults":   { "trunc": N }                // optional section
/// }
/// Q is derived as b + b^T and must be negative definite.
WorkbenchConfig load_config(const std::string& path);

WorkbenchConfig config_from_json_text(const std::string& text);

/// Cartan matrix of type A_n.
Matrix cartan_type_a(int n);

}  // namespace satake
