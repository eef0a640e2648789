#pragma once

#include "hloc/int_matrix.hpp"

namespace hloc {

// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next (zeros last).
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // U, rows x rows
  IntMatrix right;  // V, cols x cols
};

SmithForm smith_normal_form(IntMatrix const& m);

// Checks every defining property of a Smith form of m.
bool is_valid_smith_form(IntMatrix const& m, SmithForm const& s);

}  // namespace hloc
