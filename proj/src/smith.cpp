#include "hloc/smith.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

namespace hloc {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least absolute value in the block below and right of (t, t).
std::optional<Position> smallest_entry(IntMatrix const& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) != 0 &&
          (!best || abs(a(i, j)) < abs(a(best->row, best->col)))) {
        best = Position{i, j};
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t const steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_entry(a, t);
      if (!pivot) {
        break;
      }
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      // Reduce the pivot row and column; leftovers are smaller than the
      // pivot and get picked up by the next round.
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) {
        continue;
      }

      // Divisibility: fold an offending row into the pivot row.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) {
        break;
      }
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm result{std::move(a), std::move(u), std::move(v)};
  assert(is_valid_smith_form(m, result));
  return result;
}

bool is_valid_smith_form(IntMatrix const& m, SmithForm const& s) {
  IntMatrix const& d = s.diagonal;
  if (d.rows() != m.rows() || d.cols() != m.cols() ||
      s.left.rows() != m.rows() || s.left.cols() != m.rows() ||
      s.right.rows() != m.cols() || s.right.cols() != m.cols()) {
    return false;
  }
  if (!d.is_diagonal() || s.left * m * s.right != d) {
    return false;
  }
  std::size_t const steps = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < steps; ++i) {
    if (d(i, i) < 0) {
      return false;
    }
    if (i + 1 < steps) {
      mpz_class const& here = d(i, i);
      mpz_class const& next = d(i + 1, i + 1);
      bool divides = here == 0 ? next == 0 : mpz_divisible_p(next.get_mpz_t(), here.get_mpz_t());
      if (!divides) {
        return false;
      }
    }
  }
  return abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
}

}  // namespace hloc
