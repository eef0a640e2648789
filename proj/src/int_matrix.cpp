#include "hloc/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "hloc/errors.hpp"

namespace hloc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) {
      throw DomainError("IntMatrix: ragged initializer");
    }
    for (long v : row) {
      data_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    std::swap((*this)(a, j), (*this)(b, j));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    std::swap((*this)(i, a), (*this)(i, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 mpz_class const& factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(target, j) += factor * (*this)(source, j);
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 mpz_class const& factor) {
  if (factor == 0) {
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, target) += factor * (*this)(i, source);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    (*this)(i, j) = -(*this)(i, j);
  }
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) {
        return false;
      }
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << (j ? ", " : "") << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matrix product: dimension mismatch");
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

mpz_class determinant(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("determinant of a non-square matrix");
  }
  std::size_t const n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) {
        ++swap;
      }
      if (swap == n) {
        return 0;
      }
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace hloc
