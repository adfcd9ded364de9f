// Copyright 2026 The systole Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "systole/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "systole/error.hpp"

namespace systole {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_),
          data_.begin() + static_cast<long>((i + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Internal, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::Internal, "determinant of non-square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = value;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Position of the smallest nonzero |entry| in the block [t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d,
                                                                   std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {{i, j}};
    }
  }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix d = input;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    left.swap_rows(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    right.swap_cols(a, b);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pivot = smallest_entry(d, t);
    if (!pivot) break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived: move it to the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i) {
          if (d(i, t) != 0 && (!best || abs(d(i, t)) < abs(d(best->first, best->second)))) {
            best = {{i, t}};
          }
        }
        for (std::size_t j = t; j < n; ++j) {
          if (d(t, j) != 0 && (!best || abs(d(t, j)) < abs(d(best->first, best->second)))) {
            best = {{t, j}};
          }
        }
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      left.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(left), std::move(d), std::move(right), {}};
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (out.diagonal(t, t) != 0) out.divisors.push_back(out.diagonal(t, t));
  }
  return out;
}

bool verify_smith(const IntMatrix& input, const SmithDecomposition& snf) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  if (snf.left.rows() != m || snf.left.cols() != m || snf.right.rows() != n ||
      snf.right.cols() != n || snf.diagonal.rows() != m || snf.diagonal.cols() != n) {
    return false;
  }
  if (snf.left * input * snf.right != snf.diagonal) return false;
  if (abs(determinant(snf.left)) != 1 || abs(determinant(snf.right)) != 1) return false;
  std::size_t r = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && snf.diagonal(i, j) != 0) return false;
    }
  }
  while (r < std::min(m, n) && snf.diagonal(r, r) != 0) ++r;
  for (std::size_t t = r; t < std::min(m, n); ++t) {
    if (snf.diagonal(t, t) != 0) return false;
  }
  if (snf.divisors.size() != r) return false;
  for (std::size_t t = 0; t < r; ++t) {
    if (snf.divisors[t] != snf.diagonal(t, t) || snf.divisors[t] <= 0) return false;
    if (t > 0 && !mpz_divisible_p(snf.divisors[t].get_mpz_t(), snf.divisors[t - 1].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

}  // namespace systole
