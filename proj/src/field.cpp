// Copyright 2026 The Hypershare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypershare/field.hpp"

#include <string>

#include "hypershare/error.hpp"

namespace hypershare {

namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = MulMod(result, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return result;
}

// Reduced row echelon form in place. Returns the pivot column of each
// nonzero row, in order. Only the first `pivot_cols` columns are eligible as
// pivots (used to keep an augmented right-hand side out of the pivot set).
std::vector<std::size_t> Rref(const Field& f, Matrix& a, std::size_t pivot_cols,
                              bool full = true) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    }
    const Element inv = f.Inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.Mul(a.at(r, j), inv);
    for (std::size_t i = full ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r) continue;
      const Element factor = a.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) {
        a.at(i, j) = f.Sub(a.at(i, j), f.Mul(factor, a.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t SmallestPrimeAtLeast(std::uint64_t b) {
  std::uint64_t p = b < 2 ? 2 : b;
  while (!IsPrime(p)) ++p;
  return p;
}

Field Field::Make(std::uint64_t q) {
  if (q < 2 || q >= kMaxModulus) {
    Fail(ErrorCode::kRange, "field modulus " + std::to_string(q) +
                                " outside [2, 2^61)");
  }
  if (!IsPrime(q)) {
    Fail(ErrorCode::kNotPrime, "field modulus " + std::to_string(q) +
                                   " is not prime");
  }
  return Field(q);
}

Element Field::Reduce(std::int64_t x) const noexcept {
  const auto q = static_cast<std::int64_t>(q_);
  std::int64_t r = x % q;
  return static_cast<Element>(r < 0 ? r + q : r);
}

Element Field::Pow(Element a, std::uint64_t e) const noexcept {
  return PowMod(a, e, q_);
}

Element Field::Inv(Element a) const {
  if (a % q_ == 0) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
  return PowMod(a, q_ - 2, q_);
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::FromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.AppendRow(r);
  return m;
}

void Matrix::AppendRow(std::span<const Element> values) {
  if (values.size() != cols_) {
    Fail(ErrorCode::kRange, "row length " + std::to_string(values.size()) +
                                " does not match " + std::to_string(cols_) +
                                " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::SelectRows(std::span<const std::size_t> indices) const {
  Matrix out(0, cols_);
  out.data_.reserve(indices.size() * cols_);
  for (std::size_t i : indices) out.AppendRow(row(i));
  return out;
}

Matrix Matrix::Transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::size_t Rank(const Field& f, const Matrix& m) {
  Matrix a = m;
  return Rref(f, a, a.cols(), /*full=*/false).size();
}

std::optional<Vector> SolveLeft(const Field& f, const Matrix& m,
                                std::span<const Element> t) {
  if (t.size() != m.cols()) {
    Fail(ErrorCode::kRange, "target length does not match matrix columns");
  }
  // v * m = t  <=>  m^T v^T = t^T; solve on the augmented transpose.
  Matrix a(m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a.at(c, r) = m.at(r, c);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) a.at(c, m.rows()) = t[c] % f.modulus();
  const auto pivots = Rref(f, a, m.rows());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
    if (a.at(i, m.rows()) != 0) return std::nullopt;
  }
  Vector v(m.rows(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = a.at(i, m.rows());
  return v;
}

Vector MatVec(const Field& f, const Matrix& m, std::span<const Element> r) {
  if (r.size() != m.cols()) {
    Fail(ErrorCode::kRange, "vector length does not match matrix columns");
  }
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = Dot(f, m.row(i), r);
  return out;
}

Vector VecMat(const Field& f, std::span<const Element> v, const Matrix& m) {
  if (v.size() != m.rows()) {
    Fail(ErrorCode::kRange, "vector length does not match matrix rows");
  }
  Vector out(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c] = f.Add(out[c], f.Mul(v[i], m.at(i, c)));
    }
  }
  return out;
}

Matrix MatMul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    Fail(ErrorCode::kRange, "matrix product dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.Add(out.at(i, j), f.Mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

Element Dot(const Field& f, std::span<const Element> a,
            std::span<const Element> b) {
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc = f.Add(acc, f.Mul(a[i], b[i]));
  }
  return acc;
}

Matrix Nullspace(const Field& f, const Matrix& m) {
  Matrix a = m;
  const auto pivots = Rref(f, a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.Neg(a.at(i, free));
    basis.AppendRow(x);
  }
  return basis;
}

std::optional<Matrix> Inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, n + i) = 1;
  }
  if (Rref(f, a, n).size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a.at(i, n + j);
  }
  return inv;
}

}  // namespace hypershare
