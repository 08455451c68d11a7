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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hypershare {

using Element = std::uint64_t;
using Vector = std::vector<Element>;

// Largest modulus accepted; products stay inside unsigned __int128.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

bool IsPrime(std::uint64_t n);
std::uint64_t SmallestPrimeAtLeast(std::uint64_t b);

// The prime field GF(q). Elements are canonical residues in [0, q).
class Field {
 public:
  // Throws kNotPrime for composite q and kRange for q outside [2, 2^61).
  static Field Make(std::uint64_t q);

  std::uint64_t modulus() const noexcept { return q_; }

  Element Reduce(std::int64_t x) const noexcept;
  Element ReduceU(std::uint64_t x) const noexcept { return x % q_; }

  Element Add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Element Sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Element Neg(Element a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Element Mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % q_);
  }
  Element Pow(Element a, std::uint64_t e) const noexcept;
  // Throws kDivisionByZero on zero.
  Element Inv(Element a) const;

  bool operator==(const Field& other) const noexcept { return q_ == other.q_; }

 private:
  explicit Field(std::uint64_t q) : q_(q) {}
  std::uint64_t q_;
};

// Dense row-major matrix of field residues. A matrix with zero rows is
// allowed; it stands for the empty row set of a participant subset.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void AppendRow(std::span<const Element> values);
  Matrix SelectRows(std::span<const std::size_t> indices) const;
  Matrix Transpose() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

std::size_t Rank(const Field& f, const Matrix& m);

// Some v with v * m == t, or nullopt when t is outside the row space. The
// returned v is the reduced-echelon solution with every free variable zero.
std::optional<Vector> SolveLeft(const Field& f, const Matrix& m,
                                std::span<const Element> t);

Vector MatVec(const Field& f, const Matrix& m, std::span<const Element> r);
Vector VecMat(const Field& f, std::span<const Element> v, const Matrix& m);
Matrix MatMul(const Field& f, const Matrix& a, const Matrix& b);
Element Dot(const Field& f, std::span<const Element> a,
            std::span<const Element> b);

// Basis (as rows) of {x : m * x = 0}.
Matrix Nullspace(const Field& f, const Matrix& m);

std::optional<Matrix> Inverse(const Field& f, const Matrix& m);

}  // namespace hypershare
