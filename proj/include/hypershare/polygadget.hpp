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
#include <vector>

#include "hypershare/field.hpp"

namespace hypershare {

// Coordinates of polynomials in `vars` variables with every per-variable
// degree at most `degree`. Exponent tuples map to positions lexicographically,
// the first variable most significant.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t vars, std::size_t degree);

  std::size_t vars() const noexcept { return vars_; }
  std::size_t degree() const noexcept { return degree_; }
  // (degree + 1)^vars
  std::size_t size() const noexcept { return size_; }

  std::size_t Position(const std::vector<std::size_t>& exponents) const;
  std::vector<std::size_t> Exponents(std::size_t position) const;
  // Stride of variable j: moving its exponent by one moves the position by
  // this much.
  std::size_t Stride(std::size_t j) const noexcept { return strides_[j]; }

 private:
  std::size_t vars_;
  std::size_t degree_;
  std::size_t size_;
  std::vector<std::size_t> strides_;
};

// Rows spanning the polynomials divisible by (X_j - point): the products
// (X_j - point) * X^e over exponent tuples e with e_j < degree. There are
// degree * (degree + 1)^(vars - 1) of them and they are independent.
Matrix VanishingBasis(std::size_t j, Element point, const MonomialIndex& index,
                      const Field& f);

// Coefficients of prod_j prod_{a in roots[j]} (X_j - a). Repeated roots are
// kept. Throws kDegreeOverflow when some roots[j] is longer than the degree.
Vector ZVector(const std::vector<std::vector<Element>>& roots,
               const MonomialIndex& index, const Field& f);

// Value of the coefficient vector at a point.
Element EvaluatePolynomial(const Vector& coefficients, const std::vector<Element>& point,
                           const MonomialIndex& index, const Field& f);

}  // namespace hypershare
