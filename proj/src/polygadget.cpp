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

#include "hypershare/polygadget.hpp"

#include <string>

#include "hypershare/error.hpp"

namespace hypershare {

MonomialIndex::MonomialIndex(std::size_t vars, std::size_t degree)
    : vars_(vars), degree_(degree), size_(1), strides_(vars, 1) {
  for (std::size_t j = vars_; j-- > 0;) {
    strides_[j] = size_;
    if (size_ > (std::size_t{1} << 40) / (degree_ + 1)) {
      Fail(ErrorCode::kSizeOverflow, "monomial space too large");
    }
    size_ *= degree_ + 1;
  }
}

std::size_t MonomialIndex::Position(const std::vector<std::size_t>& exponents) const {
  std::size_t pos = 0;
  for (std::size_t j = 0; j < vars_; ++j) pos += exponents[j] * strides_[j];
  return pos;
}

std::vector<std::size_t> MonomialIndex::Exponents(std::size_t position) const {
  std::vector<std::size_t> e(vars_);
  for (std::size_t j = 0; j < vars_; ++j) {
    e[j] = position / strides_[j];
    position %= strides_[j];
  }
  return e;
}

namespace {

// coefficients *= (X_j - root); the caller guarantees headroom in X_j.
void MultiplyLinear(Vector& coefficients, std::size_t j, Element root,
                    const MonomialIndex& index, const Field& f) {
  const std::size_t stride = index.Stride(j);
  const std::size_t d = index.degree();
  Vector out(coefficients.size(), 0);
  for (std::size_t pos = 0; pos < coefficients.size(); ++pos) {
    const Element c = coefficients[pos];
    if (c == 0) continue;
    const std::size_t exponent = (pos / stride) % (d + 1);
    if (exponent == d) Fail(ErrorCode::kDegreeOverflow, "per-variable degree exceeded");
    out[pos + stride] = f.Add(out[pos + stride], c);
    out[pos] = f.Sub(out[pos], f.Mul(root, c));
  }
  coefficients = std::move(out);
}

}  // namespace

Matrix VanishingBasis(std::size_t j, Element point, const MonomialIndex& index,
                      const Field& f) {
  Matrix basis(0, index.size());
  const std::size_t stride = index.Stride(j);
  const std::size_t d = index.degree();
  const Element root = f.ReduceU(point);
  for (std::size_t pos = 0; pos < index.size(); ++pos) {
    if ((pos / stride) % (d + 1) == d) continue;
    Vector row(index.size(), 0);
    row[pos] = f.Neg(root);
    row[pos + stride] = 1;
    basis.AppendRow(row);
  }
  return basis;
}

Vector ZVector(const std::vector<std::vector<Element>>& roots,
               const MonomialIndex& index, const Field& f) {
  if (roots.size() != index.vars()) {
    Fail(ErrorCode::kRange, "need one root list per variable");
  }
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (roots[j].size() > index.degree()) {
      Fail(ErrorCode::kDegreeOverflow,
           "variable " + std::to_string(j + 1) + " has " +
               std::to_string(roots[j].size()) + " roots, above degree " +
               std::to_string(index.degree()));
    }
  }
  Vector z(index.size(), 0);
  z[0] = 1;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    for (Element a : roots[j]) MultiplyLinear(z, j, f.ReduceU(a), index, f);
  }
  return z;
}

Element EvaluatePolynomial(const Vector& coefficients, const std::vector<Element>& point,
                           const MonomialIndex& index, const Field& f) {
  Element acc = 0;
  for (std::size_t pos = 0; pos < coefficients.size(); ++pos) {
    if (coefficients[pos] == 0) continue;
    Element term = coefficients[pos];
    const auto e = index.Exponents(pos);
    for (std::size_t j = 0; j < e.size(); ++j) term = f.Mul(term, f.Pow(point[j], e[j]));
    acc = f.Add(acc, term);
  }
  return acc;
}

}  // namespace hypershare
