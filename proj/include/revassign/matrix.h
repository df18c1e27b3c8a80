// Copyright 2026 The revassign Authors
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

#ifndef REVASSIGN_MATRIX_H_
#define REVASSIGN_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revassign {

// Dense row-major matrix. Rows are papers, columns are reviewers everywhere
// in this library.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
      throw std::invalid_argument("matrix data has " +
                                  std::to_string(data_.size()) +
                                  " entries, expected " +
                                  std::to_string(rows * cols));
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

  bool same_shape(std::size_t rows, std::size_t cols) const {
    return rows_ == rows && cols_ == cols;
  }
  template <typename U>
  bool same_shape(const Matrix<U>& other) const {
    return rows_ == other.rows() && cols_ == other.cols();
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;

struct Edge {
  std::size_t paper;
  std::size_t reviewer;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Binary n x m matrix with entries in {0, 1}. Base of Matching and EdgeMask.
class BinaryMatrix : public Matrix<std::uint8_t> {
 public:
  using Matrix<std::uint8_t>::Matrix;
  explicit BinaryMatrix(Matrix<std::uint8_t> m)
      : Matrix<std::uint8_t>(std::move(m)) {}

  bool is_binary() const {
    for (auto v : data()) {
      if (v > 1) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (auto v : data()) total += v;
    return total;
  }
  std::size_t row_sum(std::size_t i) const {
    std::size_t total = 0;
    for (auto v : row(i)) total += v;
    return total;
  }
  std::size_t col_sum(std::size_t j) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows(); ++i) total += (*this)(i, j);
    return total;
  }
  // Edges in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if ((*this)(i, j)) out.push_back({i, j});
      }
    }
    return out;
  }
  // Entrywise A <= B.
  bool dominated_by(const BinaryMatrix& other) const {
    if (!same_shape(other)) return false;
    auto a = data();
    auto b = other.data();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] > b[k]) return false;
    }
    return true;
  }
};

// Binary paper -> reviewer assignment. Also used for proposals and biddings.
class Matching : public BinaryMatrix {
 public:
  using BinaryMatrix::BinaryMatrix;

  static Matching from_edges(std::size_t n, std::size_t m,
                             std::span<const Edge> edges) {
    Matching out(n, m);
    for (const auto& e : edges) {
      if (e.paper >= n || e.reviewer >= m) {
        throw std::out_of_range("edge outside an " + std::to_string(n) + "x" +
                                std::to_string(m) + " matching");
      }
      out(e.paper, e.reviewer) = 1;
    }
    return out;
  }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// 1 = edge permitted.
class EdgeMask : public BinaryMatrix {
 public:
  using BinaryMatrix::BinaryMatrix;

  static EdgeMask full(std::size_t n, std::size_t m) {
    return EdgeMask(n, m, std::uint8_t{1});
  }
  // E - Z + Y: every edge except the proposed-but-declined ones.
  static EdgeMask consistency(const Matching& proposal,
                              const Matching& bidding) {
    if (!proposal.same_shape(bidding)) {
      throw std::invalid_argument("proposal and bidding shapes differ");
    }
    EdgeMask mask(proposal.rows(), proposal.cols());
    auto z = proposal.data();
    auto y = bidding.data();
    auto out = mask.data();
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (y[k] > z[k]) {
        throw std::invalid_argument("bidding is not contained in proposal");
      }
      out[k] = static_cast<std::uint8_t>(1 - z[k] + y[k]);
    }
    return mask;
  }
  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;
};

// <W, X>.
inline double inner(const RealMatrix& w, const BinaryMatrix& x) {
  if (!w.same_shape(x)) {
    throw std::invalid_argument("inner product of differently shaped matrices");
  }
  double total = 0.0;
  auto wd = w.data();
  auto xd = x.data();
  for (std::size_t k = 0; k < wd.size(); ++k) {
    if (xd[k]) total += wd[k];
  }
  return total;
}

// <A, B> for binary matrices (edge overlap count).
inline std::size_t overlap(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("overlap of differently shaped matrices");
  }
  std::size_t total = 0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < ad.size(); ++k) total += ad[k] & bd[k];
  return total;
}

}  // namespace revassign

#endif  // REVASSIGN_MATRIX_H_
