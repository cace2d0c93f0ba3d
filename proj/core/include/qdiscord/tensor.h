// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDISCORD_TENSOR_H
#define QDISCORD_TENSOR_H

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qdiscord {

using RealMatrix = Eigen::MatrixXd;

/// Dense real N-way array, row-major with the last index fastest.
///
/// Modes are numbered from 1 so that mode m lines up with party m of a
/// multipartite state.
class RealTensor {
   public:
    RealTensor() = default;
    /// Zero-filled tensor. Throws DimensionError on empty or zero dims.
    explicit RealTensor(std::vector<std::size_t> dims);
    /// Throws DimensionError when data.size() != product(dims).
    RealTensor(std::vector<std::size_t> dims, std::vector<double> data);

    const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    std::size_t order() const noexcept { return dims_.size(); }
    std::size_t size() const noexcept { return data_.size(); }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    /// Element access with zero-based indices, one per mode.
    double operator()(std::span<const std::size_t> index) const;
    double &operator()(std::span<const std::size_t> index);
    double at(std::initializer_list<std::size_t> index) const;
    double &at(std::initializer_list<std::size_t> index);

    std::size_t flat_index(std::span<const std::size_t> index) const;
    /// Inverse of flat_index.
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    bool operator==(const RealTensor &) const = default;

   private:
    std::vector<std::size_t> dims_;
    std::vector<double> data_;
};

/// (t x_mode a): contracts index `mode` (1-based) of t with the columns of a.
/// The result has dims of t with dims[mode] replaced by a.rows().
RealTensor n_mode_product(const RealTensor &t, const RealMatrix &a, std::size_t mode);

/// Sum of squared entries.
double frobenius_norm_sq(const RealTensor &t);

/// Entrywise max |a - b|; throws DimensionError when dims differ.
double max_abs_diff(const RealTensor &a, const RealTensor &b);

}  // namespace qdiscord

#endif
