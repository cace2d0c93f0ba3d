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

#include "qdiscord/tensor.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qdiscord/error.h"

namespace qdiscord {

namespace {

std::size_t product(const std::vector<std::size_t> &dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_dims(const std::vector<std::size_t> &dims) {
    if (dims.empty()) {
        throw DimensionError("tensor dims must be non-empty");
    }
    for (std::size_t d : dims) {
        if (d == 0) {
            throw DimensionError("tensor dims must be positive");
        }
    }
}

}  // namespace

RealTensor::RealTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    check_dims(dims_);
    data_.assign(product(dims_), 0.0);
}

RealTensor::RealTensor(std::vector<std::size_t> dims, std::vector<double> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
    check_dims(dims_);
    if (data_.size() != product(dims_)) {
        throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                             " does not match product of dims " + std::to_string(product(dims_)));
    }
}

std::size_t RealTensor::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != dims_.size()) {
        throw DimensionError("index has wrong number of modes");
    }
    std::size_t flat = 0;
    for (std::size_t m = 0; m < dims_.size(); ++m) {
        if (index[m] >= dims_[m]) {
            throw DimensionError("index out of range in mode " + std::to_string(m + 1));
        }
        flat = flat * dims_[m] + index[m];
    }
    return flat;
}

std::vector<std::size_t> RealTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(dims_.size());
    for (std::size_t m = dims_.size(); m-- > 0;) {
        index[m] = flat % dims_[m];
        flat /= dims_[m];
    }
    return index;
}

double RealTensor::operator()(std::span<const std::size_t> index) const {
    return data_[flat_index(index)];
}

double &RealTensor::operator()(std::span<const std::size_t> index) {
    return data_[flat_index(index)];
}

double RealTensor::at(std::initializer_list<std::size_t> index) const {
    return (*this)(std::span<const std::size_t>(index.begin(), index.size()));
}

double &RealTensor::at(std::initializer_list<std::size_t> index) {
    return (*this)(std::span<const std::size_t>(index.begin(), index.size()));
}

RealTensor n_mode_product(const RealTensor &t, const RealMatrix &a, std::size_t mode) {
    if (mode < 1 || mode > t.order()) {
        throw DimensionError("mode " + std::to_string(mode) + " out of range 1.." +
                             std::to_string(t.order()));
    }
    const auto &dims = t.dims();
    const std::size_t m = mode - 1;
    const std::size_t inner = dims[m];
    if (static_cast<std::size_t>(a.cols()) != inner) {
        throw DimensionError("matrix has " + std::to_string(a.cols()) + " columns but mode " +
                             std::to_string(mode) + " has size " + std::to_string(inner));
    }
    if (a.rows() == 0) {
        throw DimensionError("matrix must have at least one row");
    }
    std::size_t left = 1;
    for (std::size_t i = 0; i < m; ++i) left *= dims[i];
    std::size_t right = 1;
    for (std::size_t i = m + 1; i < dims.size(); ++i) right *= dims[i];

    const auto rows = static_cast<std::size_t>(a.rows());
    std::vector<std::size_t> out_dims = dims;
    out_dims[m] = rows;
    RealTensor out(out_dims);

    auto src = t.data();
    auto dst = out.data();
    for (std::size_t l = 0; l < left; ++l) {
        const double *src_block = src.data() + l * inner * right;
        double *dst_block = dst.data() + l * rows * right;
        for (std::size_t i = 0; i < rows; ++i) {
            double *dst_row = dst_block + i * right;
            for (std::size_t j = 0; j < inner; ++j) {
                const double aij = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                if (aij == 0.0) continue;
                const double *src_row = src_block + j * right;
                for (std::size_t r = 0; r < right; ++r) {
                    dst_row[r] += aij * src_row[r];
                }
            }
        }
    }
    return out;
}

double frobenius_norm_sq(const RealTensor &t) {
    double sum = 0.0;
    for (double x : t.data()) sum += x * x;
    return sum;
}

double max_abs_diff(const RealTensor &a, const RealTensor &b) {
    if (a.dims() != b.dims()) {
        throw DimensionError("tensors have different dims");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

}  // namespace qdiscord
