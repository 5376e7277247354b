#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "cgmatch/error.hpp"

namespace cgmatch {

// Dense row-major tensor of doubles. Construction with explicit data
// validates shape consistency and rejects non-finite values; in-place
// mutation through data() is unchecked for speed.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<size_t> shape)
        : shape_(std::move(shape)), data_(product(shape_), 0.0) {}

    Tensor(std::vector<size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != product(shape_))
            throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                             " does not match shape product " + std::to_string(product(shape_)));
        for (double v : data_)
            if (!std::isfinite(v)) throw ValidationError("tensor contains non-finite value");
    }

    static Tensor zeros(std::vector<size_t> shape) { return Tensor(std::move(shape)); }

    size_t rank() const { return shape_.size(); }
    size_t size() const { return data_.size(); }
    size_t dim(size_t i) const { return shape_.at(i); }
    const std::vector<size_t>& shape() const { return shape_; }

    double& at(size_t i) { return data_[i]; }
    double at(size_t i) const { return data_[i]; }
    double& at(size_t i, size_t j) { return data_[i * shape_[1] + j]; }
    double at(size_t i, size_t j) const { return data_[i * shape_[1] + j]; }
    double& at(size_t i, size_t j, size_t k) { return data_[(i * shape_[1] + j) * shape_[2] + k]; }
    double at(size_t i, size_t j, size_t k) const { return data_[(i * shape_[1] + j) * shape_[2] + k]; }
    double& at(size_t i, size_t j, size_t k, size_t l) {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }
    double at(size_t i, size_t j, size_t k, size_t l) const {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double* row(size_t i) { return data_.data() + i * row_width(); }
    const double* row(size_t i) const { return data_.data() + i * row_width(); }
    size_t row_width() const { return rank() <= 1 ? size() : size() / shape_[0]; }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    static size_t product(const std::vector<size_t>& shape) {
        return std::accumulate(shape.begin(), shape.end(), size_t{1},
                               [](size_t a, size_t b) { return a * b; });
    }

    std::vector<size_t> shape_;
    std::vector<double> data_;
};

inline double dot(const double* a, const double* b, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

inline double frobenius_norm(const Tensor& t) {
    double s = 0.0;
    for (size_t i = 0; i < t.size(); ++i) s += t.at(i) * t.at(i);
    return std::sqrt(s);
}

} // namespace cgmatch
