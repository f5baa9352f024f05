#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heatcolor {

// Dense row-major matrix of doubles. Just enough linear-algebra surface for
// the solver kernels; rows are exposed as spans.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[idx(i, j)]; }
    double operator()(int i, int j) const { return data_[idx(i, j)]; }

    std::span<double> row(int i) { return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int i) const {
        return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)};
    }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace heatcolor
