#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "singeq/types.hpp"

namespace singeq {

/// Dense row-major complex matrix. Sizes here are small (N <= a few hundred),
/// so there is no blocking or expression templating.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);
    /// Builds a matrix from nested rows; all rows must have equal length.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }

    std::vector<Complex> column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Complex> values);

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;

    double frobenius_norm() const noexcept;
    double max_abs() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// y = M x.
std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> x);

/// ‖M - M^T‖_max == 0 and zero diagonal, compared bit-for-bit.
bool is_exactly_skew_symmetric(const ComplexMatrix& m) noexcept;

}  // namespace singeq
