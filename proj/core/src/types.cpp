#include "singeq/types.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "singeq/matrix.hpp"

namespace singeq {

PointSet::PointSet(std::vector<Complex> points, double min_separation)
    : points_(std::move(points)), min_separation_(min_separation)
{
    if (!(min_separation_ >= 0.0)) {
        throw std::invalid_argument("PointSet: min_separation must be non-negative");
    }
    if (points_.size() < 2) {
        throw DegenerateConfiguration("PointSet: at least two points are required");
    }
    if (!all_finite(points_)) {
        throw DegenerateConfiguration("PointSet: non-finite coordinate");
    }
    const ClosestPair pair = closest_pair(points_);
    if (pair.distance < min_separation_) {
        std::ostringstream os;
        os << "points " << pair.first << " and " << pair.second << " are " << pair.distance
           << " apart (minimum separation " << min_separation_ << ")";
        throw DegenerateConfiguration(os.str(), pair.first, pair.second);
    }
}

PointSet PointSet::transformed(Complex scale, Complex shift) const
{
    std::vector<Complex> moved;
    moved.reserve(points_.size());
    for (const Complex& z : points_) {
        moved.push_back(scale * z + shift);
    }
    return PointSet(std::move(moved), min_separation_);
}

ClosestPair closest_pair(std::span<const Complex> points)
{
    ClosestPair best{std::numeric_limits<double>::infinity(), 0, 0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = std::abs(points[i] - points[j]);
            if (d < best.distance) {
                best = {d, i, j};
            }
        }
    }
    return best;
}

bool all_finite(std::span<const Complex> values) noexcept
{
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

double norm2(std::span<const Complex> values) noexcept
{
    // Scaled sum of squares, same idea as LAPACK's dznrm2.
    double scale = 0.0;
    double ssq = 1.0;
    for (const Complex& v : values) {
        for (double part : {v.real(), v.imag()}) {
            if (part != 0.0) {
                const double a = std::abs(part);
                if (scale < a) {
                    ssq = 1.0 + ssq * (scale / a) * (scale / a);
                    scale = a;
                } else {
                    ssq += (a / scale) * (a / scale);
                }
            }
        }
    }
    return scale * std::sqrt(ssq);
}

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols) {
        throw DimensionMismatch("ComplexMatrix: data size does not match shape");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw DimensionMismatch("ComplexMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const
{
    std::vector<Complex> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const Complex> values)
{
    assert(values.size() == rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = values[i];
    }
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = std::conj((*this)(i, j));
        }
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const noexcept
{
    return norm2(data_);
}

double ComplexMatrix::max_abs() const noexcept
{
    double m = 0.0;
    for (const Complex& v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("ComplexMatrix: shape mismatch in +=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("ComplexMatrix: shape mismatch in -=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s)
{
    for (Complex& v : data_) {
        v *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs)
{
    if (lhs.cols_ != rhs.rows_) {
        throw DimensionMismatch("ComplexMatrix: shape mismatch in product");
    }
    ComplexMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> x)
{
    if (m.cols() != x.size()) {
        throw DimensionMismatch("multiply: vector length does not match matrix columns");
    }
    std::vector<Complex> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += m(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

bool is_exactly_skew_symmetric(const ComplexMatrix& m) noexcept
{
    if (!m.square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != Complex{}) {
            return false;
        }
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != -m(j, i)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace singeq
