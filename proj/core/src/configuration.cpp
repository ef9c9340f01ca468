#include "singeq/configuration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace singeq {

ConfigurationMatrix ConfigurationMatrix::from_skew(ComplexMatrix m)
{
    if (!is_exactly_skew_symmetric(m)) {
        throw std::invalid_argument("ConfigurationMatrix::from_skew: matrix is not skew-symmetric");
    }
    if (!all_finite(m.data())) {
        throw std::invalid_argument("ConfigurationMatrix::from_skew: non-finite entry");
    }
    return ConfigurationMatrix(std::move(m));
}

ConfigurationMatrix build_matrix(const PointSet& points)
{
    // A PointSet built with min_separation = 0 may still hold coincident points.
    const std::size_t n = points.size();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex diff = points[i] - points[j];
            if (std::abs(diff) < points.min_separation() || diff == Complex{}) {
                std::ostringstream os;
                os << "build_matrix: points " << i << " and " << j << " coincide";
                throw DegenerateConfiguration(os.str(), i, j);
            }
            const Complex value = 1.0 / diff;
            a(i, j) = value;
            a(j, i) = -value;
        }
    }
    return ConfigurationMatrix(std::move(a));
}

HermitianSplit hermitian_split(const ComplexMatrix& a)
{
    if (!a.square()) {
        throw DimensionMismatch("hermitian_split: matrix must be square");
    }
    const std::size_t n = a.rows();
    HermitianSplit split{ComplexMatrix(n, n), ComplexMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex aij = a(i, j);
            const Complex aji_conj = std::conj(a(j, i));
            split.hermitian(i, j) = 0.5 * (aij + aji_conj);
            split.skew_hermitian(i, j) = 0.5 * (aij - aji_conj);
        }
    }
    return split;
}

double commutator_defect(const HermitianSplit& split)
{
    const ComplexMatrix& b = split.hermitian;
    const ComplexMatrix& c = split.skew_hermitian;
    ComplexMatrix comm = c * b - b * c;
    comm *= 2.0;
    return comm.frobenius_norm();
}

double normality_defect(const ComplexMatrix& a)
{
    const ComplexMatrix adj = a.adjoint();
    const double direct = (a * adj - adj * a).frobenius_norm();
    const double via_split = commutator_defect(hermitian_split(a));

    // Both are differences of O(‖A‖²) quantities, so compare on that scale.
    const double scale = std::max({1e-300, a.frobenius_norm() * a.frobenius_norm(), direct});
    if (std::abs(direct - via_split) > 1e-10 * scale) {
        std::ostringstream os;
        os << "normality_defect: routes disagree (" << direct << " vs " << via_split << ")";
        throw std::logic_error(os.str());
    }
    return direct;
}

}  // namespace singeq
