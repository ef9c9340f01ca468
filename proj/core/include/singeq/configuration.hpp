#pragma once

#include <cstddef>

#include "singeq/matrix.hpp"
#include "singeq/types.hpp"

namespace singeq {

/// The N x N skew-symmetric matrix with entries 1/(z_a - z_b) off the diagonal.
///
/// Each off-diagonal value is computed once and stored negated in the mirror
/// slot, so entries(a, b) + entries(b, a) == 0 holds exactly.
class ConfigurationMatrix {
public:
    /// Wraps an arbitrary matrix that must already be exactly skew-symmetric.
    /// Used for matrices that do not come from a point set (tests, Pfaffian inputs).
    static ConfigurationMatrix from_skew(ComplexMatrix m);

    std::size_t size() const noexcept { return m_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    operator const ComplexMatrix&() const noexcept { return m_; }

private:
    explicit ConfigurationMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    friend ConfigurationMatrix build_matrix(const PointSet& points);

    ComplexMatrix m_;
};

/// A = B + C with B Hermitian and C skew-Hermitian.
struct HermitianSplit {
    ComplexMatrix hermitian;
    ComplexMatrix skew_hermitian;
};

ConfigurationMatrix build_matrix(const PointSet& points);

HermitianSplit hermitian_split(const ComplexMatrix& a);

/// ‖AA† − A†A‖_F, cross-checked against ‖2(CB − BC)‖_F from the Hermitian split.
/// Throws std::logic_error if the two routes disagree by more than 1e-10 relative.
double normality_defect(const ComplexMatrix& a);

/// ‖2(CB − BC)‖_F, the commutator route to the normality defect.
double commutator_defect(const HermitianSplit& split);

}  // namespace singeq
