#pragma once

#include <Eigen/Dense>

#include <singeq/matrix.hpp>

namespace testutil {

inline Eigen::MatrixXcd to_eigen(const singeq::ComplexMatrix& m)
{
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

}  // namespace testutil
