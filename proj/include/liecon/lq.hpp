#pragma once

#include "liecon/matrix.hpp"

namespace liecon {

struct LQ {
    Matrix<double> l;  // lower triangular, positive diagonal
    Matrix<double> q;  // orthogonal
};

/// U = L * Q via Householder QR of the transpose, normalized so that
/// diag(L) > 0. Throws std::domain_error on (near-)singular input.
LQ lq_decompose(const Matrix<double>& u);

}  // namespace liecon
