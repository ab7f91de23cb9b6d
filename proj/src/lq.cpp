#include "liecon/lq.hpp"

#include <cmath>

namespace liecon {

// Householder QR of A = U^T: A = Q1 R, so U = R^T Q1^T with R^T lower
// triangular. Diagonal signs are then flipped into Q to make diag(L) > 0.
LQ lq_decompose(const Matrix<double>& u) {
    const int n = u.dim();
    if (std::fabs(det(u)) <= default_det_threshold(u))
        throw std::domain_error("lq_decompose: singular or near-singular input");

    Matrix<double> a = u.transpose();
    Matrix<double> q1 = Matrix<double>::identity(n);

    std::vector<double> v(n + 1);
    for (int k = 1; k <= n; ++k) {
        double norm = 0;
        for (int i = k; i <= n; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0) continue;
        double alpha = a(k, k) >= 0 ? -norm : norm;
        double vnorm2 = 0;
        for (int i = k; i <= n; ++i) {
            v[i] = a(i, k) - (i == k ? alpha : 0.0);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0) continue;
        // apply H = I - 2 v v^T / (v^T v) from the left to a and q1
        for (int j = 1; j <= n; ++j) {
            double dot = 0;
            for (int i = k; i <= n; ++i) dot += v[i] * a(i, j);
            double f = 2.0 * dot / vnorm2;
            for (int i = k; i <= n; ++i) a(i, j) -= f * v[i];
        }
        for (int j = 1; j <= n; ++j) {
            double dot = 0;
            for (int i = k; i <= n; ++i) dot += v[i] * q1(i, j);
            double f = 2.0 * dot / vnorm2;
            for (int i = k; i <= n; ++i) q1(i, j) -= f * v[i];
        }
    }

    // a is now R (upper triangular), q1 holds Q1^T: U^T = Q1 R.
    LQ out;
    out.l = a.transpose();
    out.q = q1;  // Q = Q1^T already, since q1 accumulated the reflections

    // zero out the strict upper part against roundoff
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.l(i, j) = 0.0;

    for (int i = 1; i <= n; ++i) {
        if (out.l(i, i) < 0) {
            for (int r = 1; r <= n; ++r) out.l(r, i) = -out.l(r, i);
            for (int c = 1; c <= n; ++c) out.q(i, c) = -out.q(i, c);
        }
    }
    return out;
}

}  // namespace liecon
