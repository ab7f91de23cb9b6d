#include "liecon/invariants.hpp"

namespace liecon {

namespace {

// RREF over the rationals; returns the nullspace basis of the (rows x cols)
// system  A x = 0.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        Rational inv = a[r][c].inverse();
        for (auto& x : a[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = -a[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

DerivationSpace derivation_dimension(const StructureTensor<Rational>& c) {
    if (!jacobi_defects(c).empty())
        throw std::invalid_argument("derivation_dimension: tensor violates the Jacobi identity");
    const int n = c.dim();
    auto var = [n](int row, int col) { return (row - 1) * n + (col - 1); };  // D(row, col)

    std::vector<std::vector<Rational>> sys;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                std::vector<Rational> eq(n * n, Rational(0));
                // c^{k'}_{ij} d^k_{k'} - d^{i'}_i c^k_{i'j} - d^{j'}_j c^k_{ij'} = 0
                for (int m = 1; m <= n; ++m) {
                    eq[var(k, m)] += c.get(i, j, m);
                    eq[var(m, i)] -= c.get(m, j, k);
                    eq[var(m, j)] -= c.get(i, m, k);
                }
                sys.push_back(std::move(eq));
            }

    DerivationSpace out;
    for (auto& v : nullspace(std::move(sys), n * n)) {
        Matrix<Rational> d(n);
        for (int row = 1; row <= n; ++row)
            for (int col = 1; col <= n; ++col) d(row, col) = v[var(row, col)];
        out.basis.push_back(std::move(d));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

int center_dimension(const StructureTensor<Rational>& c) {
    const int n = c.dim();
    std::vector<std::vector<Rational>> sys;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            std::vector<Rational> eq(n, Rational(0));
            for (int i = 1; i <= n; ++i) eq[i - 1] = c.get(i, j, k);
            sys.push_back(std::move(eq));
        }
    return static_cast<int>(nullspace(std::move(sys), n).size());
}

bool is_automorphism(const StructureTensor<Rational>& c, const Matrix<Rational>& m) {
    return act(c, m) == c;
}

bool is_derivation(const StructureTensor<Rational>& c, const Matrix<Rational>& d) {
    const int n = c.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Rational lhs(0), rhs(0);
                for (int m = 1; m <= n; ++m) {
                    lhs += c.get(i, j, m) * d(k, m);
                    rhs += d(m, i) * c.get(m, j, k) + d(m, j) * c.get(i, m, k);
                }
                if (lhs != rhs) return false;
            }
    return true;
}

Monotonicity derivation_monotonicity_check(const StructureTensor<Rational>& c,
                                           const StructureTensor<Rational>& c0) {
    if (c.dim() != c0.dim())
        throw std::invalid_argument("derivation_monotonicity_check: dimension mismatch");
    return derivation_dimension(c0).dimension >= derivation_dimension(c).dimension
               ? Monotonicity::Consistent
               : Monotonicity::Violated;
}

}  // namespace liecon
