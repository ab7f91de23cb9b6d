#pragma once

#include "liecon/tensor.hpp"

namespace liecon {

struct DerivationSpace {
    int dimension = 0;
    std::vector<Matrix<Rational>> basis;  // spans the space of derivations
};

/// Solves the Leibniz system D[x,y] = [Dx,y] + [x,Dy] in coordinates by
/// exact Gaussian elimination over the n^2 matrix entries.
/// Requires jacobi_defects(c) empty.
DerivationSpace derivation_dimension(const StructureTensor<Rational>& c);

/// Dimension of {x : [x, e_j] = 0 for all j}.
int center_dimension(const StructureTensor<Rational>& c);

/// act(C, M) == C, exactly. Throws on singular M.
bool is_automorphism(const StructureTensor<Rational>& c, const Matrix<Rational>& m);

/// Checks the derivation identity for one matrix.
bool is_derivation(const StructureTensor<Rational>& c, const Matrix<Rational>& d);

enum class Monotonicity { Consistent, Violated };

/// Necessary condition for C -> C0: dim der(C0) >= dim der(C).
Monotonicity derivation_monotonicity_check(const StructureTensor<Rational>& c,
                                           const StructureTensor<Rational>& c0);

}  // namespace liecon
