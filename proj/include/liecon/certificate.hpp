#pragma once

#include <array>

#include "liecon/contraction.hpp"
#include "liecon/lq.hpp"

namespace liecon {

/// The twelve (i, j, k) triples of the residual system for the pair
/// (a(n), a0(n)); all indices stay within 1..5 for every n >= 5.
using ResidualTriple = std::array<int, 3>;
const std::array<ResidualTriple, 12>& residual_triples();

template <class S>
struct ResidualSet {
    // values in the order of residual_triples()
    std::array<S, 12> o;

    const S& at(int i, int j, int k) const {
        const auto& keys = residual_triples();
        for (size_t idx = 0; idx < keys.size(); ++idx)
            if (keys[idx] == ResidualTriple{i, j, k}) return o[idx];
        throw std::out_of_range("ResidualSet: not one of the twelve triples");
    }
};

/// Residuals act(a(n), L) - a0(n) at the twelve triples. The independent
/// oracle: nothing here shares code with the transcribed formulas.
/// Requires L lower triangular with nonzero diagonal, n >= 5.
template <class S>
ResidualSet<S> residuals_direct(const Matrix<S>& l);

/// The transcribed residual system, evaluated entry by entry. Must agree
/// with residuals_direct exactly over exact scalars; see
/// formula_deviations() for where the shipped transcription departs from
/// its source.
template <class S>
ResidualSet<S> residuals_formula(const Matrix<S>& l);

/// Human-readable notes on the index-level corrections applied to the
/// transcribed system, as adjudicated by the direct oracle.
const std::vector<std::string>& formula_deviations();

/// Both sides of the identity that forces |l55| -> infinity:
///   l11*l22/l55 = o512 - (o524/l22)*o412
///               - (o513 + (l11 - l21)/l22^2 * o423*o524) * o312/l11.
/// Over exact scalars the two sides are identical.
template <class S>
std::pair<S, S> key_identity(const Matrix<S>& l);

/// Frobenius norm of the entries outside the 2 + 2 + (n-4) block-diagonal
/// pattern.
double q_block_check(const Matrix<double>& q);

enum class OrthogonalCase { SwapCase, DiagonalCase, Violation };
struct OrthogonalAnalysis {
    OrthogonalCase kind;
    double c314, c324, c323;  // the three constraint values
};
/// Classifies the limit shape of the orthogonal part from the three
/// constraint equations on its 2x2 blocks.
OrthogonalAnalysis analyze_orthogonal_limit(const Matrix<double>& q, double tol);

/// M = E - (1/l11)(l51 - (l21/l22) l52) E(5,1) - (l52/l22) E(5,2);
/// an automorphism of a(n) that zeroes the (5,1), (5,2) entries of M*L.
template <class S>
Matrix<S> row_reducer(const Matrix<S>& l);

/// sqrt of the sum of squared (5, j) entries for j = 5..n.
double row5_tail_norm(const Matrix<double>& u);

struct CertificateSample {
    Rational eps;
    double u_norm = 0;
    double l55_abs = 0;
    double ratio54 = 0;  // |l54 / l55|
    double ratio53 = 0;  // |l53 / l55|
    double row5_tail = 0;
    double max_o = 0;
    double key_identity_residual = 0;
    double q_block_residual = 0;
    bool exact = false;               // exact arithmetic path taken
    double formula_vs_direct = 0;     // cross-check between the two residual routes
};

struct CertificateVerdicts {
    bool norm_diverges = false;
    bool l55_diverges = false;
    bool ratios_vanish = false;
    bool residuals_vanish = false;
    bool tail_diverges = false;
    bool q_block_ok = false;
    bool key_identity_ok = false;
    bool q_continuous = false;
    bool all_pass() const {
        return norm_diverges && l55_diverges && ratios_vanish && residuals_vanish &&
               tail_diverges && q_block_ok && key_identity_ok && q_continuous;
    }
};

struct CertificateReport {
    int n = 0;
    double tol = 0;
    std::vector<CertificateSample> samples;  // ordered by decreasing eps
    CertificateVerdicts verdicts;

    std::string to_json() const;
    static CertificateReport from_json(const std::string& text);
    std::string to_csv() const;
};

/// Runs the full pipeline for the pair (a(n), a0(n)) along eps_schedule:
/// LQ factorization, block check on Q, the two residual routes
/// cross-checked, the key identity, row reduction and the row-5 tail
/// norm, then the trend verdicts. Samples where the evaluated matrix is
/// exactly triangular are processed in exact arithmetic.
CertificateReport certify(const ParamMatrix& u, int n, const std::vector<Rational>& eps_schedule,
                          double tol);

/// Same pipeline on a raw matrix sequence (floats throughout).
CertificateReport certify_samples(const std::vector<Matrix<double>>& seq,
                                  const std::vector<Rational>& eps_schedule, int n, double tol);

/// The default schedule 10^-1, ..., 10^-k.
std::vector<Rational> decade_schedule(int k);

}  // namespace liecon
