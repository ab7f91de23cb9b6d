#pragma once

#include "liecon/tensor.hpp"

namespace liecon {

using ParamMatrix = Matrix<ParamScalar>;

struct RealizationVerdict {
    enum class Status { Realizes, LimitMissing, LimitMismatch, SingularFamily };
    Status status = Status::SingularFamily;
    StructureTensor<Rational>::Key where{0, 0, 0};  // triple for the two failure statuses
    Rational got, want;                             // for LimitMismatch

    bool bounded = false;                        // every entry valuation >= 0
    std::vector<std::pair<int, int>> unbounded;  // entries with valuation < 0

    bool realizes() const { return status == Status::Realizes; }
};

/// Does the family U(t) realize the contraction C -> C0 as t -> 0+?
/// Exact: acts over ParamScalars, takes componentwise limits, compares
/// with C0, and classifies boundedness by entry valuations.
RealizationVerdict verify_realization(const StructureTensor<Rational>& c, const ParamMatrix& u,
                                      const StructureTensor<Rational>& c0);

/// Float evaluation of the family at each sample parameter.
/// Throws std::domain_error at a pole or for eps outside (0, 1].
std::vector<Matrix<double>> sample_sequence(const ParamMatrix& u, const std::vector<Rational>& eps);

/// Exact evaluation at one parameter value.
Matrix<Rational> eval_family(const ParamMatrix& u, const Rational& eps);

/// Verifies that Uhat * V0 realizes C -> C0, where V0 is the (finite,
/// invertible) limit of Ucheck at t -> 0+. Throws std::invalid_argument
/// when Ucheck has no such limit.
RealizationVerdict lemma1_transfer(const StructureTensor<Rational>& c, const ParamMatrix& uhat,
                                   const ParamMatrix& ucheck, const StructureTensor<Rational>& c0);

/// The diagonal family diag(1,1,1,1,t^-1,1,...,1) of dimension n >= 5.
ParamMatrix paper_family(int n);

// Matrix-family files: {"dim": n, "entries": [[str, ...], ...]} row-major.
ParamMatrix load_family_json(const std::string& json_text);
ParamMatrix load_family(const std::string& path_or_builtin, int dim_for_builtin = 0);
std::string family_to_json(const ParamMatrix& u);

}  // namespace liecon
