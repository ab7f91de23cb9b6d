#include "liecon/certificate.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace liecon {

const std::array<ResidualTriple, 12>& residual_triples() {
    static const std::array<ResidualTriple, 12> keys = {{{1, 3, 3},
                                                         {2, 4, 4},
                                                         {1, 4, 4},
                                                         {1, 2, 3},
                                                         {2, 3, 4},
                                                         {2, 4, 5},
                                                         {1, 2, 4},
                                                         {1, 3, 5},
                                                         {1, 4, 5},
                                                         {2, 3, 5},
                                                         {1, 3, 4},
                                                         {1, 2, 5}}};
    return keys;
}

const std::vector<std::string>& formula_deviations() {
    static const std::vector<std::string> notes = {
        "o513: the difference factor is (l11 - l21), not (l11 - l22); forced by the direct "
        "tensor-action oracle",
        "o413: the difference factor is (l11 - l21), not (l11 - l22); forced by the direct "
        "tensor-action oracle",
        "o512: the middle term reads l11*l32*l53/(l33*l55), with l53 in place of l43; forced by "
        "the direct tensor-action oracle",
    };
    return notes;
}

namespace {

template <class S>
void require_valid_lower(const Matrix<S>& l) {
    if (l.dim() < 5) throw std::invalid_argument("residuals: require n >= 5");
    if (!l.is_lower_triangular())
        throw std::invalid_argument("residuals: matrix is not lower triangular");
    for (int i = 1; i <= l.dim(); ++i)
        if (scalar_is_zero(l(i, i)))
            throw std::domain_error("residuals: zero diagonal entry at (" + std::to_string(i) +
                                    "," + std::to_string(i) + ")");
}

}  // namespace

template <class S>
ResidualSet<S> residuals_direct(const Matrix<S>& l) {
    require_valid_lower(l);
    const int n = l.dim();
    // build a(n) and a0(n) over S
    StructureTensor<S> a(n), a0(n);
    a.set(1, 3, 3, S(1));
    a.set(2, 4, 4, S(1));
    a.set(1, 2, 5, S(1));
    a0.set(1, 3, 3, S(1));
    a0.set(2, 4, 4, S(1));
    StructureTensor<S> acted = act(a, l);
    ResidualSet<S> out;
    const auto& keys = residual_triples();
    for (size_t idx = 0; idx < keys.size(); ++idx)
        out.o[idx] = acted.get(keys[idx][0], keys[idx][1], keys[idx][2]) -
                     a0.get(keys[idx][0], keys[idx][1], keys[idx][2]);
    return out;
}

template <class S>
ResidualSet<S> residuals_formula(const Matrix<S>& l) {
    require_valid_lower(l);
    const S l11 = l(1, 1), l21 = l(2, 1), l22 = l(2, 2);
    const S l32 = l(3, 2), l33 = l(3, 3);
    const S l41 = l(4, 1), l42 = l(4, 2), l43 = l(4, 3), l44 = l(4, 4);
    const S l53 = l(5, 3), l54 = l(5, 4), l55 = l(5, 5);

    const S o313 = l11 - S(1);
    const S o424 = l22 - S(1);
    const S o414 = l21;
    const S o312 = l11 * l32 / l33;
    const S o423 = l22 * l43 / l44;
    const S o524 = S(0) - l22 * l54 / l55;
    const S o412 = S(0) - l22 * l41 / l44 + l21 * l42 / l44 - l11 * l32 * l43 / (l33 * l44);
    const S o513 = S(0) - l11 * l53 / l55 + (l11 - l21) * l43 * l54 / (l44 * l55);
    const S o514 = S(0) - l21 * l54 / l55;
    const S o523 = S(0) - l22 * l43 * l54 / (l44 * l55);
    const S o413 = S(0) - (l11 - l21) * l43 / l44;
    const S o512 = l11 * l22 / l55 - l11 * l32 * l53 / (l33 * l55) - o412 * l54 / l55;

    ResidualSet<S> out;
    out.o = {o313, o424, o414, o312, o423, o524, o412, o513, o514, o523, o413, o512};
    return out;
}

template <class S>
std::pair<S, S> key_identity(const Matrix<S>& l) {
    ResidualSet<S> r = residuals_formula(l);
    const S l11 = l(1, 1), l21 = l(2, 1), l22 = l(2, 2), l55 = l(5, 5);
    const S o312 = r.at(1, 2, 3), o423 = r.at(2, 3, 4), o524 = r.at(2, 4, 5);
    const S o412 = r.at(1, 2, 4), o513 = r.at(1, 3, 5), o512 = r.at(1, 2, 5);
    S lhs = l11 * l22 / l55;
    S rhs = o512 - (o524 / l22) * o412 -
            (o513 + (l11 - l21) / (l22 * l22) * o423 * o524) * o312 / l11;
    return {lhs, rhs};
}

template ResidualSet<Rational> residuals_direct(const Matrix<Rational>&);
template ResidualSet<double> residuals_direct(const Matrix<double>&);
template ResidualSet<Rational> residuals_formula(const Matrix<Rational>&);
template ResidualSet<double> residuals_formula(const Matrix<double>&);
template std::pair<Rational, Rational> key_identity(const Matrix<Rational>&);
template std::pair<double, double> key_identity(const Matrix<double>&);

double q_block_check(const Matrix<double>& q) {
    const int n = q.dim();
    if (n < 5) throw std::invalid_argument("q_block_check: require n >= 5");
    auto block = [](int i) { return i <= 2 ? 0 : (i <= 4 ? 1 : 2); };
    double s = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (block(i) != block(j)) s += q(i, j) * q(i, j);
    return std::sqrt(s);
}

OrthogonalAnalysis analyze_orthogonal_limit(const Matrix<double>& q, double tol) {
    OrthogonalAnalysis res{};
    res.c314 = q(1, 1) * q(3, 3) * q(3, 4) + q(2, 1) * q(4, 3) * q(4, 4);
    res.c324 = q(1, 2) * q(3, 3) * q(3, 4) + q(2, 2) * q(4, 3) * q(4, 4);
    res.c323 = q(1, 2) * q(3, 3) * q(3, 3) + q(2, 2) * q(4, 3) * q(4, 3);
    if (std::fabs(res.c314) > tol || std::fabs(res.c324) > tol || std::fabs(res.c323) > tol) {
        res.kind = OrthogonalCase::Violation;
        return res;
    }
    auto small = [tol, &q](int i, int j) { return std::fabs(q(i, j)) <= tol; };
    if (small(3, 3) && small(4, 4) && small(1, 1) && small(2, 2))
        res.kind = OrthogonalCase::SwapCase;
    else if (small(3, 4) && small(4, 3) && small(2, 1) && small(1, 2))
        res.kind = OrthogonalCase::DiagonalCase;
    else
        res.kind = OrthogonalCase::Violation;
    return res;
}

template <class S>
Matrix<S> row_reducer(const Matrix<S>& l) {
    const int n = l.dim();
    if (n < 5) throw std::invalid_argument("row_reducer: require n >= 5");
    if (scalar_is_zero(l(1, 1)) || scalar_is_zero(l(2, 2)))
        throw std::domain_error("row_reducer: zero divisor (l11 or l22)");
    Matrix<S> m = Matrix<S>::identity(n);
    m(5, 1) = S(0) - (l(5, 1) - l(2, 1) / l(2, 2) * l(5, 2)) / l(1, 1);
    m(5, 2) = S(0) - l(5, 2) / l(2, 2);
    return m;
}

template Matrix<Rational> row_reducer(const Matrix<Rational>&);
template Matrix<double> row_reducer(const Matrix<double>&);

double row5_tail_norm(const Matrix<double>& u) {
    double s = 0;
    for (int j = 5; j <= u.dim(); ++j) s += u(5, j) * u(5, j);
    return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// certify

namespace {

double to_d(const Rational& r) { return r.to_double(); }

template <class S>
double max_abs(const ResidualSet<S>& r) {
    double m = 0;
    for (const auto& v : r.o) {
        double d;
        if constexpr (std::is_same_v<S, double>)
            d = v;
        else
            d = v.to_double();
        m = std::max(m, std::fabs(d));
    }
    return m;
}

// One sample through the pipeline, exact flavor. The matrix must be lower
// triangular up to column sign flips (U = L * D with D = diag(signs)).
CertificateSample sample_exact(const Matrix<Rational>& u, const Rational& eps) {
    const int n = u.dim();
    Matrix<Rational> lmat = u;
    Matrix<Rational> q = Matrix<Rational>::identity(n);
    for (int i = 1; i <= n; ++i) {
        if (lmat(i, i).sign() < 0) {
            for (int r = 1; r <= n; ++r) lmat(r, i) = -lmat(r, i);
            q(i, i) = Rational(-1);
        }
    }
    ResidualSet<Rational> direct = residuals_direct(lmat);
    ResidualSet<Rational> formula = residuals_formula(lmat);
    double cross = 0;
    for (size_t i = 0; i < direct.o.size(); ++i)
        if (direct.o[i] != formula.o[i])
            throw std::logic_error("certify: exact residual routes disagree");
    auto [lhs, rhs] = key_identity(lmat);

    CertificateSample s;
    s.eps = eps;
    s.exact = true;
    s.formula_vs_direct = cross;
    s.u_norm = u.frobenius_norm();
    s.l55_abs = std::fabs(to_d(lmat(5, 5)));
    s.ratio54 = std::fabs(to_d(lmat(5, 4) / lmat(5, 5)));
    s.ratio53 = std::fabs(to_d(lmat(5, 3) / lmat(5, 5)));
    s.max_o = max_abs(direct);
    s.key_identity_residual = std::fabs(to_d(lhs - rhs));
    s.q_block_residual = 0;  // diagonal sign matrix is block diagonal
    Matrix<Rational> reduced = row_reducer(lmat) * lmat * q;
    s.row5_tail = row5_tail_norm(to_double(reduced));
    return s;
}

CertificateSample sample_float(const Matrix<double>& u, const Rational& eps) {
    LQ f = lq_decompose(u);
    ResidualSet<double> direct = residuals_direct(f.l);
    ResidualSet<double> formula = residuals_formula(f.l);
    double cross = 0;
    for (size_t i = 0; i < direct.o.size(); ++i)
        cross = std::max(cross, std::fabs(direct.o[i] - formula.o[i]));
    auto [lhs, rhs] = key_identity(f.l);

    CertificateSample s;
    s.eps = eps;
    s.exact = false;
    s.formula_vs_direct = cross;
    s.u_norm = u.frobenius_norm();
    s.l55_abs = std::fabs(f.l(5, 5));
    s.ratio54 = std::fabs(f.l(5, 4) / f.l(5, 5));
    s.ratio53 = std::fabs(f.l(5, 3) / f.l(5, 5));
    s.max_o = max_abs(direct);
    s.key_identity_residual = std::fabs(lhs - rhs);
    s.q_block_residual = q_block_check(f.q);
    Matrix<double> reduced = row_reducer(f.l) * f.l * f.q;
    s.row5_tail = row5_tail_norm(reduced);
    return s;
}

bool strictly_increasing(const std::vector<CertificateSample>& v, double CertificateSample::*col) {
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i].*col > v[i - 1].*col)) return false;
    return true;
}

bool vanishes(const std::vector<CertificateSample>& v, double CertificateSample::*col,
              double tol) {
    if (v.empty()) return false;
    if (v.back().*col > tol) return false;
    bool strict = true, all_small = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && !(v[i].*col < v[i - 1].*col)) strict = false;
        if (v[i].*col > tol) all_small = false;
    }
    return strict || all_small;
}

CertificateVerdicts judge(const std::vector<CertificateSample>& samples,
                          const std::vector<Matrix<double>>& qs, double tol) {
    CertificateVerdicts v;
    v.norm_diverges = strictly_increasing(samples, &CertificateSample::u_norm);
    v.l55_diverges = strictly_increasing(samples, &CertificateSample::l55_abs);
    v.tail_diverges = strictly_increasing(samples, &CertificateSample::row5_tail);
    v.ratios_vanish = vanishes(samples, &CertificateSample::ratio54, tol) &&
                      vanishes(samples, &CertificateSample::ratio53, tol);
    v.residuals_vanish = vanishes(samples, &CertificateSample::max_o, tol);
    v.q_block_ok = true;
    v.key_identity_ok = true;
    for (const auto& s : samples) {
        if (s.q_block_residual > tol) v.q_block_ok = false;
        if (s.key_identity_residual > tol) v.key_identity_ok = false;
    }
    v.q_continuous = true;
    for (size_t i = 1; i < qs.size(); ++i) {
        Matrix<double> d = qs[i] - qs[i - 1];
        if (d.frobenius_norm() > tol) v.q_continuous = false;
    }
    return v;
}

std::vector<Rational> checked_schedule(std::vector<Rational> eps) {
    if (eps.empty()) throw std::invalid_argument("certify: empty eps schedule");
    for (size_t i = 0; i < eps.size(); ++i) {
        if (eps[i].sign() <= 0 || eps[i] > Rational(1))
            throw std::invalid_argument("certify: eps must lie in (0, 1]");
        if (i > 0 && !(eps[i] < eps[i - 1]))
            throw std::invalid_argument("certify: eps schedule must be strictly decreasing");
    }
    return eps;
}

}  // namespace

CertificateReport certify(const ParamMatrix& u, int n, const std::vector<Rational>& eps_schedule,
                          double tol) {
    if (n < 5) throw std::invalid_argument("certify: requires n >= 5");
    if (u.dim() != n) throw std::invalid_argument("certify: family dimension mismatch");
    auto schedule = checked_schedule(eps_schedule);

    CertificateReport rep;
    rep.n = n;
    rep.tol = tol;
    std::vector<Matrix<double>> qs;
    for (const auto& eps : schedule) {
        Matrix<Rational> m = eval_family(u, eps);
        if (m.is_lower_triangular()) {
            bool nonzero_diag = true;
            for (int i = 1; i <= n; ++i)
                if (m(i, i).is_zero()) nonzero_diag = false;
            if (!nonzero_diag) throw std::domain_error("certify: singular sample matrix");
            rep.samples.push_back(sample_exact(m, eps));
            qs.push_back(Matrix<double>::identity(n));  // up to diagonal signs
            continue;
        }
        rep.samples.push_back(sample_float(to_double(m), eps));
        qs.push_back(lq_decompose(to_double(m)).q);
    }
    rep.verdicts = judge(rep.samples, qs, tol);
    return rep;
}

CertificateReport certify_samples(const std::vector<Matrix<double>>& seq,
                                  const std::vector<Rational>& eps_schedule, int n, double tol) {
    if (n < 5) throw std::invalid_argument("certify: requires n >= 5");
    if (seq.size() != eps_schedule.size())
        throw std::invalid_argument("certify: sample and schedule lengths differ");
    auto schedule = checked_schedule(eps_schedule);
    CertificateReport rep;
    rep.n = n;
    rep.tol = tol;
    std::vector<Matrix<double>> qs;
    for (size_t i = 0; i < seq.size(); ++i) {
        rep.samples.push_back(sample_float(seq[i], schedule[i]));
        qs.push_back(lq_decompose(seq[i]).q);
    }
    rep.verdicts = judge(rep.samples, qs, tol);
    return rep;
}

std::vector<Rational> decade_schedule(int k) {
    std::vector<Rational> out;
    long p = 1;
    for (int i = 1; i <= k; ++i) {
        p *= 10;
        out.emplace_back(1, p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// serialization

std::string CertificateReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["tol"] = tol;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : samples) {
        nlohmann::json js;
        js["eps"] = s.eps.str();
        js["u_norm"] = s.u_norm;
        js["l55_abs"] = s.l55_abs;
        js["ratio54"] = s.ratio54;
        js["ratio53"] = s.ratio53;
        js["row5_tail"] = s.row5_tail;
        js["max_o"] = s.max_o;
        js["key_identity_residual"] = s.key_identity_residual;
        js["q_block_residual"] = s.q_block_residual;
        js["exact"] = s.exact;
        js["formula_vs_direct"] = s.formula_vs_direct;
        j["samples"].push_back(js);
    }
    j["verdicts"] = {{"norm_diverges", verdicts.norm_diverges},
                     {"l55_diverges", verdicts.l55_diverges},
                     {"ratios_vanish", verdicts.ratios_vanish},
                     {"residuals_vanish", verdicts.residuals_vanish},
                     {"tail_diverges", verdicts.tail_diverges},
                     {"q_block_ok", verdicts.q_block_ok},
                     {"key_identity_ok", verdicts.key_identity_ok},
                     {"q_continuous", verdicts.q_continuous},
                     {"all_pass", verdicts.all_pass()}};
    j["appendix"] = {{"formula_deviations", formula_deviations()}};
    return j.dump(2);
}

CertificateReport CertificateReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CertificateReport rep;
    rep.n = j.at("n").get<int>();
    rep.tol = j.at("tol").get<double>();
    for (const auto& js : j.at("samples")) {
        CertificateSample s;
        ParamScalar eps = ParamScalar::parse(js.at("eps").get<std::string>());
        s.eps = eps.constant_value();
        s.u_norm = js.at("u_norm").get<double>();
        s.l55_abs = js.at("l55_abs").get<double>();
        s.ratio54 = js.at("ratio54").get<double>();
        s.ratio53 = js.at("ratio53").get<double>();
        s.row5_tail = js.at("row5_tail").get<double>();
        s.max_o = js.at("max_o").get<double>();
        s.key_identity_residual = js.at("key_identity_residual").get<double>();
        s.q_block_residual = js.at("q_block_residual").get<double>();
        s.exact = js.at("exact").get<bool>();
        s.formula_vs_direct = js.at("formula_vs_direct").get<double>();
        rep.samples.push_back(s);
    }
    const auto& v = j.at("verdicts");
    rep.verdicts.norm_diverges = v.at("norm_diverges").get<bool>();
    rep.verdicts.l55_diverges = v.at("l55_diverges").get<bool>();
    rep.verdicts.ratios_vanish = v.at("ratios_vanish").get<bool>();
    rep.verdicts.residuals_vanish = v.at("residuals_vanish").get<bool>();
    rep.verdicts.tail_diverges = v.at("tail_diverges").get<bool>();
    rep.verdicts.q_block_ok = v.at("q_block_ok").get<bool>();
    rep.verdicts.key_identity_ok = v.at("key_identity_ok").get<bool>();
    rep.verdicts.q_continuous = v.at("q_continuous").get<bool>();
    return rep;
}

std::string CertificateReport::to_csv() const {
    std::ostringstream out;
    out << "eps,u_norm,l55_abs,ratio54,ratio53,row5_tail,max_o,key_identity_residual,"
           "q_block_residual\n";
    out.precision(17);
    for (const auto& s : samples) {
        out << s.eps.to_double() << "," << s.u_norm << "," << s.l55_abs << "," << s.ratio54 << ","
            << s.ratio53 << "," << s.row5_tail << "," << s.max_o << ","
            << s.key_identity_residual << "," << s.q_block_residual << "\n";
    }
    return out.str();
}

}  // namespace liecon
