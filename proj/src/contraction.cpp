#include "liecon/contraction.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liecon {

RealizationVerdict verify_realization(const StructureTensor<Rational>& c, const ParamMatrix& u,
                                      const StructureTensor<Rational>& c0) {
    if (c.dim() != u.dim() || c0.dim() != u.dim())
        throw std::invalid_argument("verify_realization: dimension mismatch");

    RealizationVerdict v;
    v.bounded = true;
    for (int i = 1; i <= u.dim(); ++i)
        for (int j = 1; j <= u.dim(); ++j) {
            auto val = u(i, j).valuation();
            if (val && *val < 0) {
                v.bounded = false;
                v.unbounded.emplace_back(i, j);
            }
        }

    if (det(u).is_zero()) {
        v.status = RealizationVerdict::Status::SingularFamily;
        return v;
    }

    StructureTensor<ParamScalar> acted = act(lift(c), u);
    for (const auto& [key, val] : acted.table()) {
        auto lim = val.limit_at_zero_plus();
        if (!lim.finite) {
            v.status = RealizationVerdict::Status::LimitMissing;
            v.where = {key.i, key.j, key.k};
            return v;
        }
        Rational want = c0.get(key.i, key.j, key.k);
        if (lim.value != want) {
            v.status = RealizationVerdict::Status::LimitMismatch;
            v.where = {key.i, key.j, key.k};
            v.got = lim.value;
            v.want = want;
            return v;
        }
    }
    // entries present in C0 but absent (identically zero) in the acted family
    for (const auto& [key, val] : c0.table()) {
        if (acted.get(key.i, key.j, key.k).is_zero()) {
            v.status = RealizationVerdict::Status::LimitMismatch;
            v.where = {key.i, key.j, key.k};
            v.got = Rational(0);
            v.want = val;
            return v;
        }
    }
    v.status = RealizationVerdict::Status::Realizes;
    return v;
}

Matrix<Rational> eval_family(const ParamMatrix& u, const Rational& eps) {
    Matrix<Rational> m(u.dim());
    for (int i = 1; i <= u.dim(); ++i)
        for (int j = 1; j <= u.dim(); ++j) m(i, j) = u(i, j).eval(eps);
    return m;
}

std::vector<Matrix<double>> sample_sequence(const ParamMatrix& u,
                                            const std::vector<Rational>& eps) {
    std::vector<Matrix<double>> out;
    out.reserve(eps.size());
    for (const auto& e : eps) {
        if (e.sign() <= 0 || e > Rational(1))
            throw std::domain_error("sample_sequence: eps must lie in (0, 1]");
        out.push_back(to_double(eval_family(u, e)));
    }
    return out;
}

RealizationVerdict lemma1_transfer(const StructureTensor<Rational>& c, const ParamMatrix& uhat,
                                   const ParamMatrix& ucheck,
                                   const StructureTensor<Rational>& c0) {
    const int n = ucheck.dim();
    Matrix<Rational> v0(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto lim = ucheck(i, j).limit_at_zero_plus();
            if (!lim.finite)
                throw std::invalid_argument("lemma1_transfer: Ucheck has no finite limit");
            v0(i, j) = lim.value;
        }
    if (det(v0).is_zero())
        throw std::invalid_argument("lemma1_transfer: limit of Ucheck is singular");
    return verify_realization(c, uhat * lift(v0), c0);
}

ParamMatrix paper_family(int n) {
    if (n < 5) throw std::invalid_argument("paper_family: requires n >= 5");
    ParamMatrix u(n);
    for (int i = 1; i <= n; ++i) u(i, i) = ParamScalar(1);
    u(5, 5) = ParamScalar::t_power(-1);
    return u;
}

ParamMatrix load_family_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    int n = j.at("dim").get<int>();
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("family file: row count != dim");
    ParamMatrix u(n);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("family file: column count != dim");
        for (int jj = 1; jj <= n; ++jj) u(i, jj) = ParamScalar::parse(row[jj - 1].get<std::string>());
    }
    return u;
}

ParamMatrix load_family(const std::string& path_or_builtin, int dim_for_builtin) {
    if (path_or_builtin == "builtin:paper") {
        if (dim_for_builtin < 5)
            throw std::invalid_argument("builtin:paper requires --dim n with n >= 5");
        return paper_family(dim_for_builtin);
    }
    std::ifstream in(path_or_builtin);
    if (!in) throw std::invalid_argument("cannot open family file '" + path_or_builtin + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_family_json(buf.str());
}

std::string family_to_json(const ParamMatrix& u) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= u.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= u.dim(); ++j) row.push_back(u(i, j).str());
        rows.push_back(row);
    }
    nlohmann::json j;
    j["dim"] = u.dim();
    j["entries"] = rows;
    return j.dump(2);
}

}  // namespace liecon
