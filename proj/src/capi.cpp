#include "liecon/liecon.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "liecon/certificate.hpp"
#include "liecon/contraction.hpp"
#include "liecon/experiment.hpp"
#include "liecon/giw.hpp"
#include "liecon/invariants.hpp"
#include "liecon/tensor.hpp"

using namespace liecon;

struct liecon_algebra {
    StructureTensor<Rational> tensor;
};
struct liecon_family {
    ParamMatrix matrix;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
liecon_rc guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LIECON_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return LIECON_ERROR;
    }
}

nlohmann::json verdict_json(const RealizationVerdict& v) {
    nlohmann::json j;
    switch (v.status) {
        case RealizationVerdict::Status::Realizes: j["status"] = "Realizes"; break;
        case RealizationVerdict::Status::LimitMissing: j["status"] = "LimitMissing"; break;
        case RealizationVerdict::Status::LimitMismatch: j["status"] = "LimitMismatch"; break;
        case RealizationVerdict::Status::SingularFamily: j["status"] = "SingularFamily"; break;
    }
    if (v.status == RealizationVerdict::Status::LimitMissing ||
        v.status == RealizationVerdict::Status::LimitMismatch)
        j["where"] = {v.where.i, v.where.j, v.where.k};
    if (v.status == RealizationVerdict::Status::LimitMismatch) {
        j["got"] = v.got.str();
        j["want"] = v.want.str();
    }
    j["bounded"] = v.bounded;
    nlohmann::json ub = nlohmann::json::array();
    for (auto [i, jj] : v.unbounded) ub.push_back({i, jj});
    j["unbounded_entries"] = ub;
    return j;
}

// Negation of an integer inequality row r >= c: r <= c - 1.
std::string forced_message(const ExponentRow& row) {
    if (!row.is_equality) {
        std::string s = row.str();
        auto pos = s.find(" >= ");
        return "Forced: " + s.substr(0, pos) + " <= " + std::to_string(row.rhs - 1);
    }
    return "Forced: no solution satisfies " + row.str();
}

}  // namespace

extern "C" {

const char* liecon_last_error(void) { return g_last_error.c_str(); }

void liecon_string_free(char* s) { delete[] s; }

liecon_rc liecon_algebra_load(const char* spec, liecon_algebra** out) {
    return guarded([&]() -> liecon_rc {
        if (!spec || !out) throw std::invalid_argument("null argument");
        auto* a = new liecon_algebra{load_algebra(spec)};
        *out = a;
        return LIECON_OK;
    });
}

void liecon_algebra_free(liecon_algebra* a) { delete a; }

int liecon_algebra_dim(const liecon_algebra* a) { return a ? a->tensor.dim() : 0; }

liecon_rc liecon_family_load(const char* spec, int dim_for_builtin, liecon_family** out) {
    return guarded([&]() -> liecon_rc {
        if (!spec || !out) throw std::invalid_argument("null argument");
        auto* f = new liecon_family{load_family(spec, dim_for_builtin)};
        *out = f;
        return LIECON_OK;
    });
}

void liecon_family_free(liecon_family* f) { delete f; }

liecon_rc liecon_check(const liecon_algebra* a, char** json_out) {
    return guarded([&]() -> liecon_rc {
        if (!a) throw std::invalid_argument("null algebra");
        auto defects = jacobi_defects(a->tensor);
        nlohmann::json j;
        j["name"] = a->tensor.name();
        j["dim"] = a->tensor.dim();
        j["is_lie_algebra"] = defects.empty();
        j["defects"] = nlohmann::json::array();
        for (const auto& d : defects) {
            nlohmann::json jd;
            jd["triple"] = {d.i, d.j, d.m};
            nlohmann::json vec = nlohmann::json::array();
            for (const auto& v : d.defect) vec.push_back(v.str());
            jd["defect"] = vec;
            j["defects"].push_back(jd);
        }
        if (json_out) *json_out = dup_string(j.dump(2));
        return defects.empty() ? LIECON_OK : LIECON_VERDICT_FAIL;
    });
}

liecon_rc liecon_verify(const liecon_algebra* from, const liecon_algebra* to,
                        const liecon_family* u, char** json_out) {
    return guarded([&]() -> liecon_rc {
        if (!from || !to || !u) throw std::invalid_argument("null argument");
        RealizationVerdict v = verify_realization(from->tensor, u->matrix, to->tensor);
        if (v.status == RealizationVerdict::Status::SingularFamily)
            throw std::invalid_argument("matrix family is identically singular");
        if (json_out) *json_out = dup_string(verdict_json(v).dump(2));
        return v.realizes() ? LIECON_OK : LIECON_VERDICT_FAIL;
    });
}

liecon_rc liecon_giw(const liecon_algebra* from, const liecon_algebra* to, const char* require,
                     char** json_out) {
    return guarded([&]() -> liecon_rc {
        if (!from || !to) throw std::invalid_argument("null argument");
        ExponentProblem p = build_problem(from->tensor, to->tensor);
        nlohmann::json j;
        j["dim"] = p.n;
        j["rows"] = nlohmann::json::array();
        for (const auto& r : p.rows) j["rows"].push_back(r.str());
        liecon_rc rc = LIECON_OK;
        if (p.infeasible_reason) {
            j["feasible"] = false;
            j["infeasible_reason"] = *p.infeasible_reason;
            rc = LIECON_VERDICT_FAIL;
        } else {
            LpResult lp = lp_feasible(p);
            j["feasible"] = lp.feasible;
            if (lp.feasible)
                j["alpha"] = integerize(lp.point, p);
            else
                rc = LIECON_VERDICT_FAIL;
        }
        if (require && *require && !p.infeasible_reason) {
            j["require"] = nlohmann::json::array();
            std::string text(require);
            size_t pos = 0;
            while (pos <= text.size()) {
                size_t comma = text.find(',', pos);
                std::string part =
                    text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!part.empty()) {
                    ExponentRow row = ExponentRow::parse(part, p.n);
                    NecessityResult res = necessity_query(p, row);
                    nlohmann::json jr;
                    jr["row"] = row.str();
                    jr["forced"] = res.forced;
                    if (res.forced) {
                        jr["message"] = forced_message(row);
                        rc = LIECON_VERDICT_FAIL;
                    } else {
                        jr["alpha"] = res.alpha;
                    }
                    j["require"].push_back(jr);
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        if (json_out) *json_out = dup_string(j.dump(2));
        return rc;
    });
}

liecon_rc liecon_certify(const liecon_family* u, int n, const char* const* eps, int n_eps,
                         double tol, char** json_out, char** csv_out) {
    return guarded([&]() -> liecon_rc {
        if (!u) throw std::invalid_argument("null family");
        std::vector<Rational> schedule;
        if (eps && n_eps > 0) {
            for (int i = 0; i < n_eps; ++i) schedule.push_back(Rational::parse(eps[i]));
        } else {
            schedule = decade_schedule(6);
        }
        CertificateReport rep = certify(u->matrix, n, schedule, tol);
        if (json_out) *json_out = dup_string(rep.to_json());
        if (csv_out) *csv_out = dup_string(rep.to_csv());
        return rep.verdicts.all_pass() ? LIECON_OK : LIECON_VERDICT_FAIL;
    });
}

liecon_rc liecon_invariants(const liecon_algebra* a, char** json_out) {
    return guarded([&]() -> liecon_rc {
        if (!a) throw std::invalid_argument("null algebra");
        DerivationSpace der = derivation_dimension(a->tensor);
        nlohmann::json j;
        j["name"] = a->tensor.name();
        j["dim"] = a->tensor.dim();
        j["derivation_dimension"] = der.dimension;
        j["center_dimension"] = center_dimension(a->tensor);
        if (json_out) *json_out = dup_string(j.dump(2));
        return LIECON_OK;
    });
}

liecon_rc liecon_experiment(const liecon_algebra* from, const liecon_algebra* to,
                            const char* config_json, char** json_out, char** csv_out) {
    return guarded([&]() -> liecon_rc {
        if (!from || !to) throw std::invalid_argument("null argument");
        ExperimentConfig config;
        if (config_json && *config_json) {
            config = ExperimentConfig::from_json(config_json);
        } else {
            config.radii = {10, 100, 1000};
        }
        ExperimentReport rep = scan_radii(from->tensor, to->tensor, config);
        if (json_out) *json_out = dup_string(rep.to_json());
        if (csv_out) *csv_out = dup_string(rep.to_csv());
        return LIECON_OK;
    });
}

}  // extern "C"
