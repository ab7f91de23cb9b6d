// Command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecon/liecon.h"

namespace {

int fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int fail_api(liecon_rc rc) {
    if (rc == LIECON_ERROR) return fail_input(liecon_last_error());
    return static_cast<int>(rc);
}

struct AlgebraHandle {
    liecon_algebra* h = nullptr;
    ~AlgebraHandle() { liecon_algebra_free(h); }
};
struct FamilyHandle {
    liecon_family* h = nullptr;
    ~FamilyHandle() { liecon_family_free(h); }
};

int emit(const char* json, const char* csv, const std::string& format, const std::string& out) {
    const char* text = format == "csv" ? csv : json;
    if (!text) return fail_input("no " + format + " output available for this command");
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out);
        if (!f) return fail_input("cannot write " + out);
        f << text << "\n";
    }
    return -1;  // no error
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-parametric contractions of finite-dimensional Lie algebras"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    double tol = 1e-3;
    long long seed = -1;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write the report to PATH instead of stdout");
    app.add_option("--tol", tol, "Numeric tolerance for trend verdicts");
    app.add_option("--seed", seed, "Random seed override (experiment)");

    std::string algebra_spec, from_spec, to_spec, family_spec, config_path, require_rows;
    int dim = 5;
    std::vector<std::string> eps;

    auto* check = app.add_subcommand("check", "Jacobi membership of a structure tensor");
    check->add_option("algebra", algebra_spec, "Algebra file or builtin name")->required();

    auto* verify = app.add_subcommand("verify", "Realization verdict for a matrix family");
    verify->add_option("from", from_spec)->required();
    verify->add_option("to", to_spec)->required();
    verify->add_option("family", family_spec, "Family file or builtin:paper")->required();
    verify->add_option("--dim", dim, "Dimension for builtin families");

    auto* giw = app.add_subcommand("giw", "Diagonal-exponent feasibility and necessity");
    giw->add_option("from", from_spec)->required();
    giw->add_option("to", to_spec)->required();
    giw->add_option("--require", require_rows, "Comma-separated extra rows, e.g. \"a5>=0\"");

    auto* certify = app.add_subcommand("certify", "Unboundedness certificate pipeline");
    certify->add_option("family", family_spec, "Family file or builtin:paper")->required();
    certify->add_option("--dim", dim, "Algebra dimension (n >= 5)");
    certify->add_option("--eps", eps, "Epsilon schedule, rational strings like 1/10");

    auto* invariants = app.add_subcommand("invariants", "Derivation and center dimensions");
    invariants->add_option("algebra", algebra_spec)->required();

    auto* experiment = app.add_subcommand("experiment", "Bounded-radius residual scan");
    experiment->add_option("from", from_spec)->required();
    experiment->add_option("to", to_spec)->required();
    experiment->add_option("config", config_path, "Experiment config JSON file");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    char* json = nullptr;
    char* csv = nullptr;
    liecon_rc rc = LIECON_OK;

    try {
        if (*check || *invariants) {
            AlgebraHandle a;
            if (liecon_algebra_load(algebra_spec.c_str(), &a.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            rc = *check ? liecon_check(a.h, &json) : liecon_invariants(a.h, &json);
        } else if (*verify) {
            AlgebraHandle from, to;
            FamilyHandle u;
            if (liecon_algebra_load(from_spec.c_str(), &from.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            if (liecon_algebra_load(to_spec.c_str(), &to.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            if (liecon_family_load(family_spec.c_str(), liecon_algebra_dim(from.h), &u.h) !=
                LIECON_OK)
                return fail_input(liecon_last_error());
            rc = liecon_verify(from.h, to.h, u.h, &json);
        } else if (*giw) {
            AlgebraHandle from, to;
            if (liecon_algebra_load(from_spec.c_str(), &from.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            if (liecon_algebra_load(to_spec.c_str(), &to.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            rc = liecon_giw(from.h, to.h, require_rows.empty() ? nullptr : require_rows.c_str(),
                            &json);
            if (rc == LIECON_VERDICT_FAIL && json) {
                auto j = nlohmann::json::parse(json);
                if (j.contains("require"))
                    for (const auto& r : j["require"])
                        if (r.value("forced", false)) std::cerr << r["message"].get<std::string>() << "\n";
            }
        } else if (*certify) {
            FamilyHandle u;
            if (liecon_family_load(family_spec.c_str(), dim, &u.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            std::vector<const char*> eps_ptrs;
            for (const auto& e : eps) eps_ptrs.push_back(e.c_str());
            rc = liecon_certify(u.h, dim, eps_ptrs.empty() ? nullptr : eps_ptrs.data(),
                                static_cast<int>(eps_ptrs.size()), tol, &json, &csv);
        } else if (*experiment) {
            AlgebraHandle from, to;
            if (liecon_algebra_load(from_spec.c_str(), &from.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            if (liecon_algebra_load(to_spec.c_str(), &to.h) != LIECON_OK)
                return fail_input(liecon_last_error());
            std::string config_text;
            if (!config_path.empty()) config_text = read_file(config_path);
            if (seed >= 0) {
                auto j = config_text.empty() ? nlohmann::json::object()
                                             : nlohmann::json::parse(config_text);
                if (!j.contains("radii")) j["radii"] = {10.0, 100.0, 1000.0};
                j["seed"] = seed;
                config_text = j.dump();
            }
            rc = liecon_experiment(from.h, to.h, config_text.empty() ? nullptr : config_text.c_str(),
                                   &json, &csv);
        }
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }

    if (rc == LIECON_ERROR) return fail_api(rc);
    int emit_rc = emit(json, csv, format, out_path);
    liecon_string_free(json);
    liecon_string_free(csv);
    if (emit_rc >= 0) return emit_rc;
    return static_cast<int>(rc);
}
