#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecon/experiment.hpp"

using namespace liecon;

namespace {

ExperimentConfig quick_config() {
    ExperimentConfig c;
    c.restarts = 16;
    c.eval_budget = 20000;
    c.seed = 1;
    return c;
}

}  // namespace

TEST_CASE("objective worked examples") {
    auto a5 = to_double(catalog("a", 5));
    auto a05 = to_double(catalog("a0", 5));
    auto id = Matrix<double>::identity(5);
    CHECK(objective(a5, a5, id, 1e-8) == doctest::Approx(0.0));
    CHECK(objective(a5, a05, id, 1e-8) == doctest::Approx(1.0));

    for (double eps : {1e-1, 1e-2, 1e-3}) {
        Matrix<double> u = Matrix<double>::identity(5);
        u(5, 5) = 1.0 / eps;
        CHECK(objective(a5, a05, u, 1e-8) == doctest::Approx(eps * eps));
    }
}

TEST_CASE("objective penalizes near-singular matrices") {
    auto a5 = to_double(catalog("a", 5));
    Matrix<double> u(5);  // det 0
    CHECK(objective(a5, a5, u, 1e-8) > 1e6);
}

TEST_CASE("objective agrees with the exact action") {
    auto c = catalog("a", 5);
    auto c0 = catalog("a0", 5);
    Matrix<Rational> u = Matrix<Rational>::identity(5);
    u(2, 1) = Rational(1, 3);
    u(5, 5) = Rational(4);
    auto moved = act(c, u);
    double exact = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k) {
                Rational d = moved.get(i, j, k) - c0.get(i, j, k);
                exact += d.to_double() * d.to_double();
            }
    CHECK(std::fabs(objective(to_double(c), to_double(c0), to_double(u), 1e-8) - exact) <= 1e-10);
}

TEST_CASE("identity is found when source equals target") {
    auto r = minimize_under_radius(catalog("a", 5), catalog("a", 5), 3.0, quick_config());
    CHECK(r.residual < 1e-10);
}

TEST_CASE("control pair succeeds at radius 5") {
    auto r = minimize_under_radius(catalog("a0", 5), catalog("abelian", 5), 5.0, quick_config());
    CHECK(r.residual < 1e-6);
}

TEST_CASE("main pair keeps a positive floor at radius 10") {
    auto cfg = quick_config();
    auto r = minimize_under_radius(catalog("a", 5), catalog("a0", 5), 10.0, cfg);
    CHECK(r.residual > 0.0);
    CHECK(r.u_best.frobenius_norm() <= 10.0 + 1e-9);
}

TEST_CASE("determinism") {
    auto cfg = quick_config();
    cfg.radii = {5, 10};
    auto a = scan_radii(catalog("a", 5), catalog("a0", 5), cfg);
    auto b = scan_radii(catalog("a", 5), catalog("a0", 5), cfg);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("radius scan of the main pair") {
    auto cfg = quick_config();
    cfg.restarts = 24;
    cfg.radii = {10, 100};
    auto rep = scan_radii(catalog("a", 5), catalog("a0", 5), cfg);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].best_residual > 0);
    CHECK(rep.rows[1].best_residual > 0);
    CHECK(rep.rows[1].best_residual <= rep.rows[0].best_residual);
    CHECK(rep.slope_meaningful);
    CHECK(rep.slope < 0);
    for (const auto& row : rep.rows) CHECK(row.best_norm <= row.radius + 1e-9);
}

TEST_CASE("control scan sits at the floor") {
    auto cfg = quick_config();
    cfg.radii = {5, 10};
    auto rep = scan_radii(catalog("a0", 5), catalog("abelian", 5), cfg);
    CHECK(rep.rows[0].best_residual < 1e-6);
    CHECK(rep.rows[1].best_residual < 1e-6);
    CHECK(!rep.slope_meaningful);
}

TEST_CASE("same algebra scan is at the floor for radii over sqrt(n)") {
    auto cfg = quick_config();
    cfg.radii = {3, 6};
    auto rep = scan_radii(catalog("a", 5), catalog("a", 5), cfg);
    CHECK(rep.rows[0].best_residual < 1e-10);
    CHECK(rep.rows[1].best_residual < 1e-10);
}

TEST_CASE("config and report round-trips") {
    ExperimentConfig cfg;
    cfg.radii = {10, 100, 1000};
    cfg.restarts = 7;
    cfg.seed = 99;
    auto back = ExperimentConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());

    auto quick = quick_config();
    quick.radii = {5, 10};
    auto rep = scan_radii(catalog("a", 5), catalog("a", 5), quick);
    CHECK(ExperimentReport::from_json(rep.to_json()).to_json() == rep.to_json());
    CHECK(rep.to_csv().find("radius,best_residual") == 0);
}

TEST_CASE("scan requires at least two radii") {
    auto cfg = quick_config();
    cfg.radii = {5};
    CHECK_THROWS(scan_radii(catalog("a", 5), catalog("a0", 5), cfg));
    cfg.radii = {10, 5};
    CHECK_THROWS(scan_radii(catalog("a", 5), catalog("a0", 5), cfg));
}
