#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecon/contraction.hpp"
#include "liecon/giw.hpp"

using namespace liecon;

namespace {

ParamMatrix diag_powers(const std::vector<long>& alpha) {
    ParamMatrix u(static_cast<int>(alpha.size()));
    for (size_t i = 0; i < alpha.size(); ++i)
        u(static_cast<int>(i) + 1, static_cast<int>(i) + 1) =
            ParamScalar::t_power(static_cast<int>(alpha[i]));
    return u;
}

bool exhaustive_feasible(const ExponentProblem& p, std::vector<long>* witness) {
    std::vector<long> a(p.n, -3);
    for (;;) {
        bool ok = true;
        for (const auto& row : p.rows)
            if (!row_satisfied(row, a)) {
                ok = false;
                break;
            }
        if (ok) {
            if (witness) *witness = a;
            return true;
        }
        int i = 0;
        while (i < p.n && a[i] == 3) a[i++] = -3;
        if (i == p.n) return false;
        ++a[i];
    }
}

}  // namespace

TEST_CASE("row text round-trip") {
    ExponentRow r;
    r.coeff = {1, 1, 0, 0, -1};
    r.rhs = 1;
    CHECK(r.str() == "a1 + a2 - a5 >= 1");
    CHECK(ExponentRow::parse("a1 + a2 - a5 >= 1", 5).coeff == r.coeff);
    CHECK(ExponentRow::parse("2a1 - a3 = 0", 5).is_equality);
    CHECK_THROWS(ExponentRow::parse("a9 >= 0", 5));
    CHECK_THROWS(ExponentRow::parse("garbage", 5));
}

TEST_CASE("problem construction for the main pair") {
    auto p = build_problem(catalog("a", 5), catalog("a0", 5));
    REQUIRE(!p.infeasible_reason);
    int eq = 0, ge = 0;
    for (const auto& r : p.rows) (r.is_equality ? eq : ge)++;
    CHECK(eq == 2);
    CHECK(ge == 1);
    // the inequality is a1 + a2 - a5 >= 1
    for (const auto& r : p.rows)
        if (!r.is_equality) CHECK(r.str() == "a1 + a2 - a5 >= 1");
}

TEST_CASE("identical tensors give equalities with zero witness") {
    auto p = build_problem(catalog("a", 5), catalog("a", 5));
    for (const auto& r : p.rows) CHECK(r.is_equality);
    auto f = giw_feasible(catalog("a", 5), catalog("a", 5));
    REQUIRE(f.feasible);
    CHECK(f.alpha == std::vector<long>(5, 0));
}

TEST_CASE("early infeasibility") {
    auto p = build_problem(catalog("abelian", 3), catalog("heisenberg", 3));
    CHECK(p.infeasible_reason.has_value());
    CHECK(!giw_feasible(catalog("abelian", 3), catalog("heisenberg", 3)).feasible);
}

TEST_CASE("simplex feasibility basics") {
    ExponentProblem p;
    p.n = 1;
    ExponentRow r1{{1}, 1, false}, r2{{-1}, 1, false};
    p.rows = {r1, r2};
    CHECK(!lp_feasible(p).feasible);

    ExponentProblem q;
    q.n = 2;
    q.rows = {ExponentRow{{1, 1}, 0, true}, ExponentRow{{1, 0}, 1, false}};
    auto res = lp_feasible(q);
    REQUIRE(res.feasible);
    CHECK(res.point[0] + res.point[1] == Rational(0));
    CHECK(res.point[0] >= Rational(1));
}

TEST_CASE("main pair witness forces a5 <= -1") {
    for (int n : {5, 6, 7}) {
        auto f = giw_feasible(catalog("a", n), catalog("a0", n));
        REQUIRE(f.feasible);
        CHECK(f.alpha[0] == 0);
        CHECK(f.alpha[1] == 0);
        CHECK(f.alpha[4] <= -1);

        auto p = build_problem(catalog("a", n), catalog("a0", n));
        std::vector<long> c(n, 0);
        c[4] = 1;
        CHECK(necessity_query(p, ExponentRow{c, 0, false}).forced);  // a5 >= 0 impossible
    }
}

TEST_CASE("necessity queries that stay feasible") {
    auto p = build_problem(catalog("a", 5), catalog("a", 5));
    auto r = necessity_query(p, ExponentRow{{1, 0, 0, 0, 0}, 0, false});
    CHECK(!r.forced);
    CHECK(row_satisfied(ExponentRow{{1, 0, 0, 0, 0}, 0, false}, r.alpha));

    auto q = build_problem(catalog("a0", 5), catalog("abelian", 5));
    auto s = necessity_query(q, ExponentRow{{1, 0, 0, 0, 0}, 0, false});
    CHECK(!s.forced);
    // all-ones satisfies the two vanishing rows
    std::vector<long> ones(5, 1);
    for (const auto& row : q.rows) CHECK(row_satisfied(row, ones));
}

TEST_CASE("integerize") {
    ExponentProblem p;
    p.n = 5;
    p.rows = {ExponentRow{{1, 0, 0, 0, 0}, 0, true}, ExponentRow{{0, 1, 0, 0, 0}, 0, true},
              ExponentRow{{1, 1, 0, 0, -1}, 1, false}};
    std::vector<Rational> x = {Rational(0), Rational(0), Rational(1, 2), Rational(0),
                               Rational(-1, 2)};
    CHECK(integerize(x, p) == std::vector<long>({0, 0, 1, 0, -1}));

    std::vector<Rational> y = {Rational(0), Rational(0), Rational(2), Rational(0), Rational(-1)};
    CHECK(integerize(y, p) == std::vector<long>({0, 0, 2, 0, -1}));

    ExponentProblem z;
    z.n = 2;
    z.rows = {ExponentRow{{1, -1}, 0, true}};
    CHECK(integerize({Rational(0), Rational(0)}, z) == std::vector<long>({0, 0}));
}

TEST_CASE("soundness round-trip") {
    for (auto [from, to] : std::vector<std::pair<std::string, std::string>>{
             {"a:5", "a0:5"}, {"a0:5", "abelian:5"}, {"a:6", "a0:6"}, {"a:5", "a:5"}}) {
        auto c = catalog_by_spec(from);
        auto c0 = catalog_by_spec(to);
        auto f = giw_feasible(c, c0);
        REQUIRE(f.feasible);
        CHECK(verify_realization(c, diag_powers(f.alpha), c0).realizes());
        // scaling closure
        auto p = build_problem(c, c0);
        for (long m : {2L, 3L}) {
            std::vector<long> scaled = f.alpha;
            for (auto& v : scaled) v *= m;
            for (const auto& row : p.rows) CHECK(row_satisfied(row, scaled));
        }
    }
}

TEST_CASE("lp agrees with exhaustive search at n = 5") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"a:5", "a0:5"}, {"a0:5", "abelian:5"}, {"a:5", "abelian:5"}, {"a0:5", "a0:5"}};
    for (auto [from, to] : pairs) {
        auto p = build_problem(catalog_by_spec(from), catalog_by_spec(to));
        REQUIRE(!p.infeasible_reason);
        auto lp = lp_feasible(p);
        std::vector<long> w;
        bool brute = exhaustive_feasible(p, &w);
        CHECK(lp.feasible == brute);
    }
    // and a forced-infeasible variant: a -> a0 with a5 >= 0 adjoined
    auto p = build_problem(catalog("a", 5), catalog("a0", 5));
    p.rows.push_back(ExponentRow{{0, 0, 0, 0, 1}, 0, false});
    CHECK(!lp_feasible(p).feasible);
    CHECK(!exhaustive_feasible(p, nullptr));
}
