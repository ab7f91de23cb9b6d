#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecon/certificate.hpp"
#include "liecon/invariants.hpp"

using namespace liecon;

namespace {

Matrix<Rational> random_lower(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9), dnum(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    Matrix<Rational> l(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) l(i, j) = Rational(num(rng), den(rng));
    for (int i = 1; i <= n; ++i) {
        Rational d(dnum(rng), den(rng));
        l(i, i) = sign(rng) ? d : -d;
    }
    return l;
}

bool residuals_equal(const ResidualSet<Rational>& a, const ResidualSet<Rational>& b) {
    for (size_t k = 0; k < a.o.size(); ++k)
        if (!(a.o[k] == b.o[k])) return false;
    return true;
}

}  // namespace

TEST_CASE("residuals on diagonal L") {
    Matrix<Rational> l = Matrix<Rational>::identity(5);
    l(5, 5) = Rational(7);
    auto r = residuals_direct(l);
    CHECK(r.at(1, 2, 5) == Rational(1, 7));
    for (auto [i, j, k] : residual_triples())
        if (!(i == 1 && j == 2 && k == 5)) CHECK(r.at(i, j, k).is_zero());

    auto id = residuals_direct(Matrix<Rational>::identity(5));
    CHECK(id.at(1, 2, 5) == Rational(1));

    Matrix<Rational> mu = Matrix<Rational>::identity(5);
    mu(3, 2) = Rational(4);
    CHECK(residuals_direct(mu).at(1, 2, 3) == Rational(4));
}

TEST_CASE("formula route matches on the worked examples") {
    Matrix<Rational> cases[3] = {Matrix<Rational>::identity(5), Matrix<Rational>::identity(5),
                                 Matrix<Rational>::identity(5)};
    cases[1](5, 5) = Rational(7);
    cases[2](3, 2) = Rational(4);
    for (const auto& l : cases) CHECK(residuals_equal(residuals_formula(l), residuals_direct(l)));

    Matrix<Rational> d = Matrix<Rational>::identity(5);
    d(1, 1) = Rational(2);
    d(2, 2) = Rational(3);
    d(3, 3) = Rational(5);
    d(4, 4) = Rational(7);
    d(5, 5) = Rational(11);
    auto r = residuals_formula(d);
    CHECK(r.at(1, 2, 5) == Rational(6, 11));
    CHECK(r.at(1, 3, 3) == Rational(1));
    CHECK(residuals_equal(r, residuals_direct(d)));
}

TEST_CASE("oracle equality and key identity on 1000 random L") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1000; ++k) {
        auto l = random_lower(rng, 5);
        CHECK(residuals_equal(residuals_formula(l), residuals_direct(l)));
        auto [lhs, rhs] = key_identity(l);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("key identity worked examples") {
    Matrix<Rational> l = Matrix<Rational>::identity(5);
    l(5, 5) = Rational(3);
    auto [lhs, rhs] = key_identity(l);
    CHECK(lhs == Rational(1, 3));
    CHECK(rhs == Rational(1, 3));
    auto [il, ir] = key_identity(Matrix<Rational>::identity(5));
    CHECK(il == Rational(1));
    CHECK(ir == Rational(1));
}

TEST_CASE("third-row entries impose no constraint") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> v(-9, 9);
    for (int k = 0; k < 50; ++k) {
        auto l = random_lower(rng, 5);
        const std::pair<int, int> free_entries[] = {{2, 1}, {3, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}};
        for (auto [i, j] : free_entries) l(i, j) = Rational(v(rng));
        CHECK(residuals_equal(residuals_formula(l), residuals_direct(l)));
    }
}

TEST_CASE("recorded formula deviations are reported") {
    CHECK(formula_deviations().size() == 3);
}

TEST_CASE("q block check") {
    CHECK(q_block_check(Matrix<double>::identity(5)) == doctest::Approx(0.0));

    Matrix<double> perm(5);  // swap e1 <-> e5
    perm(1, 5) = perm(5, 1) = perm(2, 2) = perm(3, 3) = perm(4, 4) = 1;
    CHECK(q_block_check(perm) >= 1.0);

    Matrix<double> antid(5);  // antidiag(1,1) + antidiag(1,1) + 1
    antid(1, 2) = antid(2, 1) = antid(3, 4) = antid(4, 3) = antid(5, 5) = 1;
    CHECK(q_block_check(antid) == doctest::Approx(0.0));
}

TEST_CASE("orthogonal limit analysis") {
    CHECK(analyze_orthogonal_limit(Matrix<double>::identity(5), 1e-9).kind ==
          OrthogonalCase::DiagonalCase);

    Matrix<double> swap(5);
    swap(1, 2) = swap(2, 1) = swap(3, 4) = swap(4, 3) = swap(5, 5) = 1;
    CHECK(analyze_orthogonal_limit(swap, 1e-9).kind == OrthogonalCase::SwapCase);

    Matrix<double> rot = Matrix<double>::identity(5);
    double c = std::sqrt(0.5);
    rot(1, 1) = rot(2, 2) = c;
    rot(1, 2) = c;
    rot(2, 1) = -c;
    rot(3, 3) = rot(4, 4) = c;
    rot(3, 4) = c;
    rot(4, 3) = -c;
    auto an = analyze_orthogonal_limit(rot, 1e-6);
    CHECK(an.kind == OrthogonalCase::Violation);
    CHECK(std::fabs(an.c323) > 1e-6);
}

TEST_CASE("row reducer") {
    CHECK(row_reducer(Matrix<Rational>::identity(5)) == Matrix<Rational>::identity(5));

    Matrix<Rational> l = Matrix<Rational>::identity(5);
    l(5, 1) = Rational(3);
    auto m = row_reducer(l);
    CHECK(m(5, 1) == Rational(-3));
    CHECK((m * l)(5, 1).is_zero());

    std::mt19937_64 rng(31);
    auto a5 = catalog("a", 5);
    for (int k = 0; k < 100; ++k) {
        auto r = random_lower(rng, 5);
        auto mr = row_reducer(r);
        CHECK(is_automorphism(a5, mr));
        auto ml = mr * r;
        CHECK(ml(5, 1).is_zero());
        CHECK(ml(5, 2).is_zero());
    }
}

TEST_CASE("row5 tail norm") {
    CHECK(row5_tail_norm(Matrix<double>::identity(5)) == doctest::Approx(1.0));
    Matrix<double> u = Matrix<double>::identity(5);
    u(5, 5) = 10.0;
    CHECK(row5_tail_norm(u) == doctest::Approx(10.0));
    u(5, 5) = 0.0;
    CHECK(row5_tail_norm(u) == doctest::Approx(0.0));
}

TEST_CASE("certify the diagonal family") {
    auto rep = certify(paper_family(5), 5, decade_schedule(6), 1e-3);
    CHECK(rep.verdicts.all_pass());
    REQUIRE(rep.samples.size() == 6);
    double expect = 10;
    for (const auto& s : rep.samples) {
        CHECK(s.exact);
        CHECK(s.l55_abs == expect);  // exact arithmetic: bitwise 10^k
        CHECK(s.key_identity_residual == 0.0);
        expect *= 10;
    }
    CHECK(rep.samples.back().max_o <= 1e-5);
}

TEST_CASE("certify survives a constant rotation factor at n = 7") {
    ParamMatrix u = paper_family(7);
    Matrix<ParamScalar> rot = Matrix<ParamScalar>::identity(7);
    Rational c(3, 5), s(4, 5);  // exact rotation in the (6,7) plane
    rot(6, 6) = ParamScalar(c);
    rot(7, 7) = ParamScalar(c);
    rot(6, 7) = ParamScalar(s);
    rot(7, 6) = ParamScalar(-s);
    auto rep = certify(u * rot, 7, decade_schedule(6), 1e-3);
    CHECK(rep.verdicts.all_pass());
}

TEST_CASE("identity family fails the certificate") {
    auto rep = certify(Matrix<ParamScalar>::identity(5), 5, decade_schedule(6), 1e-3);
    CHECK(!rep.verdicts.all_pass());
    CHECK(!rep.verdicts.residuals_vanish);
    for (const auto& s : rep.samples) CHECK(s.max_o == doctest::Approx(1.0));
}

TEST_CASE("certificate report round-trip") {
    auto rep = certify(paper_family(5), 5, decade_schedule(3), 1e-3);
    auto back = CertificateReport::from_json(rep.to_json());
    CHECK(back.to_json() == rep.to_json());
    CHECK(back.to_csv() == rep.to_csv());
    CHECK(rep.to_csv().find("eps,u_norm,l55_abs") == 0);
}

TEST_CASE("schedule validation") {
    CHECK_THROWS(certify(paper_family(5), 5, {Rational(1, 10), Rational(1, 2)}, 1e-3));
    CHECK_THROWS(certify(paper_family(5), 5, {Rational(2)}, 1e-3));
    CHECK_THROWS(certify(Matrix<ParamScalar>::identity(4), 4, decade_schedule(3), 1e-3));
}
