#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecon/matrix.hpp"

using namespace liecon;

namespace {

Matrix<Rational> random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> e(-9, 9);
    for (;;) {
        Matrix<Rational> m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = Rational(e(rng));
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("inverse of diag(1,1,1,1,t^-1)") {
    Matrix<ParamScalar> u = Matrix<ParamScalar>::identity(5);
    u(5, 5) = ParamScalar::t_power(-1);
    Matrix<ParamScalar> inv = inverse(u);
    Matrix<ParamScalar> expect = Matrix<ParamScalar>::identity(5);
    expect(5, 5) = ParamScalar::t_power(1);
    CHECK(inv == expect);
    CHECK(det(u) == ParamScalar::t_power(-1));
}

TEST_CASE("identity inverse and singularity") {
    auto id = Matrix<Rational>::identity(4);
    CHECK(inverse(id) == id);
    Matrix<Rational> z(3);  // zero matrix
    CHECK(det(z).is_zero());
    CHECK_THROWS_AS(inverse(z), std::domain_error);
}

TEST_CASE("exact inverse composition laws") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < 10; ++k) {
            auto a = random_invertible(rng, n);
            auto b = random_invertible(rng, n);
            CHECK(a * inverse(a) == Matrix<Rational>::identity(n));
            CHECK(inverse(a * b) == inverse(b) * inverse(a));
            CHECK(det(a * b) == det(a) * det(b));
        }
}

TEST_CASE("float singular threshold") {
    Matrix<double> m(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m(i, j) = i + j;  // rank 2
    CHECK_THROWS_AS(inverse(m), std::domain_error);
}

TEST_CASE("transpose, triangularity, norm") {
    Matrix<double> m(2);
    m(1, 1) = 3;
    m(2, 1) = 4;
    CHECK(m.is_lower_triangular());
    CHECK(!m.transpose().is_lower_triangular());
    CHECK(m.frobenius_norm() == doctest::Approx(5.0));
}
