#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liecon/invariants.hpp"

using namespace liecon;

namespace {

Matrix<Rational> random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> e(-5, 5);
    for (;;) {
        Matrix<Rational> m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = Rational(e(rng));
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("derivation dimensions") {
    CHECK(derivation_dimension(catalog("a", 5)).dimension == 6);
    CHECK(derivation_dimension(catalog("a0", 5)).dimension == 7);
    for (int n : {1, 2, 3, 4}) CHECK(derivation_dimension(catalog("abelian", n)).dimension == n * n);
}

TEST_CASE("derivation basis satisfies the identity") {
    for (const char* spec : {"a:5", "a0:5", "heisenberg"}) {
        auto c = catalog_by_spec(spec);
        auto space = derivation_dimension(c);
        CHECK(space.dimension == static_cast<int>(space.basis.size()));
        for (const auto& d : space.basis) CHECK(is_derivation(c, d));
    }
}

TEST_CASE("center dimensions") {
    CHECK(center_dimension(catalog("a", 5)) == 1);
    CHECK(center_dimension(catalog("a0", 5)) == 1);
    CHECK(center_dimension(catalog("abelian", 3)) == 3);
    CHECK(center_dimension(catalog("abelian", 5)) == 5);
}

TEST_CASE("automorphisms") {
    auto a5 = catalog("a", 5);
    auto a05 = catalog("a0", 5);
    CHECK(is_automorphism(a5, Matrix<Rational>::identity(5)));

    // swap (e1,e2) and (e3,e4)
    Matrix<Rational> swap(5);
    swap(1, 2) = swap(2, 1) = swap(3, 4) = swap(4, 3) = swap(5, 5) = Rational(1);
    CHECK(is_automorphism(a05, swap));
    CHECK(!is_automorphism(a5, swap));

    // group closure, spot check
    Matrix<Rational> scale = Matrix<Rational>::identity(5);
    scale(5, 5) = Rational(2);
    if (is_automorphism(a05, scale)) CHECK(is_automorphism(a05, swap * scale));
}

TEST_CASE("monotonicity check") {
    CHECK(derivation_monotonicity_check(catalog("a", 5), catalog("a0", 5)) ==
          Monotonicity::Consistent);
    CHECK(derivation_monotonicity_check(catalog("a0", 5), catalog("abelian", 5)) ==
          Monotonicity::Consistent);
    CHECK(derivation_monotonicity_check(catalog("abelian", 5), catalog("a", 5)) ==
          Monotonicity::Violated);
}

TEST_CASE("derivation dimension is basis invariant") {
    std::mt19937_64 rng(23);
    for (const char* spec : {"a:5", "a0:5"}) {
        auto c = catalog_by_spec(spec);
        int d0 = derivation_dimension(c).dimension;
        for (int k = 0; k < 5; ++k) {
            auto u = random_invertible(rng, 5);
            CHECK(derivation_dimension(act(c, u)).dimension == d0);
        }
    }
}

TEST_CASE("requires a Lie algebra") {
    StructureTensor<Rational> bad(3);
    bad.set(1, 2, 1, Rational(1));
    bad.set(1, 3, 3, Rational(1));
    CHECK_THROWS(derivation_dimension(bad));
}
