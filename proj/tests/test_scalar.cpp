#include <catch2/catch_amalgamated.hpp>

#include "homlie/scalar.hpp"

using namespace homlie;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a - a).is_zero());
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");  // denominators normalized positive
    CHECK((a / b).str() == "3/2");
}

TEST_CASE("prime field requires p > 3 and prime") {
    CHECK_THROWS_AS(PrimeField::make_desc(4), UnsupportedField);
    CHECK_THROWS_AS(PrimeField::make_desc(3), UnsupportedField);
    CHECK_THROWS_AS(PrimeField::make_desc(9), UnsupportedField);
    auto d5 = PrimeField::make_desc(5);
    PrimeField two(d5, 2);
    CHECK((two * two * two).residue() == 3);
    CHECK(two.inverse().residue() == 3);
    CHECK((two / two).residue() == 1);
    CHECK(PrimeField(d5, -1).residue() == 4);
}

TEST_CASE("mixing prime fields is rejected") {
    auto d5 = PrimeField::make_desc(5);
    auto d7 = PrimeField::make_desc(7);
    CHECK_THROWS_AS(PrimeField(d5, 1) + PrimeField(d7, 1), FieldMismatch);
}

TEST_CASE("quadratic extension arithmetic") {
    CHECK_THROWS_AS(QuadExt::make_desc(4), UnsupportedField);
    CHECK_THROWS_AS(QuadExt::make_desc(1), UnsupportedField);
    CHECK_THROWS_AS(QuadExt::make_desc(0), UnsupportedField);
    auto d2 = QuadExt::make_desc(2);
    QuadExt w(d2, mpq_class(0), mpq_class(1));
    CHECK((w * w) == QuadExt(d2, 2));
    QuadExt x(d2, mpq_class(1, 2), mpq_class(1, 3));

    SECTION("conjugate products and multiplicative norms") {
        QuadExt y(d2, mpq_class(-1), mpq_class(2));
        CHECK((x * x.conj()).root_part() == 0);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(((x / y) * y) == x);
    }
    SECTION("negative discriminant") {
        auto dm1 = QuadExt::make_desc(-1);
        QuadExt i(dm1, mpq_class(0), mpq_class(1));
        CHECK((i * i) == QuadExt(dm1, -1));
    }
    SECTION("string forms") {
        CHECK(x.str() == "1/2+1/3 w");
        CHECK(QuadExt(d2, mpq_class(1, 2), mpq_class(-1, 3)).str() == "1/2-1/3 w");
        CHECK(QuadExt(d2, mpq_class(0), mpq_class(1, 2)).str() == "1/2 w");
        CHECK(QuadExt(d2, 7).str() == "7");
    }
}
