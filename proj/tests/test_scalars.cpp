#include "deriva/scalars.hpp"

#include <doctest.h>

#include <vector>

using namespace deriva;

TEST_CASE("field construction accepts 0 and primes, rejects composites") {
    CHECK(make_field(0).is_rational_field());
    CHECK(make_field(3).characteristic() == 3);
    CHECK(make_field(2).characteristic() == 2);
    CHECK_THROWS_AS(make_field(6), CompositeCharacteristic);
    CHECK_THROWS_AS(make_field(1), CompositeCharacteristic);
    CHECK_THROWS_AS(make_field(91), CompositeCharacteristic);  // 7 * 13
}

TEST_CASE("rational scalars stay canonical") {
    Field q = make_field(0);
    Scalar half = q.from_string("1/2");
    Scalar reducible = q.from_string("2/4");
    CHECK(half == reducible);
    CHECK(q.to_string(half) == "1/2");
    CHECK(q.to_string(q.from_long(-7)) == "-7");
    CHECK(q.sub(q.from_long(1), q.from_string("1/3")) == q.from_string("2/3"));
    CHECK(q.neg(q.from_string("-3/5")) == q.from_string("3/5"));
}

TEST_CASE("residues reduce into [0, p)") {
    Field f5 = make_field(5);
    CHECK(f5.from_long(7) == f5.from_long(2));
    CHECK(f5.from_long(-1) == f5.from_long(4));
    CHECK(f5.from_string("-1") == f5.from_long(4));
    CHECK(f5.to_string(f5.from_long(9)) == "4");
    CHECK(f5.add(f5.from_long(3), f5.from_long(4)) == f5.from_long(2));
    CHECK(f5.mul(f5.from_long(3), f5.from_long(4)) == f5.from_long(2));
}

TEST_CASE("scalar inverses") {
    Field q = make_field(0);
    CHECK(scalar_inverse(q, q.one()) == q.one());
    CHECK(scalar_inverse(q, q.from_string("2/3")) == q.from_string("3/2"));

    // independent oracle: search GF(7) for the inverse of 3
    Field f7 = make_field(7);
    Scalar three = f7.from_long(3);
    Scalar found = f7.zero();
    for (long y = 1; y < 7; ++y)
        if (f7.mul(three, f7.from_long(y)) == f7.one())
            found = f7.from_long(y);
    CHECK(found == f7.from_long(5));
    CHECK(scalar_inverse(f7, three) == found);

    CHECK_THROWS_AS(scalar_inverse(q, q.zero()), DivisionByZero);
    CHECK_THROWS_AS(f7.div(f7.one(), f7.zero()), DivisionByZero);
}

TEST_CASE("operands from different fields are rejected") {
    Field q = make_field(0);
    Field f3 = make_field(3);
    CHECK_THROWS_AS(q.add(q.one(), f3.one()), FieldMismatch);
    CHECK_THROWS_AS(f3.mul(f3.one(), q.from_long(2)), FieldMismatch);
}

TEST_CASE("prime field axioms hold exhaustively for p <= 7") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        Field f = make_field(p);
        std::vector<Scalar> all;
        for (long v = 0; v < (long)p; ++v)
            all.push_back(f.from_long(v));
        for (const Scalar &a : all) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (!a.is_zero())
                CHECK(f.mul(a, f.inv(a)) == f.one());
            for (const Scalar &b : all) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (const Scalar &c : all) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("a^(p-1) = 1 for every nonzero residue, p <= 13") {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        Field f = make_field(p);
        for (long a = 1; a < (long)p; ++a) {
            Scalar pow = f.one();
            for (unsigned long k = 0; k + 1 < p; ++k)
                pow = f.mul(pow, f.from_long(a));
            CHECK(pow == f.one());
        }
    }
}

TEST_CASE("string parsing round-trips") {
    Field q = make_field(0);
    for (const char *s : {"0", "1", "-1", "7/3", "-22/7"})
        CHECK(q.to_string(q.from_string(s)) == s);
    Field f7 = make_field(7);
    for (const char *s : {"0", "1", "6"})
        CHECK(f7.to_string(f7.from_string(s)) == s);
}
