#include <doctest.h>

#include "bezgw/field.hpp"
#include "util.hpp"

using namespace bezgw;
using testutil::rand_element;

TEST_CASE("square classes over Q") {
    auto Q = make_rationals();
    CHECK(square_class(Q->from_int(8)).representative == Q->from_int(2));
    CHECK(square_class(Q->one()).representative == Q->one());
    CHECK(square_class(Q->element(mpq_class(-9, 4))).representative == Q->from_int(-1));
    CHECK_THROWS_WITH_AS(square_class(Q->zero()), "square class of zero undefined", Error);
}

TEST_CASE("square class is invariant under multiplication by squares") {
    auto Q = make_rationals();
    for (int i = 0; i < 50; ++i) {
        FieldElement a = rand_element(Q, true), c = rand_element(Q, true);
        CHECK(square_class(a) == square_class(a * c * c));
    }
}

TEST_CASE("square class is multiplicative up to canonicalization") {
    for (auto k : {make_rationals(), make_prime_field(7)}) {
        for (int i = 0; i < 50; ++i) {
            FieldElement a = rand_element(k, true), b = rand_element(k, true);
            auto lhs = square_class(a * b);
            auto rhs = square_class(square_class(a).representative * square_class(b).representative);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("sign over Q and the no-ordering error") {
    auto Q = make_rationals();
    CHECK(Q->element(mpq_class(-3, 7)).sign() == -1);
    CHECK(Q->zero().sign() == 0);
    auto F7 = make_prime_field(7);
    CHECK_THROWS_WITH_AS(F7->from_int(5).sign(), "no ordering", Error);
}

TEST_CASE("field axioms hold exactly on randomized inputs") {
    std::vector<FieldPtr> fields = {make_rationals(), make_prime_field(7),
                                    make_field("Q[t]/(t^2-2)"), make_field("F5[t]/(t^2+2)")};
    for (auto& k : fields) {
        CAPTURE(k->descriptor());
        for (int i = 0; i < 30; ++i) {
            FieldElement a = rand_element(k), b = rand_element(k), c = rand_element(k);
            CHECK((a + b) - b == a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == k->one());
        }
    }
}

TEST_CASE("characteristic 2 is rejected at construction") {
    CHECK_THROWS_AS(make_prime_field(2), Error);
    CHECK_THROWS_AS(make_field("F2"), Error);
}

TEST_CASE("reducible extension moduli are rejected") {
    CHECK_THROWS_AS(make_field("Q[t]/(t^2-1)"), Error);
    CHECK_THROWS_AS(make_field("F5[t]/(t^2-1)"), Error);
    CHECK_THROWS_AS(make_field("Q[t]/(t^4-4)"), Error);       // (t^2-2)(t^2+2)
    CHECK_THROWS_AS(make_field("Q[t]/(t^4+2*t^2+1)"), Error);  // (t^2+1)^2
    CHECK_NOTHROW(make_field("Q[t]/(t^2+1)"));
    CHECK_NOTHROW(make_field("Q[t]/(t^4+1)"));
    CHECK_NOTHROW(make_field("F5[t]/(t^2+2)"));
}

TEST_CASE("descriptor round trip") {
    for (auto d : {"Q", "F7", "Q[t]/(t^2-2)", "F5[t]/(t^2+2)"}) {
        CHECK(make_field(d)->descriptor() == d);
    }
}

TEST_CASE("extension arithmetic: t^2 = 2 in Q[t]/(t^2-2)") {
    auto k = make_field("Q[t]/(t^2-2)");
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    CHECK(t * t == k->from_int(2));
    CHECK((k->one() + t) * (k->one() - t) == k->from_int(-1));
    CHECK(t.inverse() * t == k->one());
}

TEST_CASE("ordered extension via isolating interval") {
    auto k = make_field("Q[t]/(t^2-2)", IsolatingInterval{1, 2});
    REQUIRE(k->ordered());
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    CHECK(t.sign() == 1);                       // t = sqrt(2)
    CHECK((k->one() - t).sign() == -1);         // 1 - sqrt(2) < 0
    CHECK((t - k->element(mpq_class(7, 5))).sign() == 1);   // sqrt(2) > 1.4
    CHECK((t - k->element(mpq_class(3, 2))).sign() == -1);  // sqrt(2) < 1.5
    CHECK((t * t - k->from_int(2)).sign() == 0);
}

TEST_CASE("squares in extension fields") {
    auto k = make_field("Q[t]/(t^2-2)");
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    // 3 + 2 sqrt(2) = (1 + sqrt(2))^2
    CHECK(*k->is_square((k->from_int(3) + k->from_int(2) * t).rep()) == true);
    CHECK(*k->is_square(k->from_int(2).rep()) == true);  // 2 = t^2
    CHECK(*k->is_square(k->from_int(3).rep()) == false);
    auto f25 = make_field("F5[t]/(t^2+2)");
    int squares = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == 0 && j == 0) continue;
            FieldElement e = f25->element(Rep{mpq_class(i), mpq_class(j)});
            if (*f25->is_square(e.rep())) ++squares;
        }
    CHECK(squares == 12);  // (25 - 1) / 2
}

TEST_CASE("exact square roots") {
    auto Qf = make_rationals();
    CHECK(Qf->sqrt({mpq_class(9, 4)}) == Rep{mpq_class(3, 2)});
    CHECK(!Qf->sqrt({mpq_class(2)}));
    CHECK(!Qf->sqrt({mpq_class(-4)}));

    auto f13 = make_field("F13");
    for (int a = 1; a < 13; ++a) {
        auto r = f13->sqrt({mpq_class(a * a % 13)});
        REQUIRE(r);
        CHECK(f13->mul(*r, *r) == Rep{mpq_class(a * a % 13)});
    }
    CHECK(!f13->sqrt({mpq_class(2)}));  // 2 is a nonresidue mod 13

    auto k = make_field("Q[t]/(t^2-2)");
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    auto s8 = k->sqrt(k->from_int(8).rep());
    REQUIRE(s8);
    CHECK(FieldElement(k, *s8) * FieldElement(k, *s8) == k->from_int(8));
    auto s = k->sqrt((k->from_int(3) + k->from_int(2) * t).rep());
    REQUIRE(s);
    CHECK(FieldElement(k, *s) * FieldElement(k, *s) == k->from_int(3) + k->from_int(2) * t);
    CHECK(!k->sqrt(k->from_int(3).rep()));

    auto f25 = make_field("F5[t]/(t^2+2)");
    FieldElement u = f25->element(Rep{mpq_class(2), mpq_class(3)});
    auto sq = f25->sqrt((u * u).rep());
    REQUIRE(sq);
    CHECK(FieldElement(f25, *sq) * FieldElement(f25, *sq) == u * u);
}
