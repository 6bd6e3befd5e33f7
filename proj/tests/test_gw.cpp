#include <doctest.h>

#include "bezgw/bezforms.hpp"
#include "bezgw/gw.hpp"
#include "util.hpp"

using namespace bezgw;
using testutil::rand_element;
using testutil::rand_int;

namespace {

auto Q = make_rationals();

Matrix mat(const FieldPtr& k, std::vector<std::vector<long>> rows) {
    Matrix m(k, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = k->from_int(rows[i][j]);
    return m;
}

Matrix rand_symmetric(const FieldPtr& k, size_t n) {
    for (;;) {
        Matrix m(k, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = rand_element(k);
        if (!m.det().is_zero()) return m;
    }
}

Matrix rand_invertible(const FieldPtr& k, size_t n) {
    for (;;) {
        Matrix m(k, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = k->from_int(rand_int(-3, 3));
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("diagonalize reproduces the diagonal via P") {
    std::vector<FieldPtr> fields = {Q, make_prime_field(11), make_field("F5[t]/(t^2+2)")};
    for (auto& k : fields) {
        for (int iter = 0; iter < 25; ++iter) {
            Matrix m = rand_symmetric(k, (size_t)rand_int(1, 5));
            auto d = diagonalize(m);  // self-check runs inside
            Matrix back = d.p.transpose() * m * d.p;
            for (size_t i = 0; i < m.rows(); ++i) CHECK(back.at(i, i) == d.diagonal[i]);
        }
    }
}

TEST_CASE("diagonalize examples and the degenerate error") {
    auto inv = invariants(mat(Q, {{0, 1}, {1, 0}}));
    CHECK(inv.rank == 2);
    CHECK(inv.signature == 0);
    CHECK(inv.discriminant == square_class(Q->from_int(-1)));

    auto inv2 = invariants(mat(Q, {{-1, 1}, {1, 0}}));
    CHECK(inv2.signature == 0);
    CHECK(inv2.discriminant == square_class(Q->from_int(-1)));

    auto d3 = diagonalize(mat(Q, {{5}}));
    CHECK(d3.diagonal == std::vector<FieldElement>{Q->from_int(5)});

    CHECK_THROWS_WITH_AS(diagonalize(mat(Q, {{1, 1}, {1, 1}})), "degenerate form", Error);
}

TEST_CASE("invariants examples") {
    auto F = PointedRationalFunction::normalize(Polynomial(Q, {0, 0, 0, 1}),
                                                Polynomial(Q, {1}));
    auto inv = invariants(bezout_matrix(F));
    CHECK(inv.rank == 3);
    CHECK(inv.signature == 1);
    CHECK(inv.discriminant == square_class(Q->from_int(-1)));

    auto inv2 = invariants(mat(Q, {{1, 0}, {0, 1}}));
    CHECK(inv2.rank == 2);
    CHECK(inv2.signature == 2);
    CHECK(inv2.discriminant == square_class(Q->one()));
    CHECK(inv2.hasse_witt->empty());  // +1 everywhere
}

TEST_CASE("invariants are congruence-invariant") {
    for (int iter = 0; iter < 25; ++iter) {
        size_t n = (size_t)rand_int(1, 4);
        Matrix m = rand_symmetric(Q, n);
        Matrix p = rand_invertible(Q, n);
        auto a = invariants(m), b = invariants(p.transpose() * m * p);
        CHECK(a.rank == b.rank);
        CHECK(a.discriminant == b.discriminant);
        CHECK(a.signature == b.signature);
        CHECK(a.hasse_witt == b.hasse_witt);
    }
}

TEST_CASE("gw_equal examples over Q") {
    GWClass h = gw_class(Q, {}, 1);
    GWClass pm = gw_class(Q, {Q->one(), Q->from_int(-1)});
    CHECK(gw_equal(h, pm) == Tri::True);

    GWClass ones = gw_class(Q, {Q->one(), Q->one()});
    GWClass twos = gw_class(Q, {Q->from_int(2), Q->from_int(2)});
    CHECK(gw_equal(ones, twos) == Tri::True);  // x^2+y^2 = 2 has the rotation solution

    CHECK(gw_equal(gw_class(Q, {Q->one()}), gw_class(Q, {Q->from_int(-1)})) == Tri::False);
    CHECK_THROWS_WITH_AS(gw_equal(h, gw_class(make_prime_field(7), {}, 1)),
                         "field mismatch", Error);
}

TEST_CASE("gw_equal over Fp uses rank and discriminant") {
    auto F7 = make_prime_field(7);
    // squares mod 7: 1, 2, 4; nonsquares: 3, 5, 6
    CHECK(gw_equal(gw_class(F7, {F7->from_int(1)}), gw_class(F7, {F7->from_int(2)})) ==
          Tri::True);
    CHECK(gw_equal(gw_class(F7, {F7->from_int(1)}), gw_class(F7, {F7->from_int(3)})) ==
          Tri::False);
    // <1,1> has disc 1; H has disc -1 ~ 6 (nonsquare mod 7): distinct
    CHECK(gw_equal(gw_class(F7, {F7->one(), F7->one()}), gw_class(F7, {}, 1)) == Tri::False);
}

TEST_CASE("gw_equal over extensions") {
    auto k = make_field("Q[t]/(t^2-2)");
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    // <2> = <t^2> ~ <1>
    CHECK(gw_equal(gw_class(k, {k->from_int(2)}), gw_class(k, {k->one()})) == Tri::True);
    // rank 1 is settled by the discriminant: 15 is not a square in Q(sqrt 2)
    CHECK(gw_equal(gw_class(k, {k->from_int(3)}), gw_class(k, {k->from_int(5)})) ==
          Tri::False);
    CHECK(gw_equal(gw_class(k, {k->one(), k->one()}),
                   gw_class(k, {k->from_int(3), k->from_int(3)})) == Tri::Undecided);
    CHECK(gw_equal(gw_class(k, {t}), gw_class(k, {t * k->from_int(4)})) == Tri::True);
}

TEST_CASE("hyperbolic normalization absorbs <a, -a>") {
    for (auto k : {Q, make_prime_field(13)}) {
        for (int iter = 0; iter < 20; ++iter) {
            FieldElement a = rand_element(k, true);
            GWClass c = gw_class(k, {a, -a});
            CHECK(c.diagonal.empty());
            CHECK(c.hyperbolics == 1);
        }
    }
}

TEST_CASE("anti-triangular Hankel closed form matches the explicit matrix") {
    for (size_t mu = 1; mu <= 8; ++mu) {
        for (int iter = 0; iter < 12; ++iter) {
            std::vector<FieldElement> a;
            for (size_t i = 0; i + 1 < mu; ++i) a.push_back(rand_element(Q));
            a.push_back(rand_element(Q, true));
            GWClass closed = antitriangular_hankel_class(a);
            Matrix m(Q, mu, mu);
            for (size_t i = 0; i < mu; ++i)
                for (size_t j = 0; j < mu; ++j)
                    m.at(i, j) = (i + j < mu) ? a[i + j] : Q->zero();
            auto ci = invariants(closed), mi = invariants(m);
            CHECK(ci.rank == mi.rank);
            CHECK(ci.discriminant == mi.discriminant);
            CHECK(ci.signature == mi.signature);
            CHECK(ci.hasse_witt == mi.hasse_witt);
        }
    }
    CHECK_THROWS_WITH_AS(antitriangular_hankel_class({Q->one(), Q->zero()}), "degenerate",
                         Error);
}

TEST_CASE("anti-triangular Hankel examples") {
    GWClass h = antitriangular_hankel_class({Q->zero(), Q->one()});
    CHECK(h.diagonal.empty());
    CHECK(h.hyperbolics == 1);
    GWClass odd = antitriangular_hankel_class({Q->from_int(2), Q->from_int(3), Q->from_int(5)});
    CHECK(odd.hyperbolics == 1);
    REQUIRE(odd.diagonal.size() == 1);
    CHECK(odd.diagonal[0] == square_class(Q->from_int(5)));
    GWClass single = antitriangular_hankel_class({Q->from_int(7)});
    CHECK(single.str() == "<7>");
}

TEST_CASE("power map class") {
    GWClass one = power_map_class(1, Q->one());
    CHECK(one.str() == "<1>");
    GWClass cubic = power_map_class(3, Q->one());
    CHECK(cubic.hyperbolics == 1);
    CHECK(cubic.diagonal.size() == 1);
    auto F = PointedRationalFunction::normalize(Polynomial(Q, {0, 0, 0, 1}),
                                                Polynomial(Q, {1}));
    CHECK(gw_equal(cubic, gw_class(bezout_matrix(F))) == Tri::True);
    GWClass even = power_map_class(2, Q->from_int(5));
    CHECK(even.diagonal.empty());
    CHECK(even.hyperbolics == 1);
    CHECK_THROWS_AS(power_map_class(2, Q->zero()), Error);
}

TEST_CASE("signature is additive with H contributing zero") {
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<FieldElement> d1, d2;
        for (int i = 0, n = (int)rand_int(1, 3); i < n; ++i) d1.push_back(rand_element(Q, true));
        for (int i = 0, n = (int)rand_int(1, 3); i < n; ++i) d2.push_back(rand_element(Q, true));
        GWClass a = gw_class(Q, d1, (unsigned)rand_int(0, 2));
        GWClass b = gw_class(Q, d2, (unsigned)rand_int(0, 2));
        auto ia = invariants(a), ib = invariants(b), is = invariants(a + b);
        CHECK(*is.signature == *ia.signature + *ib.signature);
    }
}
