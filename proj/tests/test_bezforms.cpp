#include <doctest.h>

#include "bezgw/bezforms.hpp"
#include "util.hpp"

using namespace bezgw;
using testutil::rand_int;
using testutil::rand_prf;
using testutil::rand_split_prf;

namespace {

auto Q = make_rationals();

PointedRationalFunction prf(std::initializer_list<long> f, std::initializer_list<long> g,
                            const FieldPtr& k = Q) {
    return PointedRationalFunction::normalize(Polynomial(k, f), Polynomial(k, g));
}

Matrix mat(const FieldPtr& k, std::vector<std::vector<mpq_class>> rows) {
    Matrix m(k, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = k->element(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("Bezout matrix worked examples") {
    CHECK(bezout_matrix(prf({0, -1, 1}, {1})) == mat(Q, {{-1, 1}, {1, 0}}));
    auto b2 = bezout_matrix(prf({-1, 0, 1}, {2}));
    CHECK(b2 == mat(Q, {{0, 2}, {2, 0}}));
    CHECK(b2.det() == Q->from_int(-4));
    CHECK(bezout_matrix(prf({0, 1}, {1})) == mat(Q, {{1}}));
    CHECK(bezout_matrix(prf({0, 0, 0, 1}, {1})) ==
          mat(Q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("Hankel matrix worked examples") {
    CHECK(hankel_matrix(prf({0, -1, 1}, {1})) == mat(Q, {{0, 1}, {1, 1}}));
    CHECK(hankel_matrix(prf({0, 1}, {1})) == mat(Q, {{1}}));
    CHECK(hankel_matrix(prf({0, 0, 0, 1}, {1})) ==
          mat(Q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("Newton matrix worked examples") {
    auto F = prf({0, -1, 1}, {1});
    CHECK(newton_matrix(F, split_data(F)) == mat(Q, {{-1, 0}, {0, 1}}));

    auto Fp = prf({0, 0, 0, 1}, {1});
    CHECK(newton_matrix(Fp, split_data(Fp)) ==
          mat(Q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

    // (x-1)^2 (x+1); roots sorted as -1, 1
    auto Fc = prf({1, -1, -1, 1}, {1});
    CHECK(newton_matrix(Fc, split_data(Fc)) ==
          mat(Q, {{mpq_class(1, 4), 0, 0},
                  {0, mpq_class(-1, 4), mpq_class(1, 2)},
                  {0, mpq_class(1, 2), 0}}));
}

TEST_CASE("Vandermonde matrix worked examples") {
    auto F = prf({0, -1, 1}, {1});
    CHECK(vandermonde_matrix(F, split_data(F)) == mat(Q, {{0, 1}, {1, 1}}));
    auto F1 = prf({0, 1}, {1});
    CHECK(vandermonde_matrix(F1, split_data(F1)) == mat(Q, {{1}}));
}

TEST_CASE("transition matrices worked example") {
    auto F = prf({0, -1, 1}, {1});
    auto tm = transition_matrices(F, split_data(F));
    CHECK(tm.L == mat(Q, {{-1, 1}, {1, 0}}));
    CHECK(tm.M == mat(Q, {{-1, 0}, {1, 1}}));
    CHECK(tm.N == mat(Q, {{-1, 1}, {1, 0}}));
    CHECK(tm.N0 * tm.N0.inverse() == Matrix::identity(Q, 2));
}

TEST_CASE("det M and det N match the two-root closed forms") {
    // f = (x - r1)(x - r2), g = b0 x + b1: det M = r1 - r2,
    // det N = -(b0 r1 + b1)(b0 r2 + b1)
    for (int iter = 0; iter < 40; ++iter) {
        long r1 = rand_int(-8, 8), r2 = rand_int(-8, 8);
        if (r1 == r2) continue;
        long b0 = rand_int(-5, 5), b1 = rand_int(-5, 5);
        if (b0 * r1 + b1 == 0 || b0 * r2 + b1 == 0) continue;
        if (b0 == 0 && b1 == 0) continue;
        Polynomial f(Q, {r1 * r2, -r1 - r2, 1});
        Polynomial g(Q, {b1, b0});
        auto F = PointedRationalFunction::normalize(f, g);
        SplitData sd =
            split_data(F, {{Q->from_int(r1), 1}, {Q->from_int(r2), 1}});
        auto tm = transition_matrices(F, sd);
        CHECK(tm.M.det() == Q->from_int(r1 - r2));
        CHECK(tm.N.det() == Q->from_int(-(b0 * r1 + b1) * (b0 * r2 + b1)));
    }
}

TEST_CASE("det Bez = (-1)^{mu(mu-1)/2} Res(f, g)") {
    for (int iter = 0; iter < 60; ++iter) {
        auto F = rand_prf(Q, (size_t)rand_int(1, 6));
        long mu = (long)F.mu();
        FieldElement expect = resultant(F.f(), F.g());
        if ((mu * (mu - 1) / 2) % 2) expect = -expect;
        CHECK(bezout_matrix(F).det() == expect);
    }
}

TEST_CASE("congruence identities on randomized inputs") {
    std::vector<FieldPtr> fields = {Q, make_prime_field(13)};
    for (auto& k : fields) {
        for (int iter = 0; iter < 25; ++iter) {
            auto F = rand_prf(k, (size_t)rand_int(1, 6));
            auto rep = verify_congruences(F);
            REQUIRE(rep.items.size() == 1);
            CHECK(rep.items[0].pass);
        }
        for (int iter = 0; iter < 25; ++iter) {
            std::vector<unsigned> mults;
            for (int i = 0, n = (int)rand_int(1, 3); i < n; ++i)
                mults.push_back((unsigned)rand_int(1, 3));
            auto F = rand_split_prf(k, mults);
            auto rep = verify_congruences(F, split_data(F));
            REQUIRE(rep.items.size() == 3);
            for (auto& it : rep.items) {
                CAPTURE(it.name);
                CAPTURE(it.detail);
                CHECK(it.pass);
            }
        }
    }
}

TEST_CASE("congruences over an extension field with supplied roots") {
    auto k = make_field("Q[t]/(t^2+1)");
    FieldElement t = k->element(Rep{mpq_class(0), mpq_class(1)});
    auto F = prf({1, 0, 1}, {1}, k);  // x^2 + 1, roots +-t
    auto rep = verify_congruences(F, split_data(F, {{t, 1}, {-t, 1}}));
    REQUIRE(rep.items.size() == 3);
    for (auto& it : rep.items) CHECK(it.pass);
}

TEST_CASE("inconsistent split data is rejected") {
    auto F = prf({0, -1, 1}, {1});
    SplitData bad;
    bad.roots = {{Q->zero(), 2}};
    bad.pf_coefficients = {{Q->zero(), Q->one()}};
    CHECK_THROWS_WITH_AS(newton_matrix(F, bad), "split data inconsistent", Error);
    CHECK_THROWS_WITH_AS(vandermonde_matrix(F, bad), "split data inconsistent", Error);
    CHECK_THROWS_WITH_AS(transition_matrices(F, bad), "split data inconsistent", Error);
}
