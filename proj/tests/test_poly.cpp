#include <doctest.h>

#include "bezgw/poly.hpp"
#include "util.hpp"

using namespace bezgw;
using testutil::rand_element;
using testutil::rand_int;
using testutil::rand_poly;

namespace {
auto Q = make_rationals();
Polynomial P(std::initializer_list<long> c) { return Polynomial(Q, c); }
}  // namespace

TEST_CASE("xgcd basics") {
    auto check_bezout = [](const Polynomial& f, const Polynomial& g) {
        auto [d, u, v] = xgcd(f, g);
        CHECK(u * f + v * g == d);
        CHECK(d.is_monic());
        return d;
    };
    CHECK(check_bezout(P({0, -1, 1}), P({1})) == P({1}));
    CHECK(check_bezout(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(check_bezout(P({0, -1, 1}), P({1, 1})) == P({1}));
}

TEST_CASE("resultant and discriminant") {
    CHECK(resultant(P({0, -1, 1}), P({1})) == Q->one());        // Res(f, c) = c^deg f
    CHECK(resultant(P({-1, 0, 1}), P({2})) == Q->from_int(4));  // 2^2
    CHECK(discriminant(P({-1, 0, 1})) == Q->from_int(4));       // (r1 - r2)^2 = 4
    // Res(f, 0) = 0 for deg f > 0
    CHECK(resultant(P({-1, 0, 1}), Polynomial(Q)) == Q->zero());
}

TEST_CASE("resultant equals the product over roots (brute-force oracle)") {
    for (int iter = 0; iter < 40; ++iter) {
        // g with planted rational roots
        std::vector<FieldElement> roots;
        for (int i = 0, n = (int)rand_int(1, 4); i < n; ++i)
            roots.push_back(Q->from_int(rand_int(-5, 5)));
        FieldElement lc = rand_element(Q, true);
        Polynomial g = Polynomial::constant(lc);
        for (auto& r : roots) g = g * Polynomial(Q, std::vector<FieldElement>{-r, Q->one()});
        Polynomial f = rand_poly(Q, rand_int(1, 5));
        // Res(f, g) = (-1)^{deg f * deg g} lc(g)^deg f * prod f(root)
        FieldElement expect = lc.pow(f.degree());
        for (auto& r : roots) expect *= f(r);
        if ((f.degree() * g.degree()) % 2) expect = -expect;
        CHECK(resultant(f, g) == expect);
    }
}

TEST_CASE("reciprocal series examples") {
    auto s = [](const Polynomial& f, const Polynomial& g, size_t n) {
        return reciprocal_series(f, g, n);
    };
    CHECK(s(P({0, 1}), P({1}), 1) == std::vector<FieldElement>{Q->one()});
    CHECK(s(P({0, -1, 1}), P({1}), 3) ==
          std::vector<FieldElement>{Q->zero(), Q->one(), Q->one()});
    CHECK(s(P({0, 0, 1}), P({1}), 3) ==
          std::vector<FieldElement>{Q->zero(), Q->one(), Q->zero()});
}

TEST_CASE("reciprocal series satisfies the defining identity") {
    // f * (sum s_b x^{-b}) = g up to O(x^{deg g - count}); check by clearing
    // denominators: f * (sum s_b x^{count-b}) - g x^{count} has degree < mu.
    for (int iter = 0; iter < 40; ++iter) {
        size_t mu = (size_t)rand_int(1, 8);
        Polynomial f = rand_poly(Q, (long)mu, true);
        Polynomial g = rand_poly(Q, rand_int(0, (long)mu - 1));
        size_t count = 2 * mu - 1;
        auto s = reciprocal_series(f, g, count);
        Polynomial acc(Q);
        for (size_t b = 1; b <= count; ++b)
            acc = acc + Polynomial::constant(s[b - 1]).shift(count - b);
        Polynomial diff = f * acc - g.shift(count);
        CHECK(diff.degree() < (long)mu);
    }
}

TEST_CASE("rational roots with multiplicities") {
    auto rr = field_roots(P({0, -1, 1}));
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == Q->zero());
    CHECK(rr.roots[0].second == 1);
    CHECK(rr.roots[1].first == Q->one());
    CHECK(rr.remainder == P({1}));

    // (x-1)^2 (x+1)
    auto rr2 = field_roots(P({1, -1, -1, 1}));
    REQUIRE(rr2.roots.size() == 2);
    CHECK(rr2.roots[0].first == Q->from_int(-1));
    CHECK(rr2.roots[0].second == 1);
    CHECK(rr2.roots[1].first == Q->one());
    CHECK(rr2.roots[1].second == 2);

    auto rr3 = field_roots(P({1, 0, 1}));
    CHECK(rr3.roots.empty());
    CHECK(rr3.remainder == P({1, 0, 1}));
}

TEST_CASE("roots over a prime field") {
    auto F7 = make_prime_field(7);
    // x^2 + 3 = (x-2)(x-5) mod 7
    Polynomial f(F7, {3, 0, 1});
    auto rr = field_roots(f);
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == F7->from_int(2));
    CHECK(rr.roots[1].first == F7->from_int(5));
}

TEST_CASE("partial fractions worked examples") {
    // 1/(x(x-1)) = -1/x + 1/(x-1)
    auto sd = partial_fractions(P({0, -1, 1}), P({1}),
                                {{Q->zero(), 1}, {Q->one(), 1}});
    CHECK(sd.pf_coefficients[0][0] == Q->from_int(-1));
    CHECK(sd.pf_coefficients[1][0] == Q->one());

    // 1/x^mu
    auto sd2 = partial_fractions(P({0, 0, 0, 1}), P({1}), {{Q->zero(), 3}});
    CHECK(sd2.pf_coefficients[0][0] == Q->zero());
    CHECK(sd2.pf_coefficients[0][1] == Q->zero());
    CHECK(sd2.pf_coefficients[0][2] == Q->one());

    // 1/((x-1)^2 (x+1)): A(2) at r=1 is 1/2, A(1) at r=1 is -1/4, A(1) at -1 is 1/4
    auto sd3 = partial_fractions(P({1, -1, -1, 1}), P({1}),
                                 {{Q->one(), 2}, {Q->from_int(-1), 1}});
    CHECK(sd3.pf_coefficients[0][1] == Q->element(mpq_class(1, 2)));
    CHECK(sd3.pf_coefficients[0][0] == Q->element(mpq_class(-1, 4)));
    CHECK(sd3.pf_coefficients[1][0] == Q->element(mpq_class(1, 4)));
}

TEST_CASE("partial fractions rejects inconsistent split data") {
    CHECK_THROWS_WITH_AS(
        partial_fractions(P({0, -1, 1}), P({1}), {{Q->zero(), 2}}),
        "split data inconsistent", Error);
}

TEST_CASE("partial fractions recombination on randomized split inputs") {
    std::vector<FieldPtr> fields = {make_rationals(), make_prime_field(11)};
    for (auto& k : fields) {
        for (int iter = 0; iter < 30; ++iter) {
            auto F = testutil::rand_split_prf(k, {1, 2, 1});
            auto rr = field_roots(F.f());
            REQUIRE(rr.remainder.degree() == 0);
            // throws internally if recombination fails
            CHECK_NOTHROW(partial_fractions(F.f(), F.g(), rr.roots));
        }
    }
}

TEST_CASE("polynomial ring axioms on randomized inputs") {
    auto k = make_field("F5[t]/(t^2+2)");
    for (int iter = 0; iter < 20; ++iter) {
        Polynomial a = rand_poly(k, rand_int(0, 4)), b = rand_poly(k, rand_int(0, 4)),
                   c = rand_poly(k, rand_int(0, 4));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        auto [q, r] = divmod(a * b + c, b);
        CHECK(q * b + r == a * b + c);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("root search over extension fields") {
    auto k = make_field("Q[t]/(t^2+1)");
    FieldElement i = k->element(Rep{mpq_class(0), mpq_class(1)});
    // x^4 - 1 = (x-1)(x+1)(x-i)(x+i)
    Polynomial f(k, {k->from_int(-1), k->zero(), k->zero(), k->zero(), k->one()});
    auto rr = field_roots(f);
    REQUIRE(rr.roots.size() == 4);
    CHECK(rr.remainder.degree() == 0);
    bool saw_i = false;
    for (auto& [r, m] : rr.roots) {
        CHECK(m == 1);
        if (r == i) saw_i = true;
    }
    CHECK(saw_i);

    // (x - i)^2 via the quadratic formula with a zero discriminant
    Polynomial g(k, {i * i, k->from_int(-2) * i, k->one()});
    auto rr2 = field_roots(g);
    REQUIRE(rr2.roots.size() == 1);
    CHECK(rr2.roots[0].first == i);
    CHECK(rr2.roots[0].second == 2);
}
