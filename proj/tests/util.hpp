#pragma once

#include <random>

#include "bezgw/field.hpp"
#include "bezgw/poly.hpp"
#include "bezgw/ratmap.hpp"

namespace testutil {

using namespace bezgw;

inline std::mt19937& rng() {
    static std::mt19937 r(20240817);
    return r;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline FieldElement rand_element(const FieldPtr& k, bool nonzero = false) {
    for (;;) {
        Rep rep;
        size_t n = 1;
        if (k->kind() == Field::Kind::Extension) n = 2;
        // denominators only make sense in characteristic 0
        bool char0 = k->characteristic() == 0;
        for (size_t i = 0; i < n; ++i) {
            mpq_class v(rand_int(-9, 9), char0 ? rand_int(1, 6) : 1);
            v.canonicalize();
            rep.push_back(v);
        }
        FieldElement e = k->element(rep);
        if (!nonzero || !e.is_zero()) return e;
    }
}

inline Polynomial rand_poly(const FieldPtr& k, long degree, bool monic = false) {
    std::vector<FieldElement> c;
    for (long i = 0; i < degree; ++i) c.push_back(rand_element(k));
    c.push_back(monic ? k->one() : rand_element(k, true));
    return Polynomial(k, std::move(c));
}

// random normalized pointed rational function with deg f = mu
inline PointedRationalFunction rand_prf(const FieldPtr& k, size_t mu) {
    for (;;) {
        Polynomial f = rand_poly(k, (long)mu, true);
        Polynomial g = rand_poly(k, rand_int(0, (long)mu - 1));
        try {
            auto F = PointedRationalFunction::normalize(f, g);
            if (F.mu() == mu) return F;
        } catch (const Error&) {
        }
    }
}

// random pointed F whose f splits with the given root multiplicities
inline PointedRationalFunction rand_split_prf(const FieldPtr& k,
                                              const std::vector<unsigned>& mults) {
    for (;;) {
        std::vector<FieldElement> roots;
        bool distinct = true;
        for (size_t i = 0; i < mults.size(); ++i) {
            FieldElement r = k->element(mpq_class(rand_int(-6, 6)));
            for (auto& prev : roots)
                if (prev == r) distinct = false;
            roots.push_back(r);
        }
        if (!distinct) continue;
        Polynomial f = Polynomial::constant(k->one());
        size_t mu = 0;
        for (size_t i = 0; i < mults.size(); ++i) {
            Polynomial lin(k, std::vector<FieldElement>{-roots[i], k->one()});
            for (unsigned j = 0; j < mults[i]; ++j) f = f * lin;
            mu += mults[i];
        }
        Polynomial g = rand_poly(k, rand_int(0, (long)mu - 1));
        bool coprime = true;
        for (auto& r : roots)
            if (g(r).is_zero()) coprime = false;
        if (!coprime) continue;
        return PointedRationalFunction::normalize(f, g);
    }
}

}  // namespace testutil
