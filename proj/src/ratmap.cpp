#include "bezgw/ratmap.hpp"

namespace bezgw {

PointedRationalFunction PointedRationalFunction::normalize(const Polynomial& f_raw,
                                                           const Polynomial& g_raw) {
    if (f_raw.is_zero() && g_raw.is_zero()) throw Error("0/0 is not a rational function");
    if (f_raw.is_zero()) throw Error("not pointed at infinity");
    if (g_raw.is_zero()) throw Error("constant map is not pointed");  // f/0 = infinity
    Polynomial f = f_raw, g = g_raw;
    {
        Polynomial d = gcd(f, g);
        if (d.degree() > 0) {
            f = divmod(f, d).first;
            g = divmod(g, d).first;
        }
    }
    if (f.degree() <= g.degree()) throw Error("not pointed at infinity");
    if (f.degree() < 1) throw Error("constant map is not pointed");
    // scale both by the same unit so the map is unchanged and f is monic
    FieldElement u = f.leading().inverse();
    return {f * u, g * u};
}

std::string PointedRationalFunction::str() const {
    if (g_.degree() < 1 && !g_.is_zero() && g_.coeff(0).is_one()) return f_.str();
    std::string gs = g_.str();
    if (g_.degree() >= 1) gs = "(" + gs + ")";
    return "(" + f_.str() + ")/" + gs;
}

PointedRationalFunction compose(const PointedRationalFunction& F,
                                const PointedRationalFunction& G) {
    // F o G = sum f_i p^i q^{mu-i} / sum g_i p^i q^{mu-i} for G = p/q, mu = deg f
    const Polynomial &p = G.f(), &q = G.g();
    size_t mu = F.mu();
    FieldPtr k = F.field_ptr();
    auto homogenize = [&](const Polynomial& h) {
        Polynomial acc(k);
        Polynomial qpow = Polynomial::constant(k->one());
        std::vector<Polynomial> qpows;
        for (size_t i = 0; i <= mu; ++i) {
            qpows.push_back(qpow);
            qpow = qpow * q;
        }
        Polynomial ppow = Polynomial::constant(k->one());
        for (size_t i = 0; i <= mu; ++i) {
            if (!h.coeff(i).is_zero()) acc = acc + ppow * qpows[mu - i] * h.coeff(i);
            ppow = ppow * p;
        }
        return acc;
    };
    return PointedRationalFunction::normalize(homogenize(F.f()), homogenize(F.g()));
}

std::vector<FieldElement> reciprocal_series(const PointedRationalFunction& F, size_t count) {
    return reciprocal_series(F.f(), F.g(), count);
}

SplitData split_data(const PointedRationalFunction& F,
                     const std::vector<std::pair<FieldElement, unsigned>>& roots) {
    return partial_fractions(F.f(), F.g(), roots);
}

SplitData split_data(const PointedRationalFunction& F) {
    RationalRoots rr = field_roots(F.f());
    if (rr.remainder.degree() > 0)
        throw Error("f does not split over " + F.field().descriptor() +
                    "; nonsplit factor: " + rr.remainder.str());
    return partial_fractions(F.f(), F.g(), rr.roots);
}

}  // namespace bezgw
