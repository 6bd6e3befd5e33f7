#include "bezgw/degree.hpp"

#include "bezgw/bezforms.hpp"
#include "bezgw/residue.hpp"

namespace bezgw {

namespace {

int sign_at_infinity(const Polynomial& p, bool positive_end) {
    if (p.is_zero()) return 0;
    int s = p.leading().sign();
    if (!positive_end && p.degree() % 2) s = -s;
    return s;
}

int variations_at_infinity(const std::vector<Polynomial>& chain, bool positive_end) {
    int v = 0, last = 0;
    for (auto& p : chain) {
        int s = sign_at_infinity(p, positive_end);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// ind(g/f) by the signed remainder sequence f, g, -rem(f, g), ...
int sturm_index(const Polynomial& f, const Polynomial& g) {
    if (f.degree() < 1) return 0;
    std::vector<Polynomial> chain{f};
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        chain.push_back(b);
        Polynomial r = -divmod(a, b).second;
        a = b;
        b = r;
    }
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

}  // namespace

LocalIndex local_cauchy_index(const Polynomial& f, const Polynomial& g,
                              const FieldElement& r) {
    if (!f.field().ordered()) throw Error("no ordering");
    if (!f(r).is_zero()) return {0, true};
    Polynomial lin(f.field_ptr(), std::vector<FieldElement>{-r, f.field().one()});
    Polynomial u = f;
    unsigned m = 0;
    while (u(r).is_zero()) {
        u = divmod(u, lin).first;
        ++m;
    }
    if (g(r).is_zero()) throw Error("fraction is not in lowest terms at r");
    if (m % 2 == 0) return {0, false};
    return {(g(r) / u(r)).sign(), false};
}

int global_cauchy_index(const Polynomial& f, const Polynomial& g) {
    if (!f.field().ordered()) throw Error("no ordering");
    if (f.is_zero()) throw Error("Cauchy index requires nonzero denominator");
    int direct = sturm_index(f, g);
    // second route: split off the rational poles and recurse on the rest
    RationalRoots rr = field_roots(f);
    if (!rr.roots.empty() && f.field().kind() == Field::Kind::Rationals) {
        FieldPtr k = f.field_ptr();
        Polynomial v = Polynomial::constant(k->one());
        for (auto& [r, m] : rr.roots) {
            Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
            for (unsigned i = 0; i < m; ++i) v = v * lin;
        }
        Polynomial w = divmod(f, v).first;  // nonsplit part (times lc)
        int total = 0;
        bool ok = true;
        if (w.degree() == 0) {
            for (auto& [r, m] : rr.roots) total += local_cauchy_index(f, g, r).index;
        } else {
            auto [d, a, b] = xgcd(v, w);
            if (d.degree() != 0 || gcd(f, g).degree() > 0) {
                ok = false;  // repeated irrational interaction or common factor
            } else {
                // g/f = (g b)/v + (g a)/w up to the constant d
                FieldElement dinv = d.coeff(0).inverse();
                Polynomial gv = divmod(g * b * dinv, v).second;
                Polynomial gw = divmod(g * a * dinv, w).second;
                for (auto& [r, m] : rr.roots) total += local_cauchy_index(v, gv, r).index;
                total += sturm_index(w, gw);
            }
        }
        if (ok && total != direct) throw Error("Cauchy index routes disagree");
    }
    return direct;
}

int topological_degree(const PointedRationalFunction& F) {
    int ind = global_cauchy_index(F.f(), F.g());
    auto inv = invariants(bezout_matrix(F));
    if (!inv.signature || *inv.signature != ind)
        throw Error("Hurwitz identity failed: index != signature");
    return ind;
}

GWClass local_a1_degree(const PointedRationalFunction& F, const FieldElement& r, unsigned m) {
    FieldPtr k = F.field_ptr();
    if (m < 1) throw Error("multiplicity must be positive");
    Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
    Polynomial pw = Polynomial::constant(k->one());
    for (unsigned i = 0; i < m; ++i) pw = pw * lin;
    auto [h, rem] = divmod(F.f(), pw);
    if (!rem.is_zero()) throw Error("r is not a root of multiplicity m");
    if (h(r).is_zero()) throw Error("multiplicity m does not exhaust the root");
    // local expansion of g/f: with s = x - r, the principal part coefficients
    // come from the series of g(s+r)/h(s+r) mod s^m; A(j) is the s^{m-j} one
    Polynomial shift(k, std::vector<FieldElement>{r, k->one()});
    Polynomial hs = h(shift), gs = F.g()(shift);
    std::vector<FieldElement> inv(m, k->zero());
    FieldElement c0 = hs.coeff(0).inverse();
    inv[0] = c0;
    for (unsigned t = 1; t < m; ++t) {
        FieldElement acc = k->zero();
        for (unsigned i = 1; i <= t; ++i) acc += hs.coeff(i) * inv[t - i];
        inv[t] = -c0 * acc;
    }
    std::vector<FieldElement> series(m, k->zero());
    for (unsigned t = 0; t < m; ++t)
        for (unsigned i = 0; i <= t; ++i) series[t] += gs.coeff(i) * inv[t - i];
    std::vector<FieldElement> a(m);
    for (unsigned j = 1; j <= m; ++j) a[j - 1] = series[m - j];
    GWClass cls = antitriangular_hankel_class(a);
    // the restricted residue pairing must produce the same class data
    auto ci = invariants(cls), gi = invariants(local_gram(F, r, m));
    auto ratio = ci.discriminant.representative * gi.discriminant.representative;
    auto sq = k->is_square(ratio.rep());
    if (ci.rank != gi.rank || (sq && !*sq) || ci.signature != gi.signature ||
        ci.hasse_witt != gi.hasse_witt)
        throw Error("local degree disagrees with the restricted pairing");
    return cls;
}

namespace {

GWClass bezout_class(const PointedRationalFunction& F) {
    return gw_class(bezout_matrix(F));
}

DegreeSumReport degree_sum_report(const PointedRationalFunction& F, const SplitData& sd) {
    DegreeSumReport rep;
    rep.global_class = bezout_class(F);
    GWClass sum{F.field_ptr(), {}, 0};
    for (auto& [r, m] : sd.roots) sum = sum + local_a1_degree(F, r, m);
    rep.local_sum = sum;
    rep.global_invariants = invariants(rep.global_class);
    rep.local_invariants = invariants(rep.local_sum);
    Tri eq = gw_equal(rep.global_class, rep.local_sum);
    bool invariants_agree =
        rep.global_invariants.rank == rep.local_invariants.rank &&
        rep.global_invariants.signature == rep.local_invariants.signature &&
        rep.global_invariants.hasse_witt == rep.local_invariants.hasse_witt;
    if (invariants_agree) {
        auto ratio = rep.global_invariants.discriminant.representative *
                     rep.local_invariants.discriminant.representative;
        auto sq = F.field().is_square(ratio.rep());
        invariants_agree = !(sq && !*sq);
    }
    rep.pass = eq != Tri::False && invariants_agree;
    return rep;
}

}  // namespace

GWClass a1_degree(const PointedRationalFunction& F) {
    GWClass cls = bezout_class(F);
    RationalRoots rr = field_roots(F.f());
    if (rr.remainder.degree() == 0) {
        auto rep = degree_sum_report(F, partial_fractions(F.f(), F.g(), rr.roots));
        if (!rep.pass) throw Error("degree-sum identity failed");
    }
    return cls;
}

DegreeSumReport degree_sum_check(const PointedRationalFunction& F, const SplitData& sd) {
    if (sd.total_multiplicity() != F.mu()) throw Error("requires split roots");
    return degree_sum_report(F, sd);
}

UnstableClass unstable_class(const PointedRationalFunction& F) {
    FieldElement d = bezout_matrix(F).det();
    long mu = (long)F.mu();
    FieldElement expect = resultant(F.f(), F.g());
    if ((mu * (mu - 1) / 2) % 2) expect = -expect;
    if (d != expect) throw Error("d != (-1)^{mu(mu-1)/2} Res(f, g)");
    RationalRoots rr = field_roots(F.f());
    bool simple_split = rr.remainder.degree() == 0;
    for (auto& [r, m] : rr.roots)
        if (m != 1) simple_split = false;
    if (simple_split) {
        Polynomial fp = F.f().derivative();
        FieldElement prod = discriminant(F.f());
        for (auto& [r, m] : rr.roots) prod *= F.g()(r) / fp(r);
        if (d != prod) throw Error("d != Disc(f) * prod g(r)/f'(r)");
    }
    UnstableClass u{a1_degree(F), d};
    if (!(square_class(d) == invariants(u.w).discriminant))
        throw Error("square class of d is not the discriminant of w");
    return u;
}

bool galois_conjugation_check(const PointedRationalFunction& F, const SplitData& sd) {
    Matrix nw = newton_matrix(F, sd);
    const Field& k = F.field();
    size_t n = sd.roots.size();
    // pair each root with its conjugate
    std::vector<size_t> pair(n, n);
    std::vector<size_t> offset(n, 0);
    size_t off = 0;
    for (size_t i = 0; i < n; ++i) {
        offset[i] = off;
        off += sd.roots[i].second;
    }
    for (size_t i = 0; i < n; ++i) {
        auto cr = k.conjugate(sd.roots[i].first);
        if (!cr) return false;  // no conjugation on this field
        for (size_t j = 0; j < n; ++j)
            if (sd.roots[j].first == *cr && sd.roots[j].second == sd.roots[i].second)
                pair[i] = j;
        if (pair[i] == n) return false;  // roots not closed under conjugation
    }
    size_t mu = F.mu();
    Matrix p(F.field_ptr(), mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) p.at(i, j) = k.zero();
    for (size_t i = 0; i < n; ++i)
        for (unsigned t = 0; t < sd.roots[i].second; ++t)
            p.at(offset[i] + t, offset[pair[i]] + t) = k.one();
    Matrix conj(F.field_ptr(), mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) conj.at(i, j) = *k.conjugate(nw.at(i, j));
    return conj == p.transpose() * nw * p;
}

}  // namespace bezgw
