#include "bezgw/residue.hpp"

namespace bezgw {

FAlgebra::FAlgebra(PointedRationalFunction F) : f_(std::move(F)), ginv_(f_.field_ptr()) {
    auto [d, u, v] = xgcd(f_.g(), f_.f());
    if (d.degree() != 0) throw Error("g is not a unit mod f");
    ginv_ = reduce(u * d.coeff(0).inverse());
}

Polynomial FAlgebra::reduce(const Polynomial& p) const { return divmod(p, f_.f()).second; }

Polynomial FAlgebra::mul(const Polynomial& a, const Polynomial& b) const {
    return reduce(a * b);
}

NamedBasis basis_vectors(const PointedRationalFunction& F, BasisKind which,
                         const std::optional<SplitData>& sd) {
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    NamedBasis out{which, {}, Matrix(k, mu, mu)};
    switch (which) {
        case BasisKind::Monomial:
            for (size_t i = 0; i < mu; ++i)
                out.vectors.push_back(Polynomial::constant(k->one()).shift(i));
            break;
        case BasisKind::Horner: {
            // h_i = x^{mu-i} + a_1 x^{mu-i-1} + ... + a_{mu-i}: the upper
            // coefficients of f shifted down by i
            for (size_t i = 1; i <= mu; ++i) {
                std::vector<FieldElement> c;
                for (size_t j = 0; j + i <= mu; ++j) c.push_back(F.f().coeff(i + j));
                out.vectors.push_back(Polynomial(k, std::move(c)));
            }
            break;
        }
        case BasisKind::Newton: {
            if (!sd) throw Error("Newton basis requires split data");
            for (auto& [r, m] : sd->roots) {
                Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
                Polynomial q = F.f();
                for (unsigned j = 1; j <= m; ++j) {
                    q = divmod(q, lin).first;
                    out.vectors.push_back(q);
                }
            }
            break;
        }
        case BasisKind::Vandermonde: {
            if (!sd) throw Error("Vandermonde basis requires split data");
            Matrix n = transition_matrices(F, *sd).N;
            for (size_t col = 0; col < mu; ++col) {
                std::vector<FieldElement> c;
                for (size_t row = 0; row < mu; ++row) c.push_back(n.at(row, col));
                out.vectors.push_back(Polynomial(k, std::move(c)));
            }
            break;
        }
    }
    for (size_t col = 0; col < mu; ++col)
        for (size_t row = 0; row < mu; ++row)
            out.coordinates.at(row, col) = out.vectors[col].coeff(row);
    if (out.coordinates.det().is_zero()) throw Error("basis vectors are dependent");
    return out;
}

Matrix delta_coefficients(const PointedRationalFunction& F) {
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    const Polynomial &f = F.f(), &g = F.g();
    Matrix d(k, mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) {
            FieldElement v = k->zero();
            for (size_t t = 0; t <= std::min(i, j); ++t)
                v += f.coeff(i + j + 1 - t) * g.coeff(t) - g.coeff(i + j + 1 - t) * f.coeff(t);
            d.at(i, j) = v;
        }
    if (d != bezout_matrix(F)) throw Error("Delta coefficients disagree with the Bezout matrix");
    return d;
}

ResiduePairing::ResiduePairing(PointedRationalFunction F)
    : alg_(std::move(F)), gram_(delta_coefficients(alg_.map()).inverse()) {}

std::vector<FieldElement> ResiduePairing::coords(const Polynomial& p) const {
    // p = sum c_i x^{i-1}/g  <=>  p*g = sum c_i x^{i-1} mod f
    Polynomial pg = alg_.mul(p, alg_.map().g());
    std::vector<FieldElement> c;
    for (size_t i = 0; i < alg_.map().mu(); ++i) c.push_back(pg.coeff(i));
    return c;
}

FieldElement ResiduePairing::beta(const Polynomial& a, const Polynomial& b) const {
    auto ca = coords(a), cb = coords(b);
    FieldElement v = alg_.map().field().zero();
    for (size_t i = 0; i < ca.size(); ++i)
        for (size_t j = 0; j < cb.size(); ++j) v += ca[i] * gram_.at(i, j) * cb[j];
    return v;
}

FieldElement ResiduePairing::eta(const Polynomial& p) const {
    return beta(p, Polynomial::constant(alg_.map().field().one()));
}

FieldElement eta_separable_oracle(const PointedRationalFunction& F, const Polynomial& p,
                                  const SplitData& sd) {
    for (auto& [r, m] : sd.roots)
        if (m != 1) throw Error("separable oracle requires simple roots");
    if (sd.total_multiplicity() != F.mu()) throw Error("split data inconsistent");
    Polynomial fp = F.f().derivative();
    FieldElement v = F.field().zero();
    for (auto& [r, m] : sd.roots) v += p(r) * F.g()(r) / fp(r);
    return v;
}

Matrix gram_matrix(const PointedRationalFunction& F, GramBasis which,
                   const std::optional<SplitData>& sd) {
    Matrix bez = bezout_matrix(F);
    if (which == GramBasis::MonomialPrimal) return bez.inverse();
    BasisKind kind;
    switch (which) {
        case GramBasis::DualMonomial: kind = BasisKind::Monomial; break;
        case GramBasis::DualHorner: kind = BasisKind::Horner; break;
        case GramBasis::DualNewton: kind = BasisKind::Newton; break;
        case GramBasis::DualVandermonde: kind = BasisKind::Vandermonde; break;
        default: throw Error("unreachable");
    }
    Matrix c = basis_vectors(F, kind, sd).coordinates;
    // Gram on the dual basis: C^{-1} Bez C^{-T}
    Matrix cinv = c.inverse();
    Matrix out = cinv * bez * cinv.transpose();
    // these are exactly the four classical matrices; keep that honest
    Matrix expect = bez;
    switch (which) {
        case GramBasis::DualMonomial: expect = bez; break;
        case GramBasis::DualHorner: expect = hankel_matrix(F); break;
        case GramBasis::DualNewton: expect = newton_matrix(F, *sd); break;
        case GramBasis::DualVandermonde: expect = vandermonde_matrix(F, *sd); break;
        default: break;
    }
    if (out != expect) throw Error("dual Gram matrix disagrees with the classical matrix");
    return out;
}

Matrix local_gram(const PointedRationalFunction& F, const FieldElement& r, unsigned m) {
    FieldPtr k = F.field_ptr();
    Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
    Polynomial pw = Polynomial::constant(k->one());
    for (unsigned i = 0; i < m; ++i) pw = pw * lin;
    auto [h, rem] = divmod(F.f(), pw);
    if (!rem.is_zero()) throw Error("r is not a root of multiplicity m");
    if (h(r).is_zero()) throw Error("multiplicity m does not exhaust the root");
    // idempotent: u pw + v h = 1  =>  e = v h is 1 on the local summand
    auto [d, u, v] = xgcd(pw, h);
    if (d.degree() != 0) throw Error("local factors are not coprime");
    ResiduePairing beta(F);
    FAlgebra alg(F);
    Polynomial e = alg.reduce(v * h * d.coeff(0).inverse());
    std::vector<Polynomial> basis;
    Polynomial cur = e;
    for (unsigned i = 0; i < m; ++i) {
        basis.push_back(cur);
        cur = alg.mul(cur, lin);
    }
    Matrix out(k, m, m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) out.at(i, j) = beta.beta(basis[i], basis[j]);
    return out;
}

}  // namespace bezgw
