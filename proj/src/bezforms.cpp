#include "bezgw/bezforms.hpp"

namespace bezgw {

namespace {

FieldElement binom(const FieldPtr& k, unsigned long n, unsigned long r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return k->element(mpq_class(b));
}

void require_symmetric_nondegenerate(const Matrix& m, const char* what) {
    if (!m.symmetric()) throw Error(std::string(what) + " is not symmetric");
    if (m.det().is_zero()) throw Error(std::string(what) + " is degenerate");
}

// the split data must factor f exactly (partial_fractions checked this at
// construction, but sd and F travel separately)
void require_consistent(const PointedRationalFunction& F, const SplitData& sd) {
    FieldPtr k = F.field_ptr();
    Polynomial prod = Polynomial::constant(k->one());
    for (auto& [r, m] : sd.roots) {
        Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
        for (unsigned i = 0; i < m; ++i) prod = prod * lin;
    }
    if (prod != F.f() || sd.pf_coefficients.size() != sd.roots.size())
        throw Error("split data inconsistent");
    for (size_t i = 0; i < sd.roots.size(); ++i)
        if (sd.pf_coefficients[i].size() != sd.roots[i].second)
            throw Error("split data inconsistent");
}

Matrix hankel_from(const FieldPtr& k, const std::vector<FieldElement>& seq, size_t mu) {
    Matrix h(k, mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) h.at(i, j) = seq[i + j];
    return h;
}

}  // namespace

Matrix bezout_matrix(const PointedRationalFunction& F) {
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    const Polynomial &f = F.f(), &g = F.g();
    // H(x, y) = f(x)g(y) - f(y)g(x), stored as x-power -> polynomial in y
    std::vector<Polynomial> h;
    for (size_t a = 0; a <= mu; ++a) h.push_back(g * f.coeff(a) - f * g.coeff(a));
    // synthetic division by (x - y): quotient coefficients in x, remainder 0
    std::vector<Polynomial> q(mu, Polynomial(k));
    Polynomial carry(k);  // y * (previous quotient coefficient)
    for (size_t a = mu; a-- > 0;) {
        q[a] = h[a + 1] + carry;
        carry = q[a].shift(1);  // multiply by y
    }
    if (h[0] + carry != Polynomial(k)) throw Error("Bezout division is not exact");
    Matrix b(k, mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) b.at(i, j) = q[i].coeff(j);
    require_symmetric_nondegenerate(b, "Bezout matrix");
    return b;
}

Matrix hankel_matrix(const PointedRationalFunction& F) {
    size_t mu = F.mu();
    auto s = reciprocal_series(F, 2 * mu - 1);
    Matrix m = hankel_from(F.field_ptr(), s, mu);
    require_symmetric_nondegenerate(m, "Hankel matrix");
    return m;
}

Matrix newton_matrix(const PointedRationalFunction& F, const SplitData& sd) {
    require_consistent(F, sd);
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    Matrix out(k, mu, mu);
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < mu; ++j) out.at(i, j) = k->zero();
    size_t off = 0;
    for (size_t i = 0; i < sd.roots.size(); ++i) {
        unsigned m = sd.roots[i].second;
        const auto& a = sd.pf_coefficients[i];
        if (a[m - 1].is_zero()) throw Error("Newton block has vanishing anti-diagonal");
        for (unsigned p = 0; p < m; ++p)
            for (unsigned q = 0; q < m; ++q)
                if (p + q < m) out.at(off + p, off + q) = a[p + q];
        off += m;
    }
    require_symmetric_nondegenerate(out, "Newton matrix");
    return out;
}

Matrix vandermonde_matrix(const PointedRationalFunction& F, const SplitData& sd) {
    require_consistent(F, sd);
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    std::vector<FieldElement> sigma;
    for (size_t b = 1; b <= 2 * mu - 1; ++b) {
        FieldElement v = k->zero();
        for (size_t i = 0; i < sd.roots.size(); ++i) {
            const FieldElement& r = sd.roots[i].first;
            FieldElement gr = F.g()(r);
            FieldElement w = (gr * gr).inverse();
            for (unsigned j = 1; j <= sd.roots[i].second; ++j) {
                if (b < j) continue;  // binomial vanishes
                v += sd.pf_coefficients[i][j - 1] * w * binom(k, b - 1, j - 1) *
                     r.pow((long)(b - j));
            }
        }
        sigma.push_back(v);
    }
    Matrix m = hankel_from(k, sigma, mu);
    require_symmetric_nondegenerate(m, "Vandermonde matrix");
    return m;
}

namespace {

// L(i, j) = a_{mu + 1 - i - j} (1-based) with a_0 = 1, a_k = coeff of
// x^{mu-k} in f, and a vanishing for negative index
Matrix l_matrix(const PointedRationalFunction& F) {
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    Matrix L(k, mu, mu);
    for (size_t i = 1; i <= mu; ++i)
        for (size_t j = 1; j <= mu; ++j) {
            long idx = (long)mu + 1 - (long)i - (long)j;
            L.at(i - 1, j - 1) = idx < 0 ? k->zero() : F.f().coeff(mu - (size_t)idx);
        }
    FieldElement dl = L.det();
    if (!dl.is_one() && !(-dl).is_one()) throw Error("det L is not a unit sign");
    return L;
}

}  // namespace

TransitionMatrices transition_matrices(const PointedRationalFunction& F, const SplitData& sd) {
    require_consistent(F, sd);
    FieldPtr k = F.field_ptr();
    size_t mu = F.mu();
    const Polynomial& f = F.f();

    Matrix L = l_matrix(F);

    // M: one column per (root, power); both the quotient recursion and direct
    // division must produce the same coefficients
    Matrix M(k, mu, mu);
    size_t col = 0;
    for (auto& [r, m] : sd.roots) {
        Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
        Polynomial q = f, direct = f, pw = Polynomial::constant(k->one());
        for (unsigned j = 1; j <= m; ++j) {
            auto [qq, rem] = divmod(q, lin);
            if (!rem.is_zero()) throw Error("split data inconsistent");
            q = qq;
            pw = pw * lin;
            auto [dq, drem] = divmod(f, pw);
            if (!drem.is_zero() || dq != q) throw Error("quotient recursion mismatch");
            for (size_t row = 0; row < mu; ++row) M.at(row, col) = q.coeff(row);
            ++col;
        }
    }

    // assembled confluent Vandermonde block row [V_1 ... V_n] = N0^{-1}
    Matrix n0inv(k, mu, mu);
    col = 0;
    for (auto& [r, m] : sd.roots) {
        FieldElement ginv = F.g()(r).inverse();
        for (unsigned j = 1; j <= m; ++j) {
            for (size_t i = 1; i <= mu; ++i)
                n0inv.at(i - 1, col) = (i < j) ? k->zero()
                                               : binom(k, i - 1, j - 1) *
                                                     r.pow((long)(i - j)) * ginv;
            ++col;
        }
    }
    Matrix N0 = n0inv.inverse();
    return {L, M, M * N0, N0};
}

CongruenceReport verify_congruences(const PointedRationalFunction& F,
                                    const std::optional<SplitData>& sd) {
    CongruenceReport rep;
    Matrix bez = bezout_matrix(F);
    auto check = [&](const std::string& name, const Matrix& lhs) {
        for (size_t i = 0; i < bez.rows(); ++i)
            for (size_t j = 0; j < bez.cols(); ++j)
                if (lhs.at(i, j) != bez.at(i, j)) {
                    rep.items.push_back({name, false,
                                         "entry (" + std::to_string(i + 1) + ", " +
                                             std::to_string(j + 1) + "): " +
                                             lhs.at(i, j).str() + " != " + bez.at(i, j).str()});
                    return;
                }
        rep.items.push_back({name, true, ""});
    };
    Matrix s = hankel_matrix(F);
    Matrix L = l_matrix(F);
    check("L", L * s * L.transpose());
    if (sd) {
        auto tm = transition_matrices(F, *sd);
        check("M", tm.M * newton_matrix(F, *sd) * tm.M.transpose());
        check("N", tm.N * vandermonde_matrix(F, *sd) * tm.N.transpose());
    }
    return rep;
}

}  // namespace bezgw
