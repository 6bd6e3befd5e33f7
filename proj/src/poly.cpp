#include "bezgw/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bezgw/arith.hpp"
#include "bezgw/matrix.hpp"

namespace bezgw {

namespace {

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial::Polynomial(FieldPtr field, std::initializer_list<long> coeffs) : field_(field) {
    for (long c : coeffs) coeffs_.push_back(field_->from_int(c));
    trim(coeffs_);
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.field_ptr(), std::vector<FieldElement>{c});
}

Polynomial Polynomial::x(FieldPtr field) {
    return Polynomial(field, std::vector<FieldElement>{field->zero(), field->one()});
}

FieldElement Polynomial::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

FieldElement Polynomial::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
    FieldElement r = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

Polynomial Polynomial::operator()(const Polynomial& inner) const {
    Polynomial r(field_);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * inner + constant(coeffs_[i]);
    return r;
}

Polynomial Polynomial::derivative() const {
    std::vector<FieldElement> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * field_->from_int((long)i));
    return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::shift(size_t k) const {
    if (is_zero()) return *this;
    std::vector<FieldElement> c(k, field_->zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(field_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> c = coeffs_;
    for (auto& v : c) v = -v;
    return Polynomial(field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
    std::vector<FieldElement> r = coeffs_;
    for (auto& v : r) v *= c;
    return Polynomial(field_, std::move(r));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].str();
        bool negated = false;
        if (!first && c.size() > 1 && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            c = c.substr(1);
        }
        os << (first ? "" : negated ? " - " : " + ");
        first = false;
        bool needs_paren = c.find_first_of("+-", 1) != std::string::npos;
        if (i == 0) {
            os << (needs_paren ? "(" + c + ")" : c);
        } else {
            if (c != "1") os << (needs_paren ? "(" + c + ")" : c) << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    FieldPtr k = a.field_ptr();
    std::vector<FieldElement> rem = a.coefficients();
    long db = b.degree();
    long dq = a.degree() - db;
    if (dq < 0) return {Polynomial(k), a};
    std::vector<FieldElement> q((size_t)dq + 1, k->zero());
    FieldElement linv = b.leading().inverse();
    trim(rem);
    while ((long)rem.size() - 1 >= db) {
        size_t shift = rem.size() - 1 - (size_t)db;
        FieldElement c = rem.back() * linv;
        q[shift] = c;
        for (long i = 0; i <= db; ++i) rem[shift + (size_t)i] -= c * b.coeff((size_t)i);
        trim(rem);
    }
    return {Polynomial(k, std::move(q)), Polynomial(k, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r = divmod(r0, r1).second;
        r0 = r1;
        r1 = r;
    }
    return r0.is_zero() ? r0 : r0.monic();
}

XgcdResult xgcd(const Polynomial& a, const Polynomial& b) {
    FieldPtr k = a.field_ptr();
    if (a.is_zero() && b.is_zero()) throw Error("xgcd(0, 0) undefined");
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(k->one()), s1(k);
    Polynomial t0(k), t1 = Polynomial::constant(k->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    FieldElement c = r0.leading().inverse();
    return {r0 * c, s0 * c, t0 * c};
}

FieldElement resultant(const Polynomial& f, const Polynomial& g) {
    FieldPtr k = f.field_ptr();
    if (f.is_zero()) throw Error("resultant requires nonzero f");
    if (g.is_zero()) return f.degree() > 0 ? k->zero() : k->one();
    // Euclidean remainder sequence with the standard transformation rule
    Polynomial a = f, b = g;
    FieldElement acc = k->one();
    while (b.degree() > 0) {
        Polynomial r = divmod(a, b).second;
        long da = a.degree(), db = b.degree();
        long dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return k->zero();
        // Res(a,b) = (-1)^{da*db} lc(b)^{da-dr} Res(b,r)
        FieldElement sgn = ((da * db) % 2) ? -k->one() : k->one();
        acc *= sgn * b.leading().pow(da - dr);
        a = b;
        b = r;
    }
    // b constant: Res(a, c) = c^{deg a}
    return acc * b.leading().pow(a.degree());
}

FieldElement discriminant(const Polynomial& f) {
    if (f.degree() < 1) throw Error("discriminant requires deg f >= 1");
    long mu = f.degree();
    FieldElement res = resultant(f, f.derivative());
    FieldElement sign = ((mu * (mu - 1) / 2) % 2) ? -f.field().one() : f.field().one();
    return sign * res / f.leading();
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n) {
    std::vector<mpz_class> ds{1};
    if (n == 0) return ds;
    for (auto& [p, e] : factor_integer(n)) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (auto& d : ds) next.push_back(d * pk);
            pk *= p;
        }
        ds = next;
    }
    return ds;
}

// deflate f by (x - r) as often as it divides; returns multiplicity
unsigned deflate(Polynomial& f, const FieldElement& r) {
    unsigned m = 0;
    Polynomial lin(f.field_ptr(), std::vector<FieldElement>{-r, f.field().one()});
    while (!f.is_zero() && f(r).is_zero()) {
        auto [q, rem] = divmod(f, lin);
        f = q;
        ++m;
    }
    return m;
}

}  // namespace

RationalRoots field_roots(const Polynomial& f) {
    FieldPtr k = f.field_ptr();
    if (f.is_zero()) throw Error("field_roots requires nonzero f");
    RationalRoots out{{}, f};
    switch (k->kind()) {
        case Field::Kind::Rationals: {
            Polynomial w = f;
            unsigned m0 = deflate(w, k->zero());
            if (m0) out.roots.push_back({k->zero(), m0});
            if (w.degree() >= 1) {
                // integer normalization: candidates p/q, p | a0, q | lc
                mpz_class den = 1;
                for (auto& c : w.coefficients())
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rep()[0].get_den().get_mpz_t());
                mpz_class a0 = mpz_class(w.coeff(0).rep()[0] * mpq_class(den));
                mpz_class lc = mpz_class(w.leading().rep()[0] * mpq_class(den));
                for (auto& p : divisors_of(a0)) {
                    for (auto& q : divisors_of(lc)) {
                        for (int s : {1, -1}) {
                            mpq_class cand(s * p, q);
                            cand.canonicalize();
                            FieldElement r = k->element(cand);
                            unsigned m = deflate(w, r);
                            if (m) out.roots.push_back({r, m});
                        }
                    }
                }
            }
            out.remainder = w.monic();
            break;
        }
        case Field::Kind::Prime: {
            mpz_class p = k->characteristic();
            if (p > 1000000) throw Error("root search over large prime fields not supported");
            Polynomial w = f;
            for (mpz_class r = 0; r < p && w.degree() >= 1; ++r) {
                FieldElement e = k->element(mpq_class(r));
                unsigned m = deflate(w, e);
                if (m) out.roots.push_back({e, m});
            }
            out.remainder = w.monic();
            break;
        }
        case Field::Kind::Extension: {
            Polynomial w = f;
            // coefficients from the base field: search there and lift the roots
            FieldPtr base = k->base_field();
            std::vector<FieldElement> bc;
            bool in_base = true;
            for (long i = 0; i <= w.degree(); ++i) {
                Rep r = w.coeff(i).rep();
                while (!r.empty() && r.back() == 0) r.pop_back();
                if (r.size() > 1) {
                    in_base = false;
                    break;
                }
                bc.push_back(base->element(r.empty() ? mpq_class(0) : r[0]));
            }
            if (in_base && w.degree() >= 1) {
                try {
                    for (auto& [r, m0] : field_roots(Polynomial(base, bc)).roots) {
                        FieldElement lifted = k->element(Rep{r.rep()[0]});
                        unsigned m = deflate(w, lifted);
                        if (m) out.roots.push_back({lifted, m});
                    }
                } catch (const Error&) {
                    // base search unavailable; fall through to the direct factors
                }
            }
            // peel off linear factors and quadratics solved by a field square root
            while (w.degree() >= 1) {
                long before = w.degree();
                if (w.degree() == 1) {
                    FieldElement r = -w.coeff(0) / w.coeff(1);
                    unsigned m = deflate(w, r);
                    out.roots.push_back({r, m});
                } else if (w.degree() == 2) {
                    FieldElement a2 = w.coeff(2), b = w.coeff(1), c = w.coeff(0);
                    FieldElement disc = b * b - k->from_int(4) * a2 * c;
                    auto sq = k->sqrt(disc.rep());
                    if (!sq) break;
                    FieldElement s(k, *sq), two_a = k->from_int(2) * a2;
                    for (const FieldElement& r : {(-b + s) / two_a, (-b - s) / two_a}) {
                        unsigned m = deflate(w, r);
                        if (m) out.roots.push_back({r, m});
                    }
                } else {
                    break;
                }
                if (w.degree() == before) break;
            }
            out.remainder = w.monic();
            break;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first.rep() < b.first.rep(); });
    return out;
}

std::vector<FieldElement> reciprocal_series(const Polynomial& f, const Polynomial& g,
                                            size_t count) {
    if (!f.is_monic() || f.degree() <= g.degree())
        throw Error("reciprocal_series requires f monic with deg f > deg g");
    size_t mu = (size_t)f.degree();
    // f * (sum s_b x^{-b}) = g  =>  s_b = g_{mu-b} - sum_{k>=1} a_k s_{b-k}
    // with a_k the coefficient of x^{mu-k} in f.
    std::vector<FieldElement> s;
    for (size_t b = 1; b <= count; ++b) {
        FieldElement v = (mu >= b) ? g.coeff(mu - b) : f.field().zero();
        for (size_t k = 1; k <= std::min(b - 1, mu); ++k) v -= f.coeff(mu - k) * s[b - 1 - k];
        s.push_back(v);
    }
    return s;
}

SplitData partial_fractions(const Polynomial& f, const Polynomial& g,
                            const std::vector<std::pair<FieldElement, unsigned>>& roots) {
    FieldPtr k = f.field_ptr();
    if (f.degree() < 1) throw Error("partial_fractions requires deg f >= 1");
    size_t mu = (size_t)f.degree();
    // the roots must factor f exactly
    Polynomial prod = Polynomial::constant(f.leading());
    for (auto& [r, m] : roots) {
        Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
        for (unsigned i = 0; i < m; ++i) prod = prod * lin;
    }
    if (prod != f) throw Error("split data inconsistent");
    // g = sum_{i,j} A_i(j) * f / (x - r_i)^j, solved as a mu-by-mu linear system
    Matrix sys(k, mu, mu);
    size_t col = 0;
    std::vector<Polynomial> numerators;
    for (auto& [r, m] : roots) {
        Polynomial lin(k, std::vector<FieldElement>{-r, k->one()});
        Polynomial q = f;
        for (unsigned j = 1; j <= m; ++j) {
            q = divmod(q, lin).first;
            for (size_t row = 0; row < mu; ++row) sys.at(row, col) = q.coeff(row);
            numerators.push_back(q);
            ++col;
        }
    }
    std::vector<FieldElement> rhs;
    for (size_t row = 0; row < mu; ++row) rhs.push_back(g.coeff(row));
    std::vector<FieldElement> sol = sys.solve(rhs);
    SplitData sd;
    sd.roots = roots;
    size_t idx = 0;
    Polynomial recombined(k);
    for (auto& [r, m] : roots) {
        std::vector<FieldElement> as;
        for (unsigned j = 1; j <= m; ++j) {
            as.push_back(sol[idx]);
            recombined = recombined + numerators[idx] * sol[idx];
            ++idx;
        }
        if (as.back().is_zero())
            throw Error("partial fractions: A_i(mu_i) vanishes (f and g share a root)");
        sd.pf_coefficients.push_back(std::move(as));
    }
    if (recombined != g) throw Error("partial fractions recombination failed");
    return sd;
}

}  // namespace bezgw
