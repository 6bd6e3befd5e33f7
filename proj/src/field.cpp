#include "bezgw/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bezgw/arith.hpp"
#include "bezgw/parse.hpp"
#include "bezgw/poly.hpp"

namespace bezgw {

namespace {

thread_local std::vector<std::string> g_warnings;

// ---- scalar helpers over a base field (Q or Fp); scalars are single mpq ----

using Scalar = mpq_class;
using SPoly = std::vector<Scalar>;  // ascending, trimmed

void strim(SPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// ---------------------------------------------------------------------------

FieldElement Field::zero() const { return {shared_from_this(), canon({mpq_class(0)})}; }
FieldElement Field::one() const { return {shared_from_this(), canon({mpq_class(1)})}; }
FieldElement Field::from_int(long v) const { return element(mpq_class(v)); }
FieldElement Field::element(const mpq_class& v) const { return {shared_from_this(), canon({v})}; }
FieldElement Field::element(Rep coeffs) const { return {shared_from_this(), canon(std::move(coeffs))}; }

int Field::sign(const Rep&) const { throw Error("no ordering"); }

std::optional<FieldElement> Field::conjugate(const FieldElement& a) const { return a; }

FieldElement FieldElement::pow(long e) const {
    FieldElement base = *this, acc = field_->one();
    bool invert = e < 0;
    unsigned long n = invert ? -(unsigned long)e : (unsigned long)e;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return invert ? acc.inverse() : acc;
}

SquareClass square_class(const FieldElement& a) {
    if (a.is_zero()) throw Error("square class of zero undefined");
    return {FieldElement(a.field_ptr(), a.field().square_class_rep(a.rep()))};
}

const std::vector<std::string>& field_construction_warnings() { return g_warnings; }

// ---------------------------------------------------------------------------

namespace {

class RationalField final : public Field {
  public:
    Kind kind() const override { return Kind::Rationals; }
    std::string descriptor() const override { return "Q"; }
    mpz_class characteristic() const override { return 0; }
    bool ordered() const override { return true; }

    Rep add(const Rep& a, const Rep& b) const override { return {a[0] + b[0]}; }
    Rep sub(const Rep& a, const Rep& b) const override { return {a[0] - b[0]}; }
    Rep mul(const Rep& a, const Rep& b) const override { return {a[0] * b[0]}; }
    Rep neg(const Rep& a) const override { return {-a[0]}; }
    Rep inv(const Rep& a) const override {
        if (a[0] == 0) throw Error("division by zero");
        return {1 / a[0]};
    }
    Rep canon(Rep a) const override {
        a.resize(1);
        a[0].canonicalize();
        return a;
    }
    bool is_zero(const Rep& a) const override { return a[0] == 0; }
    std::string str(const Rep& a) const override { return a[0].get_str(); }
    int sign(const Rep& a) const override { return sgn(a[0]); }

    Rep square_class_rep(const Rep& a) const override {
        return {mpq_class(squarefree_part(a[0].get_num() * a[0].get_den()))};
    }
    std::optional<bool> is_square(const Rep& a) const override {
        return a[0] > 0 && squarefree_part(a[0].get_num() * a[0].get_den()) == 1;
    }
    std::optional<Rep> sqrt(const Rep& a) const override {
        const mpq_class& v = a[0];
        if (v < 0) return std::nullopt;
        mpz_class n = v.get_num(), d = v.get_den(), rn, rd;
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rep{mpq_class(rn, rd)};
    }
};

class PrimeField final : public Field {
  public:
    explicit PrimeField(mpz_class p) : p_(std::move(p)) {
        if (p_ == 2) throw Error("characteristic 2 not supported");
        if (p_ < 2 || !is_probable_prime(p_)) throw Error("F<p> requires an odd prime p");
    }

    Kind kind() const override { return Kind::Prime; }
    std::string descriptor() const override { return "F" + p_.get_str(); }
    mpz_class characteristic() const override { return p_; }

    mpz_class modp(const mpq_class& q) const {
        mpz_class den_inv, r;
        if (mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), p_.get_mpz_t()) == 0)
            throw Error("denominator not invertible mod p");
        mpz_class n = q.get_num() * den_inv;
        mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
        return r;
    }

    Rep add(const Rep& a, const Rep& b) const override { return canon({a[0] + b[0]}); }
    Rep sub(const Rep& a, const Rep& b) const override { return canon({a[0] - b[0]}); }
    Rep mul(const Rep& a, const Rep& b) const override { return canon({a[0] * b[0]}); }
    Rep neg(const Rep& a) const override { return canon({-a[0]}); }
    Rep inv(const Rep& a) const override {
        if (a[0] == 0) throw Error("division by zero");
        mpz_class r;
        mpz_class n = a[0].get_num();
        mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
        return {mpq_class(r)};
    }
    Rep canon(Rep a) const override {
        a.resize(1);
        a[0].canonicalize();
        return {mpq_class(modp(a[0]))};
    }
    bool is_zero(const Rep& a) const override { return a[0] == 0; }
    std::string str(const Rep& a) const override { return a[0].get_str(); }

    Rep square_class_rep(const Rep& a) const override {
        if (legendre_symbol(a[0].get_num(), p_) == 1) return {mpq_class(1)};
        return {mpq_class(least_nonresidue())};
    }
    std::optional<bool> is_square(const Rep& a) const override {
        return legendre_symbol(a[0].get_num(), p_) == 1;
    }
    std::optional<Rep> sqrt(const Rep& a) const override {
        mpz_class n = a[0].get_num();
        if (n == 0) return Rep{mpq_class(0)};
        if (legendre_symbol(n, p_) != 1) return std::nullopt;
        // Tonelli-Shanks
        mpz_class q = p_ - 1;
        unsigned long s = 0;
        while (mpz_even_p(q.get_mpz_t())) {
            q /= 2;
            ++s;
        }
        auto powm = [&](const mpz_class& b, const mpz_class& e) {
            mpz_class r;
            mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
            return r;
        };
        if (s == 1) return Rep{mpq_class(powm(n, (p_ + 1) / 4))};
        mpz_class z = least_nonresidue();
        mpz_class c = powm(z, q);
        mpz_class t = powm(n, q);
        mpz_class r = powm(n, (q + 1) / 2);
        unsigned long m = s;
        while (t != 1) {
            mpz_class tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % p_;
                ++i;
            }
            mpz_class b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p_;
            r = r * b % p_;
            c = b * b % p_;
            t = t * c % p_;
            m = i;
        }
        return Rep{mpq_class(r)};
    }

    mpz_class least_nonresidue() const {
        for (mpz_class n = 2;; ++n)
            if (legendre_symbol(n, p_) == -1) return n;
    }

  private:
    mpz_class p_;
};

class ExtensionField final : public Field {
  public:
    ExtensionField(FieldPtr base, SPoly modulus, std::optional<IsolatingInterval> embedding)
        : base_(std::move(base)), m_(std::move(modulus)), embedding_(std::move(embedding)) {
        deg_ = m_.size() - 1;
        if (embedding_ && base_->kind() != Kind::Rationals)
            throw Error("isolating interval requires base field Q");
        if (embedding_) {
            int lo = sgn(seval(m_, embedding_->lo)), hi = sgn(seval(m_, embedding_->hi));
            if (lo == 0 || hi == 0 || lo == hi)
                throw Error("interval does not isolate a root of the modulus");
        }
    }

    Kind kind() const override { return Kind::Extension; }
    std::string descriptor() const override {
        std::string s = base_->descriptor() + "[t]/(";
        s += poly_str(m_);
        return s + ")";
    }
    mpz_class characteristic() const override { return base_->characteristic(); }
    bool ordered() const override { return embedding_.has_value(); }

    const Field& base() const { return *base_; }
    size_t degree() const { return deg_; }
    const SPoly& modulus() const { return m_; }

    // scalar ops delegate to the base field
    Scalar sadd(const Scalar& a, const Scalar& b) const { return base_->add({a}, {b})[0]; }
    Scalar ssub(const Scalar& a, const Scalar& b) const { return base_->sub({a}, {b})[0]; }
    Scalar smul(const Scalar& a, const Scalar& b) const { return base_->mul({a}, {b})[0]; }
    Scalar sneg(const Scalar& a) const { return base_->neg({a})[0]; }
    Scalar sinv(const Scalar& a) const { return base_->inv({a})[0]; }
    Scalar scanon(const Scalar& a) const { return base_->canon({a})[0]; }

    SPoly padd(const SPoly& a, const SPoly& b) const {
        SPoly r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = sadd(r[i], b[i]);
        strim(r);
        return r;
    }
    SPoly pneg(const SPoly& a) const {
        SPoly r = a;
        for (auto& c : r) c = sneg(c);
        return r;
    }
    SPoly pmul(const SPoly& a, const SPoly& b) const {
        if (a.empty() || b.empty()) return {};
        SPoly r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = sadd(r[i + j], smul(a[i], b[j]));
        strim(r);
        return r;
    }
    // remainder of a by the monic modulus
    SPoly pmod(SPoly a) const {
        while (a.size() > deg_) {
            Scalar lead = a.back();
            size_t shift = a.size() - 1 - deg_;
            for (size_t i = 0; i <= deg_; ++i)
                a[shift + i] = ssub(a[shift + i], smul(lead, m_[i]));
            strim(a);
        }
        return a;
    }
    // general divmod over the base field (b nonzero)
    std::pair<SPoly, SPoly> pdivmod(SPoly a, const SPoly& b) const {
        SPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
        Scalar linv = sinv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            Scalar c = smul(a.back(), linv);
            size_t shift = a.size() - b.size();
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ssub(a[shift + i], smul(c, b[i]));
            strim(a);
        }
        strim(q);
        return {q, a};
    }

    Rep add(const Rep& a, const Rep& b) const override { return fix(padd(a, b)); }
    Rep sub(const Rep& a, const Rep& b) const override { return fix(padd(a, pneg(b))); }
    Rep mul(const Rep& a, const Rep& b) const override {
        SPoly x = a, y = b;
        strim(x);
        strim(y);
        return fix(pmod(pmul(x, y)));
    }
    Rep neg(const Rep& a) const override { return fix(pneg(a)); }
    Rep inv(const Rep& a) const override {
        SPoly x = a;
        strim(x);
        if (x.empty()) throw Error("division by zero");
        // extended Euclid against the modulus
        SPoly r0 = m_, r1 = x, s0 = {}, s1 = {Scalar(1)};
        while (!r1.empty()) {
            auto [q, r] = pdivmod(r0, r1);
            SPoly s2 = padd(s0, pneg(pmul(q, s1)));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd, a unit since the modulus is irreducible
        Scalar c = sinv(r0[0]);
        for (auto& v : s0) v = smul(v, c);
        return fix(pmod(s0));
    }
    Rep canon(Rep a) const override {
        for (auto& c : a) c = scanon(c);
        strim(a);
        return fix(pmod(std::move(a)));
    }
    bool is_zero(const Rep& a) const override { return a.size() == 1 && a[0] == 0; }
    std::string str(const Rep& a) const override {
        SPoly x = a;
        strim(x);
        return poly_str(x);
    }

    int sign(const Rep& a) const override;

    Rep square_class_rep(const Rep& a) const override;
    std::optional<bool> is_square(const Rep& a) const override;
    std::optional<Rep> sqrt(const Rep& a) const override;

    FieldPtr base_field() const override { return base_; }

    std::optional<FieldElement> conjugate(const FieldElement& a) const override {
        for (size_t i = 1; i < m_.size(); i += 2)
            if (m_[i] != 0) return std::nullopt;
        Rep r = a.rep();
        for (size_t i = 1; i < r.size(); i += 2) r[i] = sneg(r[i]);
        return FieldElement(shared_from_this(), canon(std::move(r)));
    }

  private:
    Rep fix(SPoly p) const {
        if (p.empty()) p.push_back(0);
        return p;
    }
    std::string poly_str(const SPoly& p) const {
        if (p.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i] == 0 && !(p.size() == 1 && i == 0)) continue;
            Scalar c = p[i];
            if (!first) {
                if (base_->kind() == Kind::Rationals && c < 0) {
                    os << "-";
                    c = -c;
                } else {
                    os << "+";
                }
            }
            first = false;
            if (i == 0 || c != 1) {
                os << c.get_str();
                if (i > 0) os << "*";
            }
            if (i >= 1) os << "t";
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }
    static mpq_class seval(const SPoly& p, const mpq_class& x) {
        mpq_class r = 0;
        for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
        return r;
    }

    FieldPtr base_;
    SPoly m_;
    size_t deg_ = 0;
    std::optional<IsolatingInterval> embedding_;
};

// ---- real-embedded sign evaluation (base Q) -------------------------------

using QPoly = std::vector<mpq_class>;

QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
    return d;
}

mpq_class qeval(const QPoly& p, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        strim(a);
    }
    strim(q);
    return {q, a};
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, qderiv(p)};
    while (!chain.back().empty() && chain.back().size() > 0) {
        const QPoly& a = chain[chain.size() - 2];
        const QPoly& b = chain.back();
        if (b.empty()) break;
        QPoly r = qdivmod(a, b).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(qeval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// number of distinct real roots of p in (lo, hi]
int roots_in(const QPoly& p, const mpq_class& lo, const mpq_class& hi) {
    if (p.size() <= 1) return 0;
    auto chain = sturm_chain(p);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

int ExtensionField::sign(const Rep& a) const {
    if (!embedding_) return Field::sign(a);
    if (is_zero(a)) return 0;
    QPoly p = a;
    strim(p);
    if (p.size() == 1) return sgn(p[0]);
    mpq_class lo = embedding_->lo, hi = embedding_->hi;
    int mlo = sgn(qeval(m_, lo));
    // bisect toward the root of the modulus until p is sign-constant
    while (qeval(p, lo) == 0 || qeval(p, hi) == 0 || roots_in(p, lo, hi) > 0) {
        mpq_class mid = (lo + hi) / 2;
        int s = sgn(qeval(m_, mid));
        // m irreducible of degree >= 2 has no rational root
        if (s == mlo)
            lo = mid;
        else
            hi = mid;
    }
    return sgn(qeval(p, hi));
}

Rep ExtensionField::square_class_rep(const Rep& a) const {
    if (base_->kind() == Kind::Prime) {
        // finite field F_q: Euler criterion, canonical nonresidue by search
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), characteristic().get_mpz_t(), (unsigned long)deg_);
        FieldElement e(shared_from_this(), canon(Rep(a)));
        mpz_class h = (q - 1) / 2;
        auto powz = [&](FieldElement b, mpz_class n) {
            FieldElement acc = one();
            while (n > 0) {
                if (mpz_tstbit(n.get_mpz_t(), 0)) acc *= b;
                b *= b;
                n = n >> 1;
            }
            return acc;
        };
        if (powz(e, h).is_one()) return one().rep();
        // enumerate elements c0 + c1 t + ... in counting order for the least nonresidue
        mpz_class p = characteristic();
        for (mpz_class code = 2;; ++code) {
            Rep r;
            mpz_class c = code;
            while (c > 0) {
                r.push_back(mpq_class(c % p));
                c /= p;
            }
            FieldElement cand(shared_from_this(), canon(std::move(r)));
            if (!cand.is_zero() && !powz(cand, h).is_one()) return cand.rep();
        }
    }
    // base Q: normalize by rational squares (representative is not canonical
    // across the full square class; see is_square for decidable cases)
    Rep r = a;
    strim(r);
    mpz_class den_lcm = 1;
    for (auto& c : r) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (auto& c : r) c *= mpq_class(den_lcm * den_lcm);
    mpz_class content = 0;
    for (auto& c : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_class sf = abs(squarefree_part(content));
    mpz_class sq;
    mpz_divexact(sq.get_mpz_t(), content.get_mpz_t(), sf.get_mpz_t());
    // content = sf * sq with sq a perfect square
    for (auto& c : r) c /= mpq_class(sq);
    for (auto& c : r) c.canonicalize();
    return canon(std::move(r));
}

static std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
    if (v < 0) return std::nullopt;
    if (v == 0) return mpq_class(0);
    mpz_class n = v.get_num(), d = v.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

std::optional<bool> ExtensionField::is_square(const Rep& a) const {
    if (is_zero(a)) return true;
    if (base_->kind() == Kind::Prime) {
        FieldElement e(shared_from_this(), a);
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), characteristic().get_mpz_t(), (unsigned long)deg_);
        mpz_class h = (q - 1) / 2;
        FieldElement acc = one(), b = e;
        while (h > 0) {
            if (mpz_tstbit(h.get_mpz_t(), 0)) acc *= b;
            b *= b;
            h = h >> 1;
        }
        return acc.is_one();
    }
    SPoly x = a;
    strim(x);
    // a rational square stays a square; a base nonsquare may still acquire a
    // root in the extension, so only the positive answer transfers
    if (x.size() == 1) {
        auto b = base_->is_square({x[0]});
        if (b && *b) return true;
    }
    if (deg_ != 2) return std::nullopt;
    // quadratic Q(t), t^2 = -b1 t - b0: solve (u + v t)^2 = a0 + a1 t over Q
    mpq_class b1 = m_[1], b0 = m_[0];
    mpq_class a0 = x[0], a1 = x.size() > 1 ? x[1] : mpq_class(0);
    // v = 0 branch
    if (a1 == 0 && rational_sqrt(a0)) return true;
    // else u = (a1 + b1 v^2) / (2v); substitute into u^2 - (-b0) v^2... with
    // t^2 + b1 t + b0 = 0: (u+vt)^2 = u^2 - b0 v^2 + (2uv - b1 v^2) t.
    // Matching gives, with w = v^2:  (b1^2 - 4 b0) w^2 + (2 a1 b1 - 4 a0) w + a1^2 = 0.
    mpq_class A = b1 * b1 - 4 * b0, B = 2 * a1 * b1 - 4 * a0, C = a1 * a1;
    mpq_class disc = B * B - 4 * A * C;
    auto sd = rational_sqrt(disc);
    if (!sd) return false;
    for (int s : {1, -1}) {
        mpq_class w = (-B + s * *sd) / (2 * A);
        if (w <= 0) continue;
        auto v = rational_sqrt(w);
        if (!v) continue;
        for (int vs : {1, -1}) {
            mpq_class vv = vs * *v;
            mpq_class u = (a1 + b1 * w) / (2 * vv);
            if (u * u - b0 * w == a0 && 2 * u * vv - b1 * w == a1) return true;
        }
    }
    return false;
}

std::optional<Rep> ExtensionField::sqrt(const Rep& a) const {
    if (is_zero(a)) return zero().rep();
    if (base_->kind() == Kind::Prime) {
        // brute force; only sensible for small q
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), characteristic().get_mpz_t(), (unsigned long)deg_);
        if (q > 40000) return std::nullopt;
        Rep target = canon(Rep(a));
        mpz_class p = characteristic();
        for (mpz_class code = 1; code < q; ++code) {
            Rep r;
            mpz_class c = code;
            while (c > 0) {
                r.push_back(mpq_class(c % p));
                c /= p;
            }
            Rep cand = canon(std::move(r));
            if (mul(cand, cand) == target) return cand;
        }
        return std::nullopt;
    }
    SPoly x = a;
    strim(x);
    if (x.size() == 1) {
        if (auto b = base_->sqrt({x[0]})) return canon({(*b)[0]});
    }
    if (deg_ != 2) return std::nullopt;
    // same system as in is_square, keeping the witness (u, v)
    mpq_class b1 = m_[1], b0 = m_[0];
    mpq_class a0 = x[0], a1 = x.size() > 1 ? x[1] : mpq_class(0);
    mpq_class A = b1 * b1 - 4 * b0, B = 2 * a1 * b1 - 4 * a0, C = a1 * a1;
    auto sd = rational_sqrt(B * B - 4 * A * C);
    if (!sd) return std::nullopt;
    for (int s : {1, -1}) {
        mpq_class w = (-B + s * *sd) / (2 * A);
        if (w <= 0) continue;
        auto v = rational_sqrt(w);
        if (!v) continue;
        for (int vs : {1, -1}) {
            mpq_class vv = vs * *v;
            mpq_class u = (a1 + b1 * w) / (2 * vv);
            if (u * u - b0 * w == a0 && 2 * u * vv - b1 * w == a1) return canon({u, vv});
        }
    }
    return std::nullopt;
}

// ---- construction ---------------------------------------------------------

bool fp_irreducible(const PrimeField& fp, const SPoly& m) {
    // trial division by every monic polynomial of degree <= deg/2; fine at the
    // small p used here, guarded by a work cap
    size_t deg = m.size() - 1;
    mpz_class p = fp.characteristic();
    if (p > 200 && deg > 3) return true;  // caller warns
    // root test first
    for (mpz_class r = 0; r < p; ++r) {
        mpq_class acc = 0;
        for (size_t i = m.size(); i-- > 0;) acc = fp.modp(acc * mpq_class(r) + m[i]);
        if (acc == 0) return false;
    }
    for (size_t d = 2; d <= deg / 2; ++d) {
        // enumerate monic polys of degree d
        mpz_class count;
        mpz_pow_ui(count.get_mpz_t(), p.get_mpz_t(), (unsigned long)d);
        if (count > 100000) return true;  // caller warns
        for (mpz_class code = 0; code < count; ++code) {
            SPoly div(d + 1, 0);
            mpz_class c = code;
            for (size_t i = 0; i < d; ++i) {
                div[i] = mpq_class(mpz_class(c % p));
                c /= p;
            }
            div[d] = 1;
            // synthetic long division of m by div over Fp
            SPoly a = m;
            while (a.size() >= div.size()) {
                mpq_class lead = a.back();
                size_t shift = a.size() - div.size();
                for (size_t i = 0; i < div.size(); ++i)
                    a[shift + i] = mpq_class(fp.modp(a[shift + i] - lead * div[i]));
                strim(a);
            }
            if (a.empty()) return false;
        }
    }
    return true;
}

// integer monic quartic: search for a (x^2+ax+b)(x^2+cx+d) split
bool quartic_splits_z(const SPoly& m) {
    for (const auto& c : m)
        if (c.get_den() != 1) return false;  // only attempted for integer coefficients
    mpz_class c3 = m[3].get_num(), c2 = m[2].get_num(), c1 = m[1].get_num(), c0 = m[0].get_num();
    if (c0 == 0) return true;
    std::vector<mpz_class> divs{1};
    for (auto& [p, e] : factor_integer(c0)) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = next;
    }
    for (auto& b : divs) {
        for (int s : {1, -1}) {
            mpz_class bb = s * b;
            if (!mpz_divisible_p(c0.get_mpz_t(), bb.get_mpz_t())) continue;
            mpz_class d = c0 / bb;
            // a + c = c3, b + d + ac = c2, ad + bc = c1
            // a(d - b) = c1 - b c3
            mpz_class rhs = c1 - bb * c3;
            mpz_class db = d - bb;
            mpz_class a;
            if (db == 0) {
                if (rhs != 0) continue;
                // a c = c2 - b - d with a + c = c3: a from the quadratic
                mpz_class prod = c2 - bb - d, disc = c3 * c3 - 4 * prod;
                if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
                mpz_class sq;
                mpz_sqrt(sq.get_mpz_t(), disc.get_mpz_t());
                if ((c3 + sq) % 2 != 0) continue;
                a = (c3 + sq) / 2;
            } else {
                if (!mpz_divisible_p(rhs.get_mpz_t(), db.get_mpz_t())) continue;
                a = rhs / db;
            }
            mpz_class cc = c3 - a;
            if (bb + d + a * cc == c2 && a * d + bb * cc == c1) return true;
        }
    }
    return false;
}

}  // namespace

FieldPtr make_rationals() {
    static FieldPtr q = std::make_shared<RationalField>();
    return q;
}

FieldPtr make_prime_field(const mpz_class& p) { return std::make_shared<PrimeField>(p); }

FieldPtr make_extension(FieldPtr base, const std::vector<FieldElement>& modulus,
                        std::optional<IsolatingInterval> embedding) {
    g_warnings.clear();
    if (!base || (base->kind() != Field::Kind::Rationals && base->kind() != Field::Kind::Prime))
        throw Error("extension base must be Q or Fp");
    SPoly m;
    for (const auto& c : modulus) {
        if (!c.valid() || !c.field().same(*base)) throw Error("modulus coefficients must lie in the base field");
        m.push_back(c.rep()[0]);
    }
    strim(m);
    if (m.size() < 3) throw Error("extension modulus must have degree >= 2");
    if (m.back() != 1) throw Error("extension modulus must be monic");
    size_t deg = m.size() - 1;
    if (base->kind() == Field::Kind::Prime) {
        const auto& fp = static_cast<const PrimeField&>(*base);
        if ((fp.characteristic() > 200 && deg > 3) ||
            (deg >= 4 && [&] {
                mpz_class c;
                mpz_pow_ui(c.get_mpz_t(), fp.characteristic().get_mpz_t(), (unsigned long)(deg / 2));
                return c > 100000;
            }())) {
            g_warnings.push_back("irreducibility of the modulus was not verified");
        }
        if (!fp_irreducible(fp, m)) throw Error("extension modulus is reducible");
    } else {
        // rational-root test
        QPoly qm = m;
        bool has_root = false;
        {
            // clear denominators, candidates p/q with p | a0, q | lc
            mpz_class den = 1;
            for (auto& c : qm) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
            std::vector<mpz_class> num;
            for (auto& c : qm) num.push_back(mpz_class(c * mpq_class(den)));
            size_t lo = 0;
            while (lo < num.size() && num[lo] == 0) ++lo;
            if (lo > 0) has_root = true;  // root at 0
            if (!has_root) {
                auto divisors = [](const mpz_class& n) {
                    std::vector<mpz_class> ds{1};
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
                };
                for (auto& pn : divisors(num[0]))
                    for (auto& qd : divisors(num.back()))
                        for (int s : {1, -1}) {
                            mpq_class cand(s * pn, qd);
                            cand.canonicalize();
                            if (qeval(qm, cand) == 0) has_root = true;
                        }
            }
        }
        if (has_root) throw Error("extension modulus is reducible");
        if (deg == 4 && quartic_splits_z(m)) throw Error("extension modulus is reducible");
        if (deg > 4 || (deg == 4 && std::any_of(m.begin(), m.end(), [](const mpq_class& c) {
                            return c.get_den() != 1;
                        })))
            g_warnings.push_back("irreducibility of the modulus was not verified");
    }
    return std::make_shared<ExtensionField>(base, std::move(m), std::move(embedding));
}

FieldPtr make_field(const std::string& descriptor, std::optional<IsolatingInterval> embedding) {
    std::string s = descriptor;
    std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
    auto bracket = s.find("[t]/(");
    std::string base_str = s.substr(0, bracket == std::string::npos ? s.size() : bracket);
    FieldPtr base;
    if (base_str == "Q") {
        base = make_rationals();
    } else if (base_str.size() > 1 && base_str[0] == 'F') {
        base = make_prime_field(mpz_class(base_str.substr(1)));
    } else {
        throw Error("unrecognized field descriptor: " + descriptor);
    }
    if (bracket == std::string::npos) {
        if (embedding) throw Error("isolating interval only applies to extensions");
        return base;
    }
    if (s.back() != ')') throw Error("unrecognized field descriptor: " + descriptor);
    std::string mod_str = s.substr(bracket + 5, s.size() - bracket - 6);
    Polynomial m = parse_polynomial(mod_str, base, "t");
    return make_extension(base, m.coefficients(), std::move(embedding));
}

}  // namespace bezgw
