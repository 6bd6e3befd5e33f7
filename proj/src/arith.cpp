#include "bezgw/arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bezgw {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // Brent's cycle variant; n is odd, composite, not a prime power checked by caller.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dUL);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        std::map<mpz_class, unsigned> half;
        factor_into(r, half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factor_integer(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    std::map<mpz_class, unsigned> out;
    mpz_class m = abs(n);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            m /= p;
        }
    }
    // wheel over 6k+-1 up to 2^16, then Pollard rho for what remains
    for (unsigned long p = 7; p < 65536 && m > 1; p += 6) {
        for (unsigned long q : {p, p + 4}) {
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                ++out[mpz_class(q)];
                m /= q;
            }
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) return 0;
    mpz_class r = n < 0 ? -1 : 1;
    for (auto& [p, e] : factor_integer(n))
        if (e % 2) r *= p;
    return r;
}

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

// Odd "unit part" of a at p as an integer: a = p^v * u with u a p-adic unit,
// returned modulo squares as num_part * den_part.
void p_parts(const mpq_class& a, const mpz_class& p, long& v, mpz_class& u) {
    mpz_class num = a.get_num(), den = a.get_den();
    v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    u = num * den;
}

int eps2(const mpz_class& u) {  // (u-1)/2 mod 2, u odd
    return mpz_class((u - 1) / 2).get_si() & 1;
}

int omega2(const mpz_class& u) {  // (u^2-1)/8 mod 2, u odd
    mpz_class w = (u * u - 1) / 8;
    return mpz_tstbit(w.get_mpz_t(), 0);
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    long alpha, beta;
    mpz_class u, w;
    p_parts(a, p, alpha, u);
    p_parts(b, p, beta, w);
    if (p == 2) {
        int e = eps2(u) * eps2(w) + (alpha & 1) * omega2(w) + (beta & 1) * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int r = 1;
    if ((alpha & 1) && (beta & 1) && eps2(p)) r = -r;
    if (beta & 1) r *= legendre_symbol(u, p);
    if (alpha & 1) r *= legendre_symbol(w, p);
    return r;
}

int hilbert_symbol_real(const mpq_class& a, const mpq_class& b) {
    return (a < 0 && b < 0) ? -1 : 1;
}

}  // namespace bezgw
