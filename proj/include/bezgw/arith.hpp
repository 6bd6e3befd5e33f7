#pragma once

#include <gmpxx.h>

#include <map>

namespace bezgw {

/// Prime factorization of |n| (n nonzero), as prime -> exponent.
std::map<mpz_class, unsigned> factor_integer(const mpz_class& n);

/// sign(n) times the product of the primes dividing n to odd multiplicity.
mpz_class squarefree_part(const mpz_class& n);

bool is_probable_prime(const mpz_class& n);

/// Legendre symbol (a|p) for odd prime p; 0 when p | a.
int legendre_symbol(const mpz_class& a, const mpz_class& p);

/// Hilbert symbol (a, b)_p at a finite prime p (p = 2 allowed).
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);

/// Hilbert symbol (a, b)_infinity: -1 iff both arguments are negative.
int hilbert_symbol_real(const mpq_class& a, const mpq_class& b);

}  // namespace bezgw
