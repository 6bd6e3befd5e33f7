#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bezgw/matrix.hpp"

namespace bezgw {

/// Stable-isomorphism class of a nondegenerate symmetric bilinear form:
/// a diagonal part plus a count of hyperbolic planes H = <1, -1>.
struct GWClass {
    FieldPtr field;
    std::vector<SquareClass> diagonal;
    unsigned hyperbolics = 0;

    size_t rank() const { return diagonal.size() + 2 * hyperbolics; }
    std::string str() const;

    friend GWClass operator+(const GWClass& a, const GWClass& b);
};

struct Diagonalization {
    std::vector<FieldElement> diagonal;
    Matrix p;  // P^T m P = diag(diagonal)
};

/// Symmetric Gaussian congruence reduction; requires char != 2.
/// Throws "degenerate form" when m is singular.
Diagonalization diagonalize(const Matrix& m);

struct FormInvariants {
    size_t rank = 0;
    SquareClass discriminant;  // square class of det (unsigned convention)
    std::optional<long> signature;                // ordered fields only
    std::optional<std::map<mpz_class, int>> hasse_witt;  // Q only; -1 keys the real place

    /// (-1)^{r(r-1)/2} det, as a square class.
    SquareClass signed_discriminant() const;
};

FormInvariants invariants(const Matrix& m);
FormInvariants invariants(const GWClass& c);

/// GW class of a nondegenerate symmetric matrix (diagonalize + normalize).
GWClass gw_class(const Matrix& m);

GWClass gw_class(const FieldPtr& field, const std::vector<FieldElement>& diagonal,
                 unsigned hyperbolics = 0);

enum class Tri { False, True, Undecided };

/// Class equality: decided over Q (rank, signature, discriminant, Hasse-Witt)
/// and over Fp (rank, discriminant); over extensions only invariant
/// mismatches are conclusive.
Tri gw_equal(const GWClass& a, const GWClass& b);

/// Closed-form class of the anti-triangular Hankel form in A(1..mu):
/// <A(mu)> + (mu-1)/2 H for mu odd, (mu/2) H for mu even.
GWClass antitriangular_hankel_class(const std::vector<FieldElement>& a);

/// Class of the local degree of (x - r)^mu / A:
/// <A> + (mu-1)/2 <A, -A> for mu odd, (mu/2) <A, -A> for mu even.
GWClass power_map_class(size_t mu, const FieldElement& a);

}  // namespace bezgw
