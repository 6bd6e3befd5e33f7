#pragma once

#include <optional>

#include "bezgw/bezforms.hpp"

namespace bezgw {

/// The algebra Q(F) = k[x, 1/g]/(f/g), realized as k[x]/(f) with g inverted
/// (legitimate since gcd(f, g) = 1). Elements are polynomials of degree < mu.
class FAlgebra {
  public:
    explicit FAlgebra(PointedRationalFunction F);

    const PointedRationalFunction& map() const { return f_; }
    const Polynomial& g_inverse() const { return ginv_; }

    Polynomial reduce(const Polynomial& p) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;

  private:
    PointedRationalFunction f_;
    Polynomial ginv_;
};

enum class BasisKind { Monomial, Horner, Newton, Vandermonde };

/// A named basis of Q(F). Each vector stands for p(x)/g; `coordinates` holds
/// the columns of the basis in the twisted monomial basis x^{i-1}/g.
struct NamedBasis {
    BasisKind which;
    std::vector<Polynomial> vectors;
    Matrix coordinates;
};

NamedBasis basis_vectors(const PointedRationalFunction& F, BasisKind which,
                         const std::optional<SplitData>& sd = std::nullopt);

/// Coefficients of the Scheja-Storch element Delta on the twisted monomial
/// tensor basis, from the closed coefficient formula for the quotient
/// (f(x)g(y) - f(y)g(x))/(x - y); asserted equal to bezout_matrix(F).
Matrix delta_coefficients(const PointedRationalFunction& F);

/// The residue pairing beta on Q(F); its Gram matrix on the twisted monomial
/// basis is delta_coefficients(F)^{-1}, and eta(p) = beta(p, 1).
class ResiduePairing {
  public:
    explicit ResiduePairing(PointedRationalFunction F);

    const Matrix& gram_twisted_monomial() const { return gram_; }
    FieldElement beta(const Polynomial& a, const Polynomial& b) const;
    FieldElement eta(const Polynomial& p) const;

  private:
    std::vector<FieldElement> coords(const Polynomial& p) const;
    FAlgebra alg_;
    Matrix gram_;
};

/// Independent check for eta when f splits with simple roots:
/// eta(p) = sum over roots of p(r) g(r) / f'(r).
FieldElement eta_separable_oracle(const PointedRationalFunction& F, const Polynomial& p,
                                  const SplitData& sd);

enum class GramBasis { DualMonomial, DualHorner, DualNewton, DualVandermonde, MonomialPrimal };

/// Gram matrix of beta on the dual of a named basis (or on the primal
/// twisted monomial basis). The dual results are asserted against the four
/// classical matrices.
Matrix gram_matrix(const PointedRationalFunction& F, GramBasis which,
                   const std::optional<SplitData>& sd = std::nullopt);

/// Gram matrix of beta restricted to the local summand of Q(F) at a root r
/// of multiplicity m, on the basis e, e(x-r), ..., e(x-r)^{m-1} where e is
/// the idempotent cutting out the summand.
Matrix local_gram(const PointedRationalFunction& F, const FieldElement& r, unsigned m);

}  // namespace bezgw
