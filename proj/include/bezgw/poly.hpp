#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bezgw/field.hpp"

namespace bezgw {

/// Dense univariate polynomial over an exact field. The zero polynomial has
/// an empty coefficient vector and degree -1.
class Polynomial {
  public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);
    /// Convenience: coefficients from integers, ascending degree.
    Polynomial(FieldPtr field, std::initializer_list<long> coeffs);

    static Polynomial constant(const FieldElement& c);
    static Polynomial x(FieldPtr field);  // the monomial x

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }

    long degree() const { return (long)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(size_t i) const;  // zero beyond the degree
    FieldElement leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    FieldElement operator()(const FieldElement& x) const;
    Polynomial operator()(const Polynomial& inner) const;  // composition

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial shift(size_t k) const;  // multiply by x^k

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial operator*(const FieldElement& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;  // ascending, trailing zeros trimmed
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic (or zero)

struct XgcdResult {
    Polynomial d, u, v;  // d = u*a + v*b, d monic
};
XgcdResult xgcd(const Polynomial& a, const Polynomial& b);

FieldElement resultant(const Polynomial& f, const Polynomial& g);
FieldElement discriminant(const Polynomial& f);

/// Roots with multiplicities of f over its field plus the partial-fraction
/// coefficients A_i(j) of g/f, 1 <= j <= mu_i.
struct SplitData {
    std::vector<std::pair<FieldElement, unsigned>> roots;
    std::vector<std::vector<FieldElement>> pf_coefficients;  // [i][j-1] = A_i(j)

    unsigned total_multiplicity() const {
        unsigned n = 0;
        for (auto& [r, m] : roots) n += m;
        return n;
    }
};

struct RationalRoots {
    std::vector<std::pair<FieldElement, unsigned>> roots;
    Polynomial remainder;  // monic nonsplit factor (1 when f splits)
};

/// All roots of f lying in its coefficient field, with exact multiplicities.
/// Over Q this uses the rational-root bound plus deflation; over Fp
/// exhaustive evaluation. Over extensions the search is partial: base-field
/// roots are lifted, then linear and quadratic factors are peeled off using
/// exact field square roots; anything else lands in the remainder.
RationalRoots field_roots(const Polynomial& f);

/// First `count` coefficients s_1, s_2, ... of g/f expanded in k[[1/x]],
/// via the linear recurrence induced by long division by f (f monic,
/// deg f > deg g).
std::vector<FieldElement> reciprocal_series(const Polynomial& f, const Polynomial& g,
                                            size_t count);

/// Partial-fraction coefficients of g/f for the given complete root list,
/// solved as a linear system and verified by recombination.
SplitData partial_fractions(const Polynomial& f, const Polynomial& g,
                            const std::vector<std::pair<FieldElement, unsigned>>& roots);

}  // namespace bezgw
