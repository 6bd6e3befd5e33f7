#pragma once

#include "bezgw/poly.hpp"

namespace bezgw {

/// A pointed rational function f/g: f monic, gcd(f, g) = 1, deg f > deg g >= 0.
class PointedRationalFunction {
  public:
    static PointedRationalFunction normalize(const Polynomial& f_raw, const Polynomial& g_raw);

    const Polynomial& f() const { return f_; }
    const Polynomial& g() const { return g_; }
    size_t mu() const { return (size_t)f_.degree(); }
    const FieldPtr& field_ptr() const { return f_.field_ptr(); }
    const Field& field() const { return f_.field(); }

    std::string str() const;

  private:
    PointedRationalFunction(Polynomial f, Polynomial g) : f_(std::move(f)), g_(std::move(g)) {}
    Polynomial f_, g_;
};

/// Normalized representative of F o G.
PointedRationalFunction compose(const PointedRationalFunction& F,
                                const PointedRationalFunction& G);

std::vector<FieldElement> reciprocal_series(const PointedRationalFunction& F, size_t count);

SplitData split_data(const PointedRationalFunction& F,
                     const std::vector<std::pair<FieldElement, unsigned>>& roots);

/// Split data over the coefficient field found by exact root search; throws
/// naming the nonsplit factor when f does not split.
SplitData split_data(const PointedRationalFunction& F);

}  // namespace bezgw
