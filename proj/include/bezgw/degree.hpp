#pragma once

#include "bezgw/gw.hpp"
#include "bezgw/ratmap.hpp"

namespace bezgw {

/// Local Cauchy index of g/f at r over an ordered field: the sign jump of
/// the fraction across the pole. `not_a_pole` flags r with f(r) != 0 (the
/// index is then 0).
struct LocalIndex {
    int index = 0;
    bool not_a_pole = false;
};
LocalIndex local_cauchy_index(const Polynomial& f, const Polynomial& g, const FieldElement& r);

/// Cauchy index of g/f over the whole line, by the signed-remainder-sequence
/// sign-variation count; cross-checked against the sum of local indices when
/// rational poles can be split off.
int global_cauchy_index(const Polynomial& f, const Polynomial& g);

/// deg(F) = ind(g/f); asserts the Hurwitz identity against the signature of
/// the Bezout matrix.
int topological_degree(const PointedRationalFunction& F);

/// Local A1-degree at a root r of exact multiplicity m, as the class of the
/// local Newton block; cross-checked against the restricted residue pairing.
GWClass local_a1_degree(const PointedRationalFunction& F, const FieldElement& r, unsigned m);

/// Global A1-degree: the class of the Bezout matrix. When f splits over the
/// working field the degree-sum identity is asserted as a self-check.
GWClass a1_degree(const PointedRationalFunction& F);

struct DegreeSumReport {
    bool pass = false;
    GWClass global_class, local_sum;
    FormInvariants global_invariants, local_invariants;
};

/// Compares the global class with the orthogonal sum of the local classes.
DegreeSumReport degree_sum_check(const PointedRationalFunction& F, const SplitData& sd);

/// The unstable pair: w the A1-degree class, d the exact determinant of the
/// Bezout matrix (not reduced to a square class).
struct UnstableClass {
    GWClass w;
    FieldElement d;
};
UnstableClass unstable_class(const PointedRationalFunction& F);

/// For a Galois conjugation t -> -t on the working extension: checks that
/// conjugating New(F) entrywise equals P^T New(F) P for the root-pairing
/// permutation P.
bool galois_conjugation_check(const PointedRationalFunction& F, const SplitData& sd);

}  // namespace bezgw
