#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezgw/matrix.hpp"
#include "bezgw/ratmap.hpp"

namespace bezgw {

/// Bezout matrix of F = f/g: the coefficient grid of
/// (f(x)g(y) - f(y)g(x)) / (x - y). Symmetric and nondegenerate.
Matrix bezout_matrix(const PointedRationalFunction& F);

/// Hankel matrix of the reciprocal-series coefficients s_1, ..., s_{2mu-1}.
Matrix hankel_matrix(const PointedRationalFunction& F);

/// Block-diagonal matrix with one anti-triangular Hankel block per root,
/// built from the partial-fraction coefficients A_i(1..mu_i).
Matrix newton_matrix(const PointedRationalFunction& F, const SplitData& sd);

/// Hankel matrix in sigma_1, ..., sigma_{2mu-1} where
/// sigma_b = sum_i sum_j A_i(j)/g(r_i)^2 * C(b-1, j-1) * r_i^{b-j}.
Matrix vandermonde_matrix(const PointedRationalFunction& F, const SplitData& sd);

struct TransitionMatrices {
    Matrix L;   // anti-triangular in the coefficients of f; det = +-1
    Matrix M;   // columns: monomial coefficients of f/(x - r_i)^j
    Matrix N;   // M * N0
    Matrix N0;  // inverse of the assembled confluent Vandermonde block row
};

TransitionMatrices transition_matrices(const PointedRationalFunction& F, const SplitData& sd);

struct CongruenceReport {
    struct Item {
        std::string name;  // "L", "M", or "N"
        bool pass;
        std::string detail;  // offending entry on failure
    };
    std::vector<Item> items;
    bool all_pass() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// Checks Bez = L S L^T, and Bez = M New M^T, Bez = N Van N^T when split
/// data is given. Failures are reported, not thrown.
CongruenceReport verify_congruences(const PointedRationalFunction& F,
                                    const std::optional<SplitData>& sd = std::nullopt);

}  // namespace bezgw
