#include "bezgw/gw.hpp"

#include <set>
#include <sstream>

#include "bezgw/arith.hpp"

namespace bezgw {

namespace {

// <a, b> with -ab a square is the hyperbolic plane; absorb such pairs
void normalize(GWClass& c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < c.diagonal.size() && !changed; ++i)
            for (size_t j = i + 1; j < c.diagonal.size() && !changed; ++j) {
                FieldElement prod =
                    -(c.diagonal[i].representative * c.diagonal[j].representative);
                auto sq = c.field->is_square(prod.rep());
                if (sq && *sq) {
                    c.diagonal.erase(c.diagonal.begin() + j);
                    c.diagonal.erase(c.diagonal.begin() + i);
                    ++c.hyperbolics;
                    changed = true;
                }
            }
    }
}

FormInvariants invariants_of_diagonal(const FieldPtr& k,
                                      const std::vector<FieldElement>& diag) {
    FormInvariants inv;
    inv.rank = diag.size();
    FieldElement det = k->one();
    for (auto& d : diag) det *= d;
    inv.discriminant = square_class(det);
    if (k->ordered()) {
        long s = 0;
        for (auto& d : diag) s += d.sign();
        inv.signature = s;
    }
    if (k->kind() == Field::Kind::Rationals) {
        std::set<mpz_class> places{2};
        std::vector<mpq_class> vals;
        for (auto& d : diag) {
            mpq_class v = d.rep()[0];
            vals.push_back(v);
            for (auto& [p, e] : factor_integer(v.get_num() * v.get_den()))
                if (p != 2) places.insert(p);
        }
        std::map<mpz_class, int> hw;
        auto record = [&](const mpz_class& place, int s) {
            if (s == -1) hw[place] = -1;
        };
        for (auto& p : places) {
            int s = 1;
            for (size_t i = 0; i < vals.size(); ++i)
                for (size_t j = i + 1; j < vals.size(); ++j)
                    s *= hilbert_symbol(vals[i], vals[j], p);
            record(p, s);
        }
        int s = 1;
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j)
                s *= hilbert_symbol_real(vals[i], vals[j]);
        record(-1, s);  // the real place
        inv.hasse_witt = std::move(hw);
    }
    return inv;
}

}  // namespace

std::string GWClass::str() const {
    std::ostringstream os;
    bool any = false;
    if (!diagonal.empty()) {
        os << "<";
        for (size_t i = 0; i < diagonal.size(); ++i)
            os << (i ? ", " : "") << diagonal[i].str();
        os << ">";
        any = true;
    }
    if (hyperbolics) {
        if (any) os << " + ";
        if (hyperbolics > 1) os << hyperbolics << "*";
        os << "H";
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

GWClass operator+(const GWClass& a, const GWClass& b) {
    if (!a.field->same(*b.field)) throw Error("field mismatch");
    GWClass c = a;
    c.diagonal.insert(c.diagonal.end(), b.diagonal.begin(), b.diagonal.end());
    c.hyperbolics += b.hyperbolics;
    normalize(c);
    return c;
}

Diagonalization diagonalize(const Matrix& m) {
    if (!m.symmetric()) throw Error("diagonalize requires a symmetric matrix");
    FieldPtr k = m.field_ptr();
    size_t n = m.rows();
    Matrix a = m, p = Matrix::identity(k, n);
    auto add_to = [&](size_t dst, size_t src, const FieldElement& c) {
        // row dst += c * row src, then col dst += c * col src (reading the
        // post-row-update column, which is what E^T A E works out to)
        for (size_t j = 0; j < n; ++j) a.at(dst, j) += c * a.at(src, j);
        for (size_t i = 0; i < n; ++i) a.at(i, dst) += c * a.at(i, src);
        for (size_t i = 0; i < n; ++i) p.at(i, dst) += c * p.at(i, src);
    };
    auto swap_with = [&](size_t i, size_t j) {
        for (size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (size_t r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (size_t r = 0; r < n; ++r) std::swap(p.at(r, i), p.at(r, j));
    };
    for (size_t i = 0; i < n; ++i) {
        if (a.at(i, i).is_zero()) {
            size_t j = i + 1;
            for (; j < n; ++j)
                if (!a.at(j, j).is_zero()) {
                    swap_with(i, j);
                    break;
                }
            if (a.at(i, i).is_zero()) {
                for (j = i + 1; j < n; ++j)
                    if (!a.at(i, j).is_zero()) {
                        add_to(i, j, k->one());  // 2 a_ij lands on the pivot
                        break;
                    }
            }
            if (a.at(i, i).is_zero()) throw Error("degenerate form");
        }
        FieldElement pivot_inv = a.at(i, i).inverse();
        for (size_t j = i + 1; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            add_to(j, i, -(a.at(i, j) * pivot_inv));
        }
    }
    Diagonalization d{{}, p};
    for (size_t i = 0; i < n; ++i) d.diagonal.push_back(a.at(i, i));
    Matrix check = p.transpose() * m * p;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if ((i == j ? check.at(i, j) != d.diagonal[i] : !check.at(i, j).is_zero()))
                throw Error("diagonalization self-check failed");
    return d;
}

SquareClass FormInvariants::signed_discriminant() const {
    FieldElement d = discriminant.representative;
    if ((rank * (rank - 1) / 2) % 2) d = -d;
    return square_class(d);
}

FormInvariants invariants(const Matrix& m) {
    return invariants_of_diagonal(m.field_ptr(), diagonalize(m).diagonal);
}

FormInvariants invariants(const GWClass& c) {
    std::vector<FieldElement> diag;
    for (auto& sc : c.diagonal) diag.push_back(sc.representative);
    for (unsigned i = 0; i < c.hyperbolics; ++i) {
        diag.push_back(c.field->one());
        diag.push_back(-c.field->one());
    }
    return invariants_of_diagonal(c.field, diag);
}

GWClass gw_class(const Matrix& m) {
    return gw_class(m.field_ptr(), diagonalize(m).diagonal);
}

GWClass gw_class(const FieldPtr& field, const std::vector<FieldElement>& diagonal,
                 unsigned hyperbolics) {
    GWClass c{field, {}, hyperbolics};
    for (auto& d : diagonal) c.diagonal.push_back(square_class(d));
    normalize(c);
    return c;
}

Tri gw_equal(const GWClass& a, const GWClass& b) {
    if (!a.field->same(*b.field)) throw Error("field mismatch");
    if (a.rank() != b.rank()) return Tri::False;
    FormInvariants ia = invariants(a), ib = invariants(b);
    switch (a.field->kind()) {
        case Field::Kind::Rationals:
            return (ia.signature == ib.signature && ia.discriminant == ib.discriminant &&
                    ia.hasse_witt == ib.hasse_witt)
                       ? Tri::True
                       : Tri::False;
        case Field::Kind::Prime:
            return ia.discriminant == ib.discriminant ? Tri::True : Tri::False;
        case Field::Kind::Extension: {
            // decidable rejections first
            if (ia.signature && ib.signature && *ia.signature != *ib.signature)
                return Tri::False;
            auto disc_ratio =
                ia.discriminant.representative * ib.discriminant.representative;
            auto sq = a.field->is_square(disc_ratio.rep());
            if (sq && !*sq) return Tri::False;
            if (a.field->characteristic() != 0) {
                // finite field: rank and discriminant classify
                if (sq && *sq) return Tri::True;
                return Tri::Undecided;
            }
            // small-rank diagonal matching
            if (a.hyperbolics == b.hyperbolics && a.diagonal.size() == b.diagonal.size() &&
                a.diagonal.size() <= 2) {
                auto same = [&](const SquareClass& x, const SquareClass& y) {
                    auto s = a.field->is_square((x.representative * y.representative).rep());
                    return s && *s;
                };
                if (a.diagonal.empty()) return Tri::True;
                if (a.diagonal.size() == 1)
                    return same(a.diagonal[0], b.diagonal[0]) ? Tri::True : Tri::Undecided;
                if ((same(a.diagonal[0], b.diagonal[0]) && same(a.diagonal[1], b.diagonal[1])) ||
                    (same(a.diagonal[0], b.diagonal[1]) && same(a.diagonal[1], b.diagonal[0])))
                    return Tri::True;
            }
            return Tri::Undecided;
        }
    }
    return Tri::Undecided;
}

GWClass antitriangular_hankel_class(const std::vector<FieldElement>& a) {
    if (a.empty() || a.back().is_zero()) throw Error("degenerate");
    size_t mu = a.size();
    FieldPtr k = a.back().field_ptr();
    if (mu % 2) return gw_class(k, {a.back()}, (unsigned)((mu - 1) / 2));
    return gw_class(k, {}, (unsigned)(mu / 2));
}

GWClass power_map_class(size_t mu, const FieldElement& a) {
    if (mu < 1) throw Error("power_map_class requires mu >= 1");
    if (a.is_zero()) throw Error("degenerate");
    FieldPtr k = a.field_ptr();
    std::vector<FieldElement> diag;
    if (mu % 2) diag.push_back(a);
    for (size_t i = 0; i < mu / 2; ++i) {
        diag.push_back(a);
        diag.push_back(-a);
    }
    return gw_class(k, diag);  // <a, -a> pairs normalize to H
}

}  // namespace bezgw
