#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bezgw {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// Internal representation of a field element: coefficients of the generator t
// in ascending degree. Base fields (Q, Fp) use a single entry.
using Rep = std::vector<mpq_class>;

/// Exact field of characteristic != 2: the rationals, a prime field Fp with p
/// an odd prime, or a simple extension k[t]/(m) of one of those.
class Field : public std::enable_shared_from_this<Field> {
  public:
    enum class Kind { Rationals, Prime, Extension };

    virtual ~Field() = default;

    virtual Kind kind() const = 0;
    virtual std::string descriptor() const = 0;
    virtual mpz_class characteristic() const = 0;

    /// True when sign() is meaningful (Q, or a real-embedded extension).
    virtual bool ordered() const { return false; }

    bool same(const Field& other) const { return descriptor() == other.descriptor(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;
    FieldElement element(const mpq_class& v) const;
    /// Element whose t-expansion has the given ascending coefficients.
    FieldElement element(Rep coeffs) const;

    // rep-level arithmetic; reps are always canonical
    virtual Rep add(const Rep& a, const Rep& b) const = 0;
    virtual Rep sub(const Rep& a, const Rep& b) const = 0;
    virtual Rep mul(const Rep& a, const Rep& b) const = 0;
    virtual Rep neg(const Rep& a) const = 0;
    virtual Rep inv(const Rep& a) const = 0;
    virtual Rep canon(Rep a) const = 0;
    virtual bool is_zero(const Rep& a) const = 0;
    virtual std::string str(const Rep& a) const = 0;

    virtual int sign(const Rep& a) const;

    /// Canonical square-class representative of a nonzero element.
    virtual Rep square_class_rep(const Rep& a) const = 0;

    /// Whether a nonzero element is a square; nullopt when undecidable here.
    virtual std::optional<bool> is_square(const Rep& a) const = 0;

    /// An exact square root when one exists and is computable here.
    virtual std::optional<Rep> sqrt(const Rep& a) const {
        (void)a;
        return std::nullopt;
    }

    /// Base field of an extension, null for Q and Fp.
    virtual FieldPtr base_field() const { return nullptr; }

    /// Conjugation t -> -t, available on extensions with an even modulus.
    virtual std::optional<FieldElement> conjugate(const FieldElement& a) const;
};

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(std::move(rep)) {}

    bool valid() const { return field_ != nullptr; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const Rep& rep() const { return rep_; }

    bool is_zero() const { return field_->is_zero(rep_); }
    bool is_one() const { return *this == field_->one(); }
    FieldElement inverse() const { return {field_, field_->inv(rep_)}; }
    FieldElement pow(long e) const;
    int sign() const { return field_->sign(rep_); }
    std::string str() const { return field_->str(rep_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->add(a.rep_, b.rep_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->sub(a.rep_, b.rep_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->mul(a.rep_, b.rep_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return {a.field_, a.field_->mul(a.rep_, b.field_->inv(b.rep_))};
    }
    FieldElement operator-() const { return {field_, field_->neg(rep_)}; }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    FieldPtr field_;
    Rep rep_;
};

/// Canonical representative of an element of k*/(k*)^2.
struct SquareClass {
    FieldElement representative;

    std::string str() const { return representative.str(); }
    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.representative == b.representative;
    }
};

SquareClass square_class(const FieldElement& a);

/// Isolating interval for a real root of an extension modulus; endpoints are
/// rational and the modulus changes sign across the interval.
struct IsolatingInterval {
    mpq_class lo, hi;
};

FieldPtr make_rationals();
FieldPtr make_prime_field(const mpz_class& p);
FieldPtr make_extension(FieldPtr base, const std::vector<FieldElement>& modulus,
                        std::optional<IsolatingInterval> embedding = std::nullopt);

/// Parses "Q", "F<p>", "Q[t]/(t^2-2)", "F5[t]/(t^2+2)".
FieldPtr make_field(const std::string& descriptor,
                    std::optional<IsolatingInterval> embedding = std::nullopt);

/// Warnings (unverified irreducibility, ...) raised by the last
/// make_extension call on this thread, cleared on each call.
const std::vector<std::string>& field_construction_warnings();

}  // namespace bezgw
