#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace deriva {

using Rational = mpq_class;

struct CompositeCharacteristic : std::invalid_argument {
    explicit CompositeCharacteristic(unsigned long c)
        : std::invalid_argument("characteristic " + std::to_string(c) +
                                " is neither zero nor prime") {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("scalar division by zero") {}
};

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("operands belong to different fields") {}
};

// One exact field element: a rational in canonical form (lowest terms,
// positive denominator) or a residue in [0, p).  Canonical representation
// makes operator== structural equality of field elements.
class Scalar {
  public:
    static Scalar rational(Rational v) {
        v.canonicalize();
        return Scalar(std::move(v));
    }
    static Scalar residue(unsigned long v) { return Scalar(v); }

    bool is_rational() const { return v_.index() == 0; }
    const Rational &rat() const { return std::get<0>(v_); }
    unsigned long res() const { return std::get<1>(v_); }

    bool is_zero() const { return is_rational() ? sgn(rat()) == 0 : res() == 0; }
    bool operator==(const Scalar &o) const = default;

  private:
    explicit Scalar(Rational v) : v_(std::move(v)) {}
    explicit Scalar(unsigned long v) : v_(v) {}
    std::variant<Rational, unsigned long> v_;
};

// The coefficient field: Q when characteristic() == 0, GF(p) otherwise.
// All Scalar arithmetic is dispatched through the field so residues stay
// reduced and rationals stay canonical.
class Field {
  public:
    explicit Field(unsigned long characteristic);

    unsigned long characteristic() const { return p_; }
    bool is_rational_field() const { return p_ == 0; }
    bool operator==(const Field &o) const { return p_ == o.p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long v) const;

    Scalar add(const Scalar &a, const Scalar &b) const;
    Scalar sub(const Scalar &a, const Scalar &b) const;
    Scalar mul(const Scalar &a, const Scalar &b) const;
    Scalar div(const Scalar &a, const Scalar &b) const;
    Scalar neg(const Scalar &a) const;
    Scalar inv(const Scalar &a) const;

    // accepts "n" or "p/q" over Q, any integer (sign allowed) over GF(p)
    Scalar from_string(const std::string &s) const;
    std::string to_string(const Scalar &a) const;

  private:
    void check(const Scalar &a) const;
    unsigned long p_;
};

Field make_field(unsigned long characteristic);
Scalar scalar_inverse(const Field &f, const Scalar &x);

}  // namespace deriva
