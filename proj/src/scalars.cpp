#include "deriva/scalars.hpp"

#include <utility>

namespace deriva {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// extended Euclid; p prime, 0 < a < p
unsigned long mod_inverse(unsigned long a, unsigned long p) {
    long long t = 0, new_t = 1;
    long long r = (long long)p, new_r = (long long)a;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += (long long)p;
    return (unsigned long)t;
}

}  // namespace

Field::Field(unsigned long characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw CompositeCharacteristic(p_);
    // products of residues must fit in 64 bits
    if (p_ >= (1ul << 32))
        throw std::invalid_argument("characteristic too large");
}

void Field::check(const Scalar &a) const {
    if (a.is_rational() != is_rational_field())
        throw FieldMismatch();
}

Scalar Field::zero() const {
    return is_rational_field() ? Scalar::rational(0) : Scalar::residue(0);
}

Scalar Field::one() const {
    return is_rational_field() ? Scalar::rational(1) : Scalar::residue(1);
}

Scalar Field::from_long(long v) const {
    if (is_rational_field())
        return Scalar::rational(Rational(v));
    long r = v % (long)p_;
    if (r < 0)
        r += (long)p_;
    return Scalar::residue((unsigned long)r);
}

Scalar Field::add(const Scalar &a, const Scalar &b) const {
    check(a);
    check(b);
    if (is_rational_field())
        return Scalar::rational(a.rat() + b.rat());
    unsigned long s = a.res() + b.res();
    return Scalar::residue(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const {
    check(a);
    check(b);
    if (is_rational_field())
        return Scalar::rational(a.rat() - b.rat());
    unsigned long s = a.res() + p_ - b.res();
    return Scalar::residue(s >= p_ ? s - p_ : s);
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const {
    check(a);
    check(b);
    if (is_rational_field())
        return Scalar::rational(a.rat() * b.rat());
    return Scalar::residue((a.res() * b.res()) % p_);
}

Scalar Field::neg(const Scalar &a) const {
    check(a);
    if (is_rational_field())
        return Scalar::rational(-a.rat());
    return Scalar::residue(a.res() == 0 ? 0 : p_ - a.res());
}

Scalar Field::inv(const Scalar &a) const {
    check(a);
    if (a.is_zero())
        throw DivisionByZero();
    if (is_rational_field())
        return Scalar::rational(1 / a.rat());
    return Scalar::residue(mod_inverse(a.res(), p_));
}

Scalar Field::div(const Scalar &a, const Scalar &b) const {
    return mul(a, inv(b));
}

Scalar Field::from_string(const std::string &s) const {
    if (is_rational_field()) {
        Rational v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        if (sgn(v.get_den()) == 0)
            throw DivisionByZero();
        return Scalar::rational(std::move(v));
    }
    std::size_t pos = 0;
    long v = std::stol(s, &pos, 10);
    if (pos != s.size())
        throw std::invalid_argument("bad residue literal: " + s);
    return from_long(v);
}

std::string Field::to_string(const Scalar &a) const {
    check(a);
    if (is_rational_field())
        return a.rat().get_str();
    return std::to_string(a.res());
}

Field make_field(unsigned long characteristic) {
    return Field(characteristic);
}

Scalar scalar_inverse(const Field &f, const Scalar &x) {
    return f.inv(x);
}

}  // namespace deriva
