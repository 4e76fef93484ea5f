#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wedderkit/errors.hpp"

namespace wk {

using Rat = mpq_class;

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// monic of degree phi(n).  Computed by exact division of x^n - 1 and
// memoized; the returned reference stays valid.
const std::vector<Rat>& cyclotomic_polynomial(int n);

// Element of Q(zeta_L) in the power basis 1, z, ..., z^(phi(L)-1) where
// z = exp(2*pi*i/L), with exact rational coordinates.  Arithmetic works
// modulo the L-th cyclotomic polynomial.  Operands must share a level;
// use embedded() to move into a larger field first.
class CycloNumber {
public:
    CycloNumber() : CycloNumber(zero(1)) {}

    static CycloNumber zero(int level);
    static CycloNumber from_rational(int level, const Rat& value);
    // zeta_level^exponent (exponent taken mod level, may be negative).
    static CycloNumber root(int level, long exponent);

    int level() const { return level_; }
    const std::vector<Rat>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator*(const Rat& r) const;
    CycloNumber operator/(const CycloNumber& o) const;

    bool operator==(const CycloNumber& o) const { return level_ == o.level_ && c_ == o.c_; }
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    // Multiplicative inverse; throws DivisionByZero on zero.
    CycloNumber inverse() const;

    // Image under the canonical embedding Q(zeta_L) -> Q(zeta_M) sending
    // zeta_L to zeta_M^(M/L); requires L | M, else IncompatibleLevels.
    CycloNumber embedded(int target_level) const;

    // Galois action zeta -> zeta^t for t a unit mod the level.
    CycloNumber galois(long t) const;

    std::string to_string() const;

private:
    CycloNumber(int level, std::vector<Rat> c) : level_(level), c_(std::move(c)) {}

    int level_;
    std::vector<Rat> c_;
};

inline CycloNumber operator*(const Rat& r, const CycloNumber& v) { return v * r; }

}  // namespace wk
