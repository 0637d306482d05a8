#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace dgw {

// Coefficient field. Rationals by default; a prime field F_p when a modulus
// is installed. The modulus is process-wide and meant to be set once, before
// any values are built.
class Field {
public:
    static void use_rationals();
    static void use_prime(unsigned long p);
    static unsigned long modulus();
    static bool is_prime_field() { return modulus() != 0; }
    static std::string describe();
    // parses "rational" or "fp:P"; throws std::invalid_argument
    static void configure(const std::string& text);
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long v);
    Scalar(int v) : Scalar(static_cast<long>(v)) {}
    explicit Scalar(const mpq_class& v);

    // accepts "3", "-1/2"; throws std::invalid_argument on junk or a zero denominator
    static Scalar parse(const std::string& text);
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& raw() const { return v_; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }

private:
    void reduce();
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dgw
