#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace polyadika {

// Exact scalar: a rational number (p == 0) or an element of GF(p).
// Integer constants are rationals and convert silently when combined with
// GF(p) values; mixing two different primes is an error.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : num_(v) {} // NOLINT(google-explicit-constructor)
    static Scalar rational(long long num, long long den);
    static Scalar mod(long long v, int p);

    int prime() const { return p_; }
    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const;
    std::string str() const;

    // Same value, moved into GF(p) (p == 0 leaves it unchanged).
    Scalar in_field(int p) const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    static Scalar raw(long long v, int p); // p already known to be prime

    long long num_ = 0;
    long long den_ = 1;
    int p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Parses "3", "-2/5"; the result is moved into GF(p) when p > 0.
Scalar parse_scalar(const std::string& tok, int p = 0);

// q-deformed (Heine) number [[k]]_q = (q^k - 1)/(q - 1), and k when q = 1.
Scalar heine(int k, const Scalar& q);

bool is_prime(int p);

} // namespace polyadika
