#include "polyadika/scalar.hpp"

#include <numeric>
#include <sstream>

#include "polyadika/error.hpp"
#include "polyadika/textio.hpp"

namespace polyadika {

namespace {

long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational arithmetic overflow");
    return static_cast<long long>(v);
}

long long modp(long long v, int p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

long long pow_mod(long long b, long long e, int p) {
    long long r = 1;
    b = modp(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

int common_field(const Scalar& a, const Scalar& b) {
    if (a.prime() == b.prime()) return a.prime();
    if (a.prime() == 0) return b.prime();
    if (b.prime() == 0) return a.prime();
    throw DomainError("cannot mix GF(" + std::to_string(a.prime()) + ") and GF(" + std::to_string(b.prime()) + ")");
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    Scalar s;
    s.num_ = g ? num / g : 0;
    s.den_ = g ? den / g : 1;
    if (s.num_ == 0) s.den_ = 1;
    return s;
}

Scalar Scalar::mod(long long v, int p) {
    if (!is_prime(p)) throw DomainError("GF(p) needs a prime p, got " + std::to_string(p));
    Scalar s;
    s.p_ = p;
    s.num_ = modp(v, p);
    return s;
}

Scalar Scalar::raw(long long v, int p) {
    Scalar s;
    s.p_ = p;
    s.num_ = modp(v, p);
    return s;
}

Scalar Scalar::in_field(int p) const {
    if (p == p_) return *this;
    if (p == 0) throw DomainError("cannot lift a GF(p) value to the rationals");
    if (p_ != 0) throw DomainError("cannot move between different prime fields");
    if (den_ % p == 0) throw DomainError("denominator " + std::to_string(den_) + " vanishes mod " + std::to_string(p));
    Scalar s = mod(num_, p);
    s.num_ = s.num_ * pow_mod(den_, p - 2, p) % p;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (p_) {
        Scalar s = *this;
        s.num_ = pow_mod(num_, p_ - 2, p_);
        return s;
    }
    return rational(den_, num_);
}

double Scalar::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    const int p = common_field(a, b);
    if (p) return Scalar::raw(a.in_field(p).num_ + b.in_field(p).num_, p);
    return Scalar::rational(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                            checked(__int128(a.den_) * b.den_));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) s.num_ = modp(-num_, p_);
    else s.num_ = checked(-__int128(num_));
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    const int p = common_field(a, b);
    if (p) return Scalar::raw(a.in_field(p).num_ * b.in_field(p).num_ % p, p);
    return Scalar::rational(checked(__int128(a.num_) * b.num_), checked(__int128(a.den_) * b.den_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    const int p = common_field(a, b);
    return a.in_field(p) * b.in_field(p).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    const int p = common_field(a, b);
    if (p) return a.in_field(p).num_ == b.in_field(p).num_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar parse_scalar(const std::string& tok, int p) {
    auto slash = tok.find('/');
    Scalar s = slash == std::string::npos
                   ? Scalar(textio::to_int(tok, "scalar"))
                   : Scalar::rational(textio::to_int(tok.substr(0, slash), "scalar"),
                                      textio::to_int(tok.substr(slash + 1), "scalar"));
    return p ? s.in_field(p) : s;
}

Scalar heine(int k, const Scalar& q) {
    if (k < 0) throw DomainError("Heine number needs k >= 0");
    if (q == Scalar(1)) return Scalar(k);
    Scalar pw = 1;
    for (int i = 0; i < k; ++i) pw *= q;
    return (pw - 1) / (q - 1);
}

} // namespace polyadika
