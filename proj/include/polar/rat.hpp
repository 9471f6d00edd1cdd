#pragma once

#include <gmpxx.h>

#include <string>

#include "polar/errors.hpp"

namespace polar {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den >= 1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}                                   // NOLINT: implicit by design
    Rat(long n, long d) : q_(n, d) { canonical(); }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) { canonical(); }
    explicit Rat(const mpq_class& q) : q_(q) { canonical(); }

    // Parses "n", "n/d", optional sign, arbitrary size.
    static Rat from_string(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        require(!o.is_zero(), "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat inv() const {
        require(!is_zero(), "inverse of zero rational");
        return Rat(mpq_class(1) / q_);
    }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    // Always "num/den", e.g. "-3/7", "4/1".
    std::string to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }
    // "num" when integral, else "num/den".
    std::string to_short_string() const {
        return is_integer() ? q_.get_num().get_str() : to_string();
    }

    double to_double() const { return q_.get_d(); }

    // Exact square root if the value is a square of a rational.
    bool sqrt_exact(Rat& out) const;

private:
    void canonical() {
        require(sgn(q_.get_den()) != 0, "rational with zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

inline Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (sgn(d) == 0) throw SchemaError("zero denominator in rational literal: " + s);
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal: " + s);
    }
}

inline bool Rat::sqrt_exact(Rat& out) const {
    if (sign() < 0) return false;
    mpz_class n = num(), d = den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 2) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 2) == 0) return false;
    out = Rat(rn, rd);
    return true;
}

} // namespace polar
