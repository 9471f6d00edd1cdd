#pragma once

// Exact scalar value * (2*pi*i)^tau_power. The unit is never evaluated; adding
// scalars of different tau_power is an error (zero is compatible with any
// power and normalizes to tau_power 0).

#include <string>

#include "polar/errors.hpp"
#include "polar/numfield.hpp"

namespace polar {

class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : value_(v) {}                      // NOLINT: implicit by design
    Scalar(const Rat& v) : value_(v) {}                // NOLINT
    Scalar(const AlgNum& v) : value_(v) {}             // NOLINT
    Scalar(AlgNum v, int tau) : value_(std::move(v)), tau_(tau) { normalize(); }

    static Scalar tau_unit(int power) { return Scalar(AlgNum(1), power); }

    const AlgNum& value() const { return value_; }
    int tau_power() const { return tau_; }
    bool is_zero() const { return value_.is_zero(); }

    Scalar operator-() const { return Scalar(-value_, tau_); }

    Scalar& operator+=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        require(tau_ == o.tau_, "cannot add scalars with different powers of 2*pi*i");
        value_ += o.value_;
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        value_ *= o.value_;
        tau_ += o.tau_;
        normalize();
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }

    Scalar inv() const {
        require(!is_zero(), "inverse of zero scalar");
        return Scalar(value_.inv(), -tau_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.tau_ == b.tau_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Same value up to the 2*pi*i unit (used by dimension computations).
    const AlgNum& stripped() const { return value_; }

    std::string to_string() const {
        std::string s = value_.to_string();
        if (tau_ != 0 && !is_zero())
            s += " * (2*pi*i)^" + std::to_string(tau_);
        return s;
    }

private:
    void normalize() {
        if (value_.is_zero()) tau_ = 0;
    }
    AlgNum value_;
    int tau_ = 0;
};

} // namespace polar
