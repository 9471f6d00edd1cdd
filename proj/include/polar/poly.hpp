#pragma once

// Dense univariate polynomials with AlgNum coefficients (mixing rationals and
// one number field), plus reduced rational functions. Zero polynomial = empty
// coefficient vector.

#include <string>
#include <utility>
#include <vector>

#include "polar/numfield.hpp"

namespace polar {

class Poly {
public:
    Poly() = default;
    explicit Poly(AlgNum c) : c_{std::move(c)} { trim(); }
    explicit Poly(std::vector<AlgNum> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly x() { return Poly(std::vector<AlgNum>{AlgNum(0), AlgNum(1)}); }
    static Poly constant(AlgNum c) { return Poly(std::move(c)); }
    static Poly from_rat_poly(const RatPoly& p);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<AlgNum>& coeffs() const { return c_; }
    AlgNum coeff(int i) const { return i >= 0 && i <= deg() ? c_[i] : AlgNum(0); }
    const AlgNum& lead() const { return c_.back(); }

    // True when every coefficient is rational; fills out if non-null.
    bool rational_coeffs(RatPoly* out = nullptr) const;
    // Joint number field of the coefficients (null if all rational).
    FieldPtr coeff_field() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scale(const AlgNum& s) const;
    Poly monic() const;
    Poly derivative() const;
    AlgNum eval(const AlgNum& x) const;
    Poly pow(int e) const;
    Poly shift_up(int k) const; // multiply by x^k
    // p(a + x): Taylor shift
    Poly taylor_shift(const AlgNum& a) const;
    // reversed coefficients: x^deg * p(1/x)
    Poly reverse() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<AlgNum> c_;
};

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_divexact(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic
// multiplicity of root a: largest k with (x-a)^k | p
int root_multiplicity(const Poly& p, const AlgNum& a);
// multiplicity of irreducible factor m in p
int factor_multiplicity(const Poly& p, const Poly& m);

// Rational function num/den, coprime, den monic, den != 0.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(AlgNum(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly::constant(AlgNum(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    AlgNum eval(const AlgNum& x) const; // error if den(x) = 0

    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

} // namespace polar
