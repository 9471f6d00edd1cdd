#include "polar/poly.hpp"

#include <sstream>

#include "polar/errors.hpp"

namespace polar {

Poly Poly::from_rat_poly(const RatPoly& p) {
    std::vector<AlgNum> c(p.begin(), p.end());
    return Poly(std::move(c));
}

bool Poly::rational_coeffs(RatPoly* out) const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    if (out) {
        out->clear();
        for (const auto& c : c_) out->push_back(c.rational());
    }
    return true;
}

FieldPtr Poly::coeff_field() const {
    FieldPtr f;
    for (const auto& c : c_) f = join_fields(f, c.field());
    return f;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<AlgNum> c(std::max(a.c_.size(), b.c_.size()), AlgNum(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<AlgNum> c(a.c_.size() + b.c_.size() - 1, AlgNum(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly Poly::scale(const AlgNum& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(c_.back().inv());
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<AlgNum> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * AlgNum((long)i);
    return Poly(std::move(c));
}

AlgNum Poly::eval(const AlgNum& x) const {
    AlgNum v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Poly Poly::pow(int e) const {
    require(e >= 0, "negative polynomial power");
    Poly r = Poly::constant(AlgNum(1));
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Poly Poly::shift_up(int k) const {
    if (is_zero()) return {};
    std::vector<AlgNum> c(c_.size() + k, AlgNum(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Poly(std::move(c));
}

Poly Poly::taylor_shift(const AlgNum& a) const {
    // synthetic: repeatedly divide by (x - (-a))... equivalently Horner on (a + x)
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) {
        // r = r * (a + x) + c_i
        Poly shifted = r.shift_up(1) + r.scale(a);
        r = shifted + Poly::constant(c_[i]);
    }
    return r;
}

Poly Poly::reverse() const {
    std::vector<AlgNum> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].to_string() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<AlgNum> r(a.coeffs());
    if (a.deg() < b.deg()) return {Poly(), a};
    std::vector<AlgNum> q(a.deg() - b.deg() + 1, AlgNum(0));
    AlgNum inv_lead = b.lead().inv();
    size_t bs = b.coeffs().size();
    for (size_t k = q.size(); k-- > 0;) {
        AlgNum c = r[k + bs - 1] * inv_lead;
        if (c.is_zero()) continue;
        q[k] = c;
        for (size_t j = 0; j < bs; ++j) r[k + j] -= c * b.coeffs()[j];
    }
    r.resize(bs - 1);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    require_internal(r.is_zero(), "polynomial division expected to be exact");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

int root_multiplicity(const Poly& p, const AlgNum& a) {
    require(!p.is_zero(), "root multiplicity in the zero polynomial");
    Poly lin(std::vector<AlgNum>{-a, AlgNum(1)});
    int k = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = poly_divrem(cur, lin);
        if (!r.is_zero()) return k;
        ++k;
        cur = std::move(q);
    }
}

int factor_multiplicity(const Poly& p, const Poly& m) {
    require(!p.is_zero() && m.deg() >= 1, "bad arguments to factor_multiplicity");
    int k = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = poly_divrem(cur, m);
        if (!r.is_zero()) return k;
        ++k;
        cur = std::move(q);
    }
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(AlgNum(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.deg() >= 1) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    AlgNum lead = den_.lead();
    if (!lead.is_one()) {
        AlgNum inv = lead.inv();
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), "division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

AlgNum RatFunc::eval(const AlgNum& x) const {
    AlgNum d = den_.eval(x);
    require(!d.is_zero(), "rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == Poly::constant(AlgNum(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace polar
