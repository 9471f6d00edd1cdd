#include "polar/ratpoly.hpp"

#include <sstream>

namespace polar {

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

bool rp_is_zero(const RatPoly& p) { return p.empty(); }

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    rp_trim(r);
    return r;
}

RatPoly rp_neg(const RatPoly& a) {
    RatPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) { return rp_add(a, rp_neg(b)); }

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rp_trim(r);
    return r;
}

RatPoly rp_scale(const RatPoly& a, const Rat& s) {
    if (s.is_zero()) return {};
    RatPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

RatPoly rp_derivative(const RatPoly& a) {
    if (a.size() <= 1) return {};
    RatPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
    rp_trim(r);
    return r;
}

Rat rp_eval(const RatPoly& a, const Rat& x) {
    Rat v;
    for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

std::pair<RatPoly, RatPoly> rp_divrem(const RatPoly& a, const RatPoly& b) {
    require(!b.empty(), "polynomial division by zero");
    RatPoly r = a;
    if (a.size() < b.size()) return {{}, r};
    RatPoly q(a.size() - b.size() + 1, Rat());
    Rat inv_lead = b.back().inv();
    for (size_t k = q.size(); k-- > 0;) {
        Rat c = r[k + b.size() - 1] * inv_lead;
        if (c.is_zero()) continue;
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    r.resize(b.size() - 1);
    rp_trim(q);
    rp_trim(r);
    return {q, r};
}

RatPoly rp_mod(const RatPoly& a, const RatPoly& b) { return rp_divrem(a, b).second; }

RatPoly rp_monic(const RatPoly& a) {
    if (a.empty()) return a;
    return rp_scale(a, a.back().inv());
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = rp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(a);
}

RatPoly rp_ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = rp_divrem(r0, r1);
        RatPoly s2 = rp_sub(s0, rp_mul(q, s1));
        RatPoly t2 = rp_sub(t0, rp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.empty()) { s = {}; t = {}; return {}; }
    Rat lead_inv = r0.back().inv();
    s = rp_scale(s0, lead_inv);
    t = rp_scale(t0, lead_inv);
    return rp_scale(r0, lead_inv);
}

bool rp_eq(const RatPoly& a, const RatPoly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string rp_to_string(const RatPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        os << p[i].to_short_string();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

} // namespace polar
