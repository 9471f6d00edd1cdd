#include "polar/numfield.hpp"

#include <sstream>

#include "polar/errors.hpp"
#include "polar/intfactor.hpp"

namespace polar {

std::shared_ptr<const NumberField> NumberField::make(RatPoly monic_min_poly) {
    rp_trim(monic_min_poly);
    require(rp_deg(monic_min_poly) >= 2, "number field minimal polynomial must have degree >= 2");
    require(monic_min_poly.back().is_one(), "number field minimal polynomial must be monic");
    require(is_irreducible_q(monic_min_poly), "number field minimal polynomial must be irreducible");
    auto nf = std::shared_ptr<NumberField>(new NumberField());
    nf->min_poly_ = std::move(monic_min_poly);
    int d = nf->degree();
    // Newton's identities: p_k = -k a_{d-k} - sum_{i=1}^{k-1} a_{d-i} p_{k-i}
    nf->newton_.assign(d, Rat());
    nf->newton_[0] = Rat(d);
    const RatPoly& m = nf->min_poly_;
    for (int k = 1; k < d; ++k) {
        Rat s = Rat(-(long)k) * m[d - k];
        for (int i = 1; i < k; ++i) s -= m[d - i] * nf->newton_[k - i];
        nf->newton_[k] = s;
    }
    return nf;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return rp_eq(a->min_poly(), b->min_poly());
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    require(same_field(a, b), "elements of two distinct number fields cannot be combined");
    return a;
}

AlgNum::AlgNum(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (field_) {
        c_.resize(field_->degree(), Rat());
        demote();
    } else {
        require_internal(c_.size() == 1, "rational AlgNum must have one coefficient");
    }
}

AlgNum AlgNum::generator(const FieldPtr& field) {
    std::vector<Rat> c(field->degree(), Rat());
    c[1] = Rat(1);
    return AlgNum(field, std::move(c));
}

const Rat& AlgNum::rational() const {
    require_internal(is_rational(), "AlgNum is not rational");
    return c_[0];
}

bool AlgNum::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

void AlgNum::demote() {
    if (!field_) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return;
    Rat v = c_[0];
    field_.reset();
    c_.assign(1, v);
}

AlgNum AlgNum::operator-() const {
    AlgNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    FieldPtr f = join_fields(field_, o.field_);
    size_t n = f ? f->degree() : 1;
    c_.resize(n, Rat());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    field_ = f;
    demote();
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) { return *this += -o; }

AlgNum& AlgNum::operator*=(const AlgNum& o) {
    FieldPtr f = join_fields(field_, o.field_);
    if (!f) {
        c_[0] *= o.c_[0];
        return *this;
    }
    RatPoly prod = rp_mul(RatPoly(c_.begin(), c_.end()), RatPoly(o.c_.begin(), o.c_.end()));
    RatPoly red = rp_mod(prod, f->min_poly());
    red.resize(f->degree(), Rat());
    c_ = std::move(red);
    field_ = f;
    demote();
    return *this;
}

AlgNum AlgNum::inv() const {
    require(!is_zero(), "inverse of zero field element");
    if (is_rational()) return AlgNum(c_[0].inv());
    RatPoly s, t;
    RatPoly g = rp_ext_gcd(RatPoly(c_.begin(), c_.end()), field_->min_poly(), s, t);
    require_internal(rp_deg(g) == 0, "element not invertible modulo irreducible polynomial");
    RatPoly r = rp_scale(s, g[0].inv());
    r = rp_mod(r, field_->min_poly());
    r.resize(field_->degree(), Rat());
    return AlgNum(field_, std::move(r));
}

AlgNum& AlgNum::operator/=(const AlgNum& o) { return *this *= o.inv(); }

bool operator==(const AlgNum& a, const AlgNum& b) {
    if (!same_field(a.field_, b.field_)) {
        // one may be a demoted rational vs a non-demoted... both sides stay demoted,
        // so distinct fields simply mean unequal unless both zero-coefficiented rationals.
        if (!a.field_ && !b.field_) return a.c_[0] == b.c_[0];
        return false;
    }
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

bool operator<(const AlgNum& a, const AlgNum& b) {
    bool ra = a.is_rational(), rb = b.is_rational();
    if (ra != rb) return ra; // rationals first
    if (!ra) {
        const RatPoly& ma = a.field_->min_poly();
        const RatPoly& mb = b.field_->min_poly();
        if (!rp_eq(ma, mb)) {
            if (ma.size() != mb.size()) return ma.size() < mb.size();
            for (size_t i = ma.size(); i-- > 0;)
                if (ma[i] != mb[i]) return ma[i] < mb[i];
        }
    }
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

Rat AlgNum::trace() const {
    if (is_rational()) return c_[0];
    const auto& p = field_->newton_sums();
    Rat s;
    for (size_t i = 0; i < c_.size(); ++i) s += c_[i] * p[i];
    return s;
}

std::string AlgNum::to_string() const {
    if (is_rational()) return c_[0].to_short_string();
    std::ostringstream os;
    os << rp_to_string(RatPoly(c_.begin(), c_.end()), "t") << " mod "
       << rp_to_string(field_->min_poly(), "t");
    return os.str();
}

} // namespace polar
