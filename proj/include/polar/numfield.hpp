#pragma once

// A single algebraic extension Q[t]/(m) with m monic irreducible, and the
// dynamic field element type AlgNum that is either rational or lives in one
// such extension. Elements of structurally equal fields interoperate; mixing
// two distinct extensions is a precondition error (single primitive element
// by design).

#include <memory>
#include <string>
#include <vector>

#include "polar/ratpoly.hpp"

namespace polar {

class NumberField {
public:
    // min_poly must be monic of degree >= 2 and irreducible over Q.
    static std::shared_ptr<const NumberField> make(RatPoly monic_min_poly);

    const RatPoly& min_poly() const { return min_poly_; }
    int degree() const { return rp_deg(min_poly_); }
    // power sums of the roots, p_0 .. p_{deg-1}
    const std::vector<Rat>& newton_sums() const { return newton_; }

private:
    NumberField() = default;
    RatPoly min_poly_;
    std::vector<Rat> newton_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class AlgNum {
public:
    AlgNum() : c_{Rat()} {}
    AlgNum(long v) : c_{Rat(v)} {}          // NOLINT: implicit by design
    AlgNum(const Rat& v) : c_{v} {}         // NOLINT: implicit by design
    AlgNum(FieldPtr field, std::vector<Rat> coeffs);

    static AlgNum generator(const FieldPtr& field);

    bool is_rational() const { return field_ == nullptr; }
    const Rat& rational() const; // requires is_rational
    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return is_rational() && c_[0].is_one(); }

    AlgNum operator-() const;
    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o);
    AlgNum& operator/=(const AlgNum& o);
    friend AlgNum operator+(AlgNum a, const AlgNum& b) { a += b; return a; }
    friend AlgNum operator-(AlgNum a, const AlgNum& b) { a -= b; return a; }
    friend AlgNum operator*(AlgNum a, const AlgNum& b) { a *= b; return a; }
    friend AlgNum operator/(AlgNum a, const AlgNum& b) { a /= b; return a; }

    AlgNum inv() const;

    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
    // Deterministic total order (structural); used for map keys, not magnitude.
    friend bool operator<(const AlgNum& a, const AlgNum& b);

    // Sum over all embeddings into C (= the value itself for rationals... times 1).
    // For an element of Q[t]/(m) this is the field trace to Q.
    Rat trace() const;

    std::string to_string() const;

private:
    void demote(); // collapse to rational when all higher coefficients vanish
    FieldPtr field_;      // null => rational
    std::vector<Rat> c_;  // size 1 if rational, else field degree
};

// Fields are compatible when equal or one side is rational; returns the joint
// field (null for rational). Throws PreconditionError on a genuine mix.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

} // namespace polar
