#include "polar/intfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "polar/errors.hpp"

namespace polar {

namespace {

// ---------------------------------------------------------------- GF(p) layer

using GfPoly = std::vector<int64_t>; // c[0] + c[1] x + ..., coefficients in [0, p)

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
    int64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}
int64_t mod_inv(int64_t a, int64_t p) { return mod_pow((a % p + p) % p, p - 2, p); }

void gf_trim(GfPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }

GfPoly gf_mul(const GfPoly& a, const GfPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    GfPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (__int128)a[i] * b[j]) % p;
    }
    gf_trim(r);
    return r;
}

GfPoly gf_mod(GfPoly a, const GfPoly& m, int64_t p) {
    int64_t inv_lead = mod_inv(m.back(), p);
    while (a.size() >= m.size()) {
        int64_t c = (__int128)a.back() * inv_lead % p;
        size_t off = a.size() - m.size();
        if (c)
            for (size_t j = 0; j < m.size(); ++j)
                a[off + j] = ((a[off + j] - (__int128)c * m[j]) % p + p) % p;
        a.pop_back();
        gf_trim(a);
    }
    return a;
}

GfPoly gf_mulmod(const GfPoly& a, const GfPoly& b, const GfPoly& m, int64_t p) {
    return gf_mod(gf_mul(a, b, p), m, p);
}

GfPoly gf_powmod(GfPoly b, int64_t e, const GfPoly& m, int64_t p) {
    GfPoly r{1};
    b = gf_mod(std::move(b), m, p);
    while (e > 0) {
        if (e & 1) r = gf_mulmod(r, b, m, p);
        b = gf_mulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

GfPoly gf_gcd(GfPoly a, GfPoly b, int64_t p) {
    while (!b.empty()) {
        GfPoly r = gf_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int64_t inv = mod_inv(a.back(), p);
        for (auto& c : a) c = (__int128)c * inv % p;
    }
    return a;
}

GfPoly gf_derivative(const GfPoly& a, int64_t p) {
    GfPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back((__int128)a[i] * (i % p) % p);
    gf_trim(r);
    return r;
}

GfPoly gf_monic(GfPoly a, int64_t p) {
    if (a.empty()) return a;
    int64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = (__int128)c * inv % p;
    return a;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<GfPoly> berlekamp(const GfPoly& f, int64_t p) {
    int n = (int)f.size() - 1;
    if (n <= 1) return {f};
    // rows of Q: coefficients of x^{ip} mod f
    std::vector<GfPoly> qrows(n);
    GfPoly xp = gf_powmod(GfPoly{0, 1}, p, f, p);
    GfPoly cur{1};
    for (int i = 0; i < n; ++i) {
        qrows[i] = cur;
        qrows[i].resize(n, 0);
        cur = gf_mulmod(cur, xp, f, p);
    }
    // kernel of (Q^T - I): columns v with Q^T v = v, i.e. v is a p-th power fixed poly
    std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[j][i] = (qrows[i][j] - (i == j ? 1 : 0) % p + p) % p;
    // gaussian elimination, collect kernel basis
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        int64_t inv = mod_inv(m[rank][col], p);
        for (int j = 0; j < n; ++j) m[rank][j] = (__int128)m[rank][j] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank || !m[r][col]) continue;
            int64_t c = m[r][col];
            for (int j = 0; j < n; ++j)
                m[r][j] = ((m[r][j] - (__int128)c * m[rank][j]) % p + p) % p;
        }
        pivot_col[rank++] = col;
    }
    std::vector<GfPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        GfPoly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = (p - m[r][col]) % p;
        gf_trim(v);
        basis.push_back(v);
    }
    size_t target = basis.size(); // number of irreducible factors
    std::vector<GfPoly> factors{f};
    if (target <= 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() >= target) break;
        if (v.size() <= 1) continue; // constant vector splits nothing
        std::vector<GfPoly> next;
        for (const auto& g : factors) {
            if ((int)g.size() - 1 <= 1) { next.push_back(g); continue; }
            GfPoly rem = g;
            for (int64_t s = 0; s < p && (int)rem.size() - 1 > 0; ++s) {
                GfPoly vs = v;
                vs.resize(std::max<size_t>(vs.size(), 1));
                vs[0] = ((vs[0] - s) % p + p) % p;
                gf_trim(vs);
                GfPoly d = gf_gcd(rem, vs, p);
                if ((int)d.size() - 1 > 0 && d.size() < rem.size()) {
                    next.push_back(d);
                    GfPoly quo;
                    {
                        GfPoly r2 = rem;
                        int64_t il = mod_inv(d.back(), p);
                        quo.assign(r2.size() - d.size() + 1, 0);
                        for (size_t k = quo.size(); k-- > 0;) {
                            int64_t c = (__int128)r2[k + d.size() - 1] * il % p;
                            quo[k] = c;
                            if (c)
                                for (size_t j = 0; j < d.size(); ++j)
                                    r2[k + j] = ((r2[k + j] - (__int128)c * d[j]) % p + p) % p;
                        }
                    }
                    rem = gf_monic(std::move(quo), p);
                }
            }
            if ((int)rem.size() - 1 > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    for (auto& g : factors) g = gf_monic(std::move(g), p);
    return factors;
}

// ------------------------------------------------------------- integer layer

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

// Exact division test: a = q*b with integer q? Returns success.
bool z_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    if (a.size() < b.size()) return false;
    q.assign(a.size() - b.size() + 1, mpz_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        mpz_class& top = r[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_class c = top / b.back();
        q[k] = c;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

mpz_class z_content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? mpz_class(1) : g;
}

ZPoly z_primitive(ZPoly f) {
    mpz_class c = z_content(f);
    if (f.empty()) return f;
    if (f.back() < 0) c = -c;
    for (auto& x : f) x /= c;
    return f;
}

// symmetric representative in (-m/2, m/2]
mpz_class z_sym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// --------------------------------------------------------------- Hensel lift

ZPoly zm_norm(ZPoly a, const mpz_class& m) {
    for (auto& x : a) { x %= m; if (x < 0) x += m; }
    z_trim(a);
    return a;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return zm_norm(z_mul(a, b), m); }

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return zm_norm(std::move(r), m);
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return zm_norm(std::move(r), m);
}

// a mod b where b is monic, coefficients mod m.
ZPoly zm_rem_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
    while (a.size() >= b.size()) {
        mpz_class c = a.back();
        size_t off = a.size() - b.size();
        if (c != 0)
            for (size_t j = 0; j + 1 < b.size(); ++j) {
                a[off + j] -= c * b[j];
            }
        a.pop_back();
        a = zm_norm(std::move(a), m);
    }
    return a;
}

ZPoly zm_divexact_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
    // b monic; returns quotient of the (exact) division mod m
    if (a.size() < b.size()) return {};
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        mpz_class c = a[k + b.size() - 1] % m;
        if (c < 0) c += m;
        q[k] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) {
                a[k + j] -= c * b[j];
                a[k + j] %= m;
            }
    }
    z_trim(q);
    return q;
}

// Lift f = g*h (mod p) with s*g + t*h = 1 (mod p), g monic, to modulus p^K.
// Classical quadratic Hensel; g stays monic.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& p,
                 const mpz_class& target) {
    mpz_class m = p;
    while (m < target) {
        mpz_class m2 = m * m;
        // e = f - g h  (mod m2)
        ZPoly e = zm_sub(f, z_mul(g, h), m2);
        // q, r: s*e = q*h + r (mod m2), deg r < deg h... standard: update
        ZPoly se = zm_mul(s, e, m2);
        // g monic; work delta for h against g: we follow vzG&G 15.10 with roles:
        // g_new = g + (t*e mod g), h_new = h + s*e + q*g adjusted. Use monic g for rem.
        ZPoly te = zm_mul(t, e, m2);
        ZPoly dg = zm_rem_monic(te, g, m2);
        ZPoly qq = zm_divexact_monic(zm_sub(te, dg, m2), g, m2);
        ZPoly dh = zm_add(se, zm_mul(qq, h, m2), m2);
        g = zm_add(g, dg, m2);
        h = zm_add(h, dh, m2);
        // update Bezout: b = s*g + t*h - 1
        ZPoly b = zm_sub(zm_add(zm_mul(s, g, m2), zm_mul(t, h, m2), m2), ZPoly{mpz_class(1)}, m2);
        ZPoly sb = zm_mul(s, b, m2);
        ZPoly ds = zm_rem_monic(sb, g, m2);
        ZPoly qq2 = zm_divexact_monic(zm_sub(sb, ds, m2), g, m2);
        ZPoly dt = zm_add(zm_mul(t, b, m2), zm_mul(qq2, h, m2), m2);
        s = zm_sub(s, ds, m2);
        t = zm_sub(t, dt, m2);
        m = m2;
    }
}

// Multifactor Hensel lift: f (lc may be non-unit) ~ lc * prod(monic factors) mod p.
// Returns factors lifted mod target (>= p^k > bound).
std::vector<ZPoly> hensel_multifactor(const ZPoly& f, std::vector<GfPoly> fac, const mpz_class& p,
                                      const mpz_class& target) {
    if (fac.size() == 1) {
        // single factor: the primitive part of f itself corresponds to it
        ZPoly g;
        for (auto& c : f) g.push_back(c);
        return {zm_norm(std::move(g), target)};
    }
    size_t half = fac.size() / 2;
    std::vector<GfPoly> left(fac.begin(), fac.begin() + half), right(fac.begin() + half, fac.end());
    int64_t pl = p.get_si();
    GfPoly gl{1}, gr{1};
    for (const auto& x : left) gl = gf_mul(gl, x, pl);
    for (const auto& x : right) gr = gf_mul(gr, x, pl);
    // incorporate lc(f) into the right (non-monic) part
    mpz_class lc = f.back();
    int64_t lcm = (int64_t)mpz_fdiv_ui(lc.get_mpz_t(), (unsigned long)pl);
    GfPoly grl = gr;
    for (auto& c : grl) c = (__int128)c * lcm % pl;
    // Bezout s*gl + t*grl = 1 mod p
    // extended gcd over GF(p)
    GfPoly r0 = gl, r1 = grl, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divrem r0 = q r1 + r
        GfPoly q, r = r0;
        {
            int64_t il = mod_inv(r1.back(), pl);
            if (r.size() >= r1.size()) {
                q.assign(r.size() - r1.size() + 1, 0);
                for (size_t k = q.size(); k-- > 0;) {
                    int64_t c = (__int128)r[k + r1.size() - 1] * il % pl;
                    q[k] = c;
                    if (c)
                        for (size_t j = 0; j < r1.size(); ++j)
                            r[k + j] = ((r[k + j] - (__int128)c * r1[j]) % pl + pl) % pl;
                }
                r.resize(r1.size() - 1);
                gf_trim(r);
                gf_trim(q);
            }
        }
        GfPoly s2 = r0, t2; // s2 = s0 - q*s1 ; t2 = t0 - q*t1
        s2 = s0;
        {
            GfPoly qs = gf_mul(q, s1, pl);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % pl + pl) % pl;
            gf_trim(s2);
        }
        t2 = t0;
        {
            GfPoly qt = gf_mul(q, t1, pl);
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % pl + pl) % pl;
            gf_trim(t2);
        }
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    require_internal(r0.size() == 1, "hensel: split parts not coprime");
    int64_t inv = mod_inv(r0[0], pl);
    for (auto& c : s0) c = (__int128)c * inv % pl;
    for (auto& c : t0) c = (__int128)c * inv % pl;

    ZPoly G, H, S, T;
    for (auto c : gl) G.push_back(mpz_class((long)c));
    for (auto c : grl) H.push_back(mpz_class((long)c));
    for (auto c : s0) S.push_back(mpz_class((long)c));
    for (auto c : t0) T.push_back(mpz_class((long)c));
    hensel_pair(f, G, H, S, T, p, target);
    // recurse: G is monic * (product of left), H carries lc for right side
    std::vector<ZPoly> out;
    auto lres = hensel_multifactor(G, left, p, target);
    auto rres = hensel_multifactor(H, right, p, target);
    out.insert(out.end(), lres.begin(), lres.end());
    out.insert(out.end(), rres.begin(), rres.end());
    return out;
}

// factor a primitive squarefree integer polynomial, deg >= 1
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    int n = (int)f.size() - 1;
    if (n == 1) return {f};
    // choose prime
    static const int64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                     59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                                     127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                     191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};
    int64_t p = 0;
    GfPoly fp;
    for (int64_t cand : primes) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), (unsigned long)cand)) continue;
        GfPoly g;
        for (const auto& c : f) {
            mpz_class r = c % cand;
            if (r < 0) r += cand;
            g.push_back(r.get_si());
        }
        gf_trim(g);
        GfPoly d = gf_gcd(g, gf_derivative(g, cand), cand);
        if (d.size() == 1) { p = cand; fp = gf_monic(std::move(g), cand); break; }
    }
    require_internal(p != 0, "no usable small prime for factorization");

    auto modular = berlekamp(fp, p);
    if (modular.size() == 1) return {f};
    std::sort(modular.begin(), modular.end());

    // lift bound: |coef of any factor| <= 2^n * ||f||_1 * |lc| (generous Mignotte-style)
    mpz_class norm1 = 0;
    for (const auto& c : f) norm1 += abs(c);
    mpz_class bound = abs(f.back()) * norm1;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    mpz_class target = p;
    while (target <= 2 * bound) target *= p;

    auto lifted = hensel_multifactor(f, modular, mpz_class((long)p), target);
    for (auto& g : lifted) { // normalize to monic mod target
        mpz_class il;
        int ok = mpz_invert(il.get_mpz_t(), g.back().get_mpz_t(), target.get_mpz_t());
        require_internal(ok != 0, "hensel: non-invertible leading coefficient");
        for (auto& c : g) { c = c * il % target; if (c < 0) c += target; }
        z_trim(g);
    }

    // recombination
    std::vector<ZPoly> result;
    std::vector<ZPoly> pool = lifted;
    ZPoly rem = f;
    bool progress = true;
    while (pool.size() > 0) {
        if ((int)rem.size() - 1 == 0) break;
        progress = false;
        size_t r = pool.size();
        for (size_t take = 1; take <= r / 2 && !progress; ++take) {
            // enumerate subsets of size `take` via combination indices
            std::vector<size_t> idx(take);
            for (size_t i = 0; i < take; ++i) idx[i] = i;
            while (true) {
                // build candidate = lc(rem) * prod pool[idx] mod target, symmetric, primitive
                ZPoly cand{rem.back()};
                for (size_t i : idx) cand = zm_norm(z_mul(cand, pool[i]), target);
                for (auto& c : cand) c = z_sym(c, target);
                z_trim(cand);
                ZPoly cp = z_primitive(cand);
                ZPoly q;
                if (!cp.empty() && z_divide_exact(rem, cp, q)) {
                    result.push_back(cp);
                    rem = z_primitive(q);
                    std::vector<ZPoly> np;
                    for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) { ++k; continue; }
                        np.push_back(pool[i]);
                    }
                    pool = std::move(np);
                    progress = true;
                    break;
                }
                // next combination
                int pos = (int)take - 1;
                while (pos >= 0 && idx[pos] == r - take + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t j = pos + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!progress) break;
    }
    if ((int)rem.size() - 1 > 0) result.push_back(z_primitive(rem));
    return result;
}

RatPoly z_to_rat(const ZPoly& f) {
    RatPoly r;
    for (const auto& c : f) r.push_back(Rat(c));
    return r;
}

bool rp_less(const RatPoly& a, const RatPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace

std::vector<QFactor> squarefree_decompose_q(const RatPoly& p) {
    require(!rp_is_zero(p), "squarefree decomposition of the zero polynomial");
    RatPoly f = rp_monic(p);
    if (rp_deg(f) == 0) return {};
    // Yun's algorithm (char 0)
    std::vector<QFactor> out;
    RatPoly fp = rp_derivative(f);
    RatPoly a = rp_gcd(f, fp);
    RatPoly b = rp_divrem(f, a).first;
    RatPoly c = rp_divrem(fp, a).first;
    RatPoly d = rp_sub(c, rp_derivative(b));
    int i = 1;
    while (rp_deg(b) > 0) {
        RatPoly g = rp_gcd(b, d);
        if (rp_deg(g) > 0) out.push_back({rp_monic(g), i});
        b = rp_divrem(b, g).first;
        c = rp_divrem(d, g).first;
        d = rp_sub(c, rp_derivative(b));
        ++i;
    }
    return out;
}

std::vector<QFactor> factor_q(const RatPoly& p) {
    require(!rp_is_zero(p), "factorization of the zero polynomial");
    std::vector<QFactor> out;
    for (const auto& sq : squarefree_decompose_q(p)) {
        // clear denominators -> primitive integer polynomial
        mpz_class lcm_den = 1;
        for (const auto& c : sq.factor)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        ZPoly zf;
        for (const auto& c : sq.factor) zf.push_back(c.num() * (lcm_den / c.den()));
        zf = z_primitive(std::move(zf));
        for (const auto& irr : factor_squarefree_z(zf))
            out.push_back({rp_monic(z_to_rat(irr)), sq.multiplicity});
    }
    std::sort(out.begin(), out.end(),
              [](const QFactor& x, const QFactor& y) { return rp_less(x.factor, y.factor); });
    return out;
}

bool is_irreducible_q(const RatPoly& p) {
    if (rp_deg(p) < 1) return false;
    auto f = factor_q(p);
    return f.size() == 1 && f[0].multiplicity == 1 && rp_deg(f[0].factor) == rp_deg(p);
}

} // namespace polar
