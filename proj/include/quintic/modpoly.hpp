#pragma once

#include <utility>
#include <vector>

#include "quintic/poly.hpp"

namespace quintic {

// Dense polynomial over Z/m, constant coefficient first, coefficients in [0, m).
struct ModPoly {
    Int m;
    std::vector<Int> c;

    ModPoly() : m(0) {}
    explicit ModPoly(Int modulus) : m(std::move(modulus)) {}

    void normalize() {
        for (auto& a : c) a = mod_pos(a, m);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return 0;
        return c[static_cast<size_t>(i)];
    }
    const Int& lc() const {
        if (is_zero()) throw InvalidInputError("ModPoly::lc of zero");
        return c.back();
    }
    bool operator==(const ModPoly& o) const { return m == o.m && c == o.c; }
    bool operator<(const ModPoly& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return c < o.c;
    }
    IntPoly lift() const {
        IntPoly f;
        f.c = c;
        f.normalize();
        return f;
    }
};

inline ModPoly make_mod(const IntPoly& f, const Int& m) {
    if (m < 2) throw InvalidInputError("make_mod: modulus must be >= 2");
    ModPoly r(m);
    r.c = f.c;
    r.normalize();
    return r;
}

inline ModPoly mp_from_coeffs(const Int& m, std::vector<Int> c) {
    ModPoly r(m);
    r.c = std::move(c);
    r.normalize();
    return r;
}

inline ModPoly mp_x(const Int& m) { return mp_from_coeffs(m, {0, 1}); }

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.m);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

inline ModPoly mp_scale(const Int& s, const ModPoly& a) {
    ModPoly r = a;
    for (auto& x : r.c) x *= s;
    r.normalize();
    return r;
}

// division with remainder; requires lc(b) invertible mod m
inline std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw InvalidInputError("mp_divrem: division by zero");
    ModPoly q(a.m), r = a;
    Int inv = inv_mod(b.lc(), a.m);
    long db = b.degree();
    if (r.degree() >= db) q.c.assign(static_cast<size_t>(r.degree() - db) + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        Int t = mod_pos(r.lc() * inv, a.m);
        q.c[static_cast<size_t>(k)] = t;
        for (long i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(k + i);
            r.c[idx] = mod_pos(r.c[idx] - t * b.c[static_cast<size_t>(i)], a.m);
        }
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

inline ModPoly mp_rem(const ModPoly& a, const ModPoly& b) { return mp_divrem(a, b).second; }
inline ModPoly mp_quo(const ModPoly& a, const ModPoly& b) { return mp_divrem(a, b).first; }

inline ModPoly mp_monic(const ModPoly& a) {
    if (a.is_zero()) return a;
    Int inv = inv_mod(a.lc(), a.m);
    return mp_scale(inv, a);
}

// monic gcd over a prime field
inline ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_rem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return mp_monic(a);
}

inline ModPoly mp_powmod(ModPoly base, Int e, const ModPoly& mod) {
    ModPoly r = mp_from_coeffs(base.m, {1});
    base = mp_rem(base, mod);
    while (e > 0) {
        if (e % 2 == 1) r = mp_rem(mp_mul(r, base), mod);
        base = mp_rem(mp_mul(base, base), mod);
        e /= 2;
    }
    return r;
}

inline ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r(a.m);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = Int(i) * a.c[i];
    r.normalize();
    return r;
}

inline Int mp_eval(const ModPoly& a, const Int& x) {
    Int r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = mod_pos(r * x + a.c[i], a.m);
    return r;
}

// ---- factorization over F_p ---------------------------------------------------

namespace detail {

// squarefree decomposition in characteristic p: list of (factor, multiplicity)
inline void sqfree_decompose(const ModPoly& f, const Int& p, long outer_mult,
                             std::vector<std::pair<ModPoly, long>>& out) {
    ModPoly fp = mp_derivative(f);
    if (fp.is_zero()) {
        // f is a polynomial in x^p; take the p-th root (Frobenius fixes F_p)
        if (f.degree() == 0) return;
        ModPoly u(p);
        long pd = p.convert_to<long>();
        u.c.assign(static_cast<size_t>(f.degree() / pd) + 1, 0);
        for (long i = 0; i <= f.degree(); ++i) {
            if (f.coeff(i) != 0) {
                if (i % pd != 0) throw InternalError("sqfree: vanishing derivative but not a p-th power");
                u.c[static_cast<size_t>(i / pd)] = f.coeff(i);
            }
        }
        u.normalize();
        sqfree_decompose(u, p, outer_mult * pd, out);
        return;
    }
    ModPoly c = mp_gcd(f, fp);
    ModPoly w = mp_quo(f, c);
    long i = 1;
    while (w.degree() > 0) {
        ModPoly y = mp_gcd(w, c);
        ModPoly z = mp_quo(w, y);
        if (z.degree() > 0) out.push_back({mp_monic(z), outer_mult * i});
        ++i;
        w = y;
        c = mp_quo(c, y);
    }
    if (c.degree() > 0) sqfree_decompose(c, p, outer_mult, out);
}

// equal-degree splitting (Cantor-Zassenhaus); f monic squarefree, all factors degree d
inline void edf(const ModPoly& f, const Int& p, long d, Rng& rng, std::vector<ModPoly>& out) {
    long n = f.degree();
    if (n == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    while (true) {
        ModPoly a(p);
        a.c.resize(static_cast<size_t>(n), 0);
        for (auto& x : a.c) x = rng.below(p);
        a.normalize();
        if (a.degree() < 1) continue;
        ModPoly g = mp_gcd(a, f);
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, p, d, rng, out);
            edf(mp_quo(f, g), p, d, rng, out);
            return;
        }
        ModPoly b(p);
        if (p == 2) {
            // trace map over F_2
            b = a;
            ModPoly t = a;
            for (long i = 1; i < d; ++i) {
                t = mp_rem(mp_mul(t, t), f);
                b = mp_add(b, t);
            }
        } else {
            Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
            b = mp_sub(mp_powmod(a, e, f), mp_from_coeffs(p, {1}));
        }
        g = mp_gcd(b, f);
        if (g.degree() > 0 && g.degree() < n) {
            edf(g, p, d, rng, out);
            edf(mp_quo(f, g), p, d, rng, out);
            return;
        }
    }
}

} // namespace detail

// Monic irreducible factors with multiplicities, canonically sorted.
// Requires p prime and f nonzero mod p.
inline std::vector<std::pair<ModPoly, long>> factor_mod_p(const IntPoly& f, const Int& p,
                                                          std::uint64_t seed = kDefaultSeed) {
    ModPoly fm = make_mod(f, p);
    if (fm.is_zero()) throw InvalidInputError("factor_mod_p: polynomial vanishes mod p");
    fm = mp_monic(fm);
    std::vector<std::pair<ModPoly, long>> sqf;
    detail::sqfree_decompose(fm, p, 1, sqf);
    Rng rng(seed ^ 0x517cc1b727220a95ull);
    std::vector<std::pair<ModPoly, long>> out;
    for (auto& [g0, mult] : sqf) {
        ModPoly g = g0;
        ModPoly x = mp_x(p);
        ModPoly h = x;
        long d = 0;
        while (g.degree() > 0) {
            ++d;
            if (2 * d > g.degree()) {
                out.push_back({g, mult}); // what remains is irreducible
                break;
            }
            h = mp_powmod(h, p, g);
            ModPoly G = mp_gcd(mp_sub(h, x), g);
            if (G.degree() > 0) {
                std::vector<ModPoly> pieces;
                detail::edf(G, p, d, rng, pieces);
                for (auto& piece : pieces) out.push_back({piece, mult});
                g = mp_quo(g, G);
                if (g.degree() == 0) break;
                h = mp_rem(h, g);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

// distinct roots of f mod p, sorted
inline std::vector<Int> roots_mod_p(const IntPoly& f, const Int& p,
                                    std::uint64_t seed = kDefaultSeed) {
    std::vector<Int> roots;
    for (auto& [g, mult] : factor_mod_p(f, p, seed)) {
        (void)mult;
        if (g.degree() == 1) roots.push_back(mod_pos(-g.coeff(0), p));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// multiset of factor degrees (with multiplicity), sorted ascending
inline std::vector<long> factor_degree_shape(const IntPoly& f, const Int& p,
                                             std::uint64_t seed = kDefaultSeed) {
    std::vector<long> shape;
    for (auto& [g, mult] : factor_mod_p(f, p, seed))
        for (long i = 0; i < mult; ++i) shape.push_back(g.degree());
    std::sort(shape.begin(), shape.end());
    return shape;
}

} // namespace quintic
