#pragma once

#include <vector>

#include "quintic/modpoly.hpp"

namespace quintic {

namespace detail {

// extended Euclid over F_p: s*a + t*b = 1; throws if a, b share a factor
inline void mp_bezout(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    const Int& p = a.m;
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = mp_from_coeffs(p, {1}), s1(p);
    ModPoly t0(p), t1 = mp_from_coeffs(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = mp_divrem(r0, r1);
        r0 = r1; r1 = r;
        ModPoly ns = mp_sub(s0, mp_mul(q, s1)); s0 = s1; s1 = ns;
        ModPoly nt = mp_sub(t0, mp_mul(q, t1)); t0 = t1; t1 = nt;
    }
    if (r0.degree() != 0)
        throw LiftingObstructionError("factors are not coprime mod p, common part " +
                                      poly_to_string(r0.lift()));
    Int inv = inv_mod(r0.coeff(0), p);
    s = mp_scale(inv, s0);
    t = mp_scale(inv, t0);
}

// one linear lifting pass: given f = g*h mod p^j (g monic), produce the
// correction so the product holds mod p^(j+1)
inline void lift_step(const IntPoly& f, IntPoly& g, IntPoly& h, const Int& p,
                      const Int& pj, const ModPoly& s, const ModPoly& t) {
    IntPoly e = f - g * h;
    IntPoly e_over;
    for (const auto& x : e.c) {
        Int q = x / pj;
        if (q * pj != x) throw InternalError("hensel: error term not divisible by p^j");
        e_over.c.push_back(q);
    }
    e_over.normalize();
    ModPoly em = make_mod(e_over, p);
    ModPoly gm = make_mod(g, p);
    ModPoly hm = make_mod(h, p);
    // delta_g = t*e mod g, delta_h = s*e + q*h where q = (t*e) div g
    auto [q, dg] = mp_divrem(mp_mul(t, em), gm);
    ModPoly dh = mp_add(mp_mul(s, em), mp_mul(q, hm));
    // dh must satisfy deg dh <= deg h; reduce defensively
    IntPoly dgl = dg.lift(), dhl = dh.lift();
    g = g + pj * dgl;
    h = h + pj * dhl;
}

} // namespace detail

// Lift a pairwise-coprime monic factorization of f mod p to one mod p^k.
// Requires: p prime, k >= 1, p does not divide lc(f), each factor monic mod p,
// and lc(f) * prod(factors) = f mod p.  Returns monic factors g_i with
// lc(f) * prod(g_i) = f mod p^k, coefficients normalized to [0, p^k).
inline std::vector<IntPoly> hensel_lift_factorization(const IntPoly& f, const Int& p,
                                                      unsigned k,
                                                      const std::vector<IntPoly>& factors) {
    if (f.is_zero()) throw InvalidInputError("hensel_lift_factorization: zero polynomial");
    if (k < 1) throw InvalidInputError("hensel_lift_factorization: k must be >= 1");
    if (f.lc() % p == 0)
        throw InvalidInputError("hensel_lift_factorization: p divides leading coefficient");
    if (factors.empty()) throw InvalidInputError("hensel_lift_factorization: no factors given");

    // check the product mod p
    {
        ModPoly prod = mp_from_coeffs(p, {f.lc()});
        for (const auto& g : factors) {
            ModPoly gm = make_mod(g, p);
            if (gm.is_zero() || gm.lc() != 1)
                throw InvalidInputError("hensel_lift_factorization: factor not monic mod p");
            prod = mp_mul(prod, gm);
        }
        if (!(prod == make_mod(f, p)))
            throw InvalidInputError("hensel_lift_factorization: product does not match f mod p");
    }

    Int pk = pow_int(p, k);
    // peel factors off one at a time with two-factor lifting
    std::vector<IntPoly> out;
    IntPoly rest = f;
    for (size_t idx = 0; idx < factors.size(); ++idx) {
        if (idx + 1 == factors.size()) {
            // the final cofactor, made monic mod p^k
            ModPoly rm = make_mod(rest, pk);
            rm = mp_scale(inv_mod(rm.lc(), pk), rm);
            out.push_back(rm.lift());
            break;
        }
        IntPoly g = make_mod(factors[idx], p).lift();
        // h = product of the remaining factors mod p, carrying lc(rest)
        ModPoly hm = mp_from_coeffs(p, {rest.lc()});
        for (size_t j = idx + 1; j < factors.size(); ++j)
            hm = mp_mul(hm, make_mod(factors[j], p));
        IntPoly h = hm.lift();
        ModPoly s(p), t(p);
        detail::mp_bezout(make_mod(g, p), hm, s, t);
        Int pj = p;
        for (unsigned j = 1; j < k; ++j) {
            detail::lift_step(rest, g, h, p, pj, s, t);
            pj *= p;
        }
        out.push_back(make_mod(g, pk).lift());
        rest = h;
    }
    return out;
}

// Lift a simple root r of f mod p (f'(r) nonzero mod p) to a root mod p^k.
inline Int hensel_lift_root(const IntPoly& f, const Int& p, unsigned k, const Int& r0) {
    Int r = mod_pos(r0, p);
    if (mod_pos(f.eval(r), p) != 0)
        throw InvalidInputError("hensel_lift_root: not a root mod p");
    Int fp = mod_pos(f.derivative().eval(r), p);
    if (fp == 0)
        throw LiftingObstructionError("hensel_lift_root: derivative vanishes mod p at root " + r.str());
    Int pj = p;
    for (unsigned j = 1; j < k; ++j) {
        Int pj1 = pj * p;
        Int e = mod_pos(f.eval(r), pj1);
        Int q = e / pj;
        Int delta = mod_pos(-q * inv_mod(f.derivative().eval(r), p), p);
        r = mod_pos(r + delta * pj, pj1);
        pj = pj1;
    }
    return r;
}

// All roots of f mod p^k (p prime, f nonzero mod p) found by lifting the
// simple roots and brute-forcing the singular ones level by level.
inline std::vector<Int> roots_mod_prime_power(const IntPoly& f, const Int& p, unsigned k) {
    std::vector<Int> level = roots_mod_p(f, p);
    Int pj = p;
    for (unsigned j = 1; j < k; ++j) {
        Int pj1 = pj * p;
        std::vector<Int> next;
        for (const Int& r : level) {
            for (Int c = 0; c < p; ++c) {
                Int cand = r + c * pj;
                if (mod_pos(f.eval(cand), pj1) == 0) next.push_back(cand);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
        pj = pj1;
    }
    return level;
}

} // namespace quintic
