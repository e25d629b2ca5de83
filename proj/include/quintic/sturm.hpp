#pragma once

#include <vector>

#include "quintic/poly.hpp"

namespace quintic {

namespace detail {

struct RatPoly {
    std::vector<Rat> c;
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

inline RatPoly rat_from(const IntPoly& f) {
    RatPoly r;
    r.c.assign(f.c.begin(), f.c.end());
    return r;
}

inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        Rat t = a.c.back() / b.c.back();
        long k = a.degree() - db;
        for (long i = 0; i <= db; ++i)
            a.c[static_cast<size_t>(k + i)] -= t * b.c[static_cast<size_t>(i)];
        a.normalize();
    }
    return a;
}

inline int sign_at_plus_inf(const RatPoly& f) {
    return f.c.back() > 0 ? 1 : -1;
}
inline int sign_at_minus_inf(const RatPoly& f) {
    int s = sign_at_plus_inf(f);
    return (f.degree() % 2 == 0) ? s : -s;
}

} // namespace detail

// Number of distinct real roots of a squarefree polynomial with integer
// coefficients.  Rejects non-squarefree input, naming the repeated part.
inline long count_real_roots(const IntPoly& f) {
    if (f.degree() < 1) throw InvalidInputError("count_real_roots: degree must be >= 1");
    {
        // squarefree check over Q via the subresultant machinery
        Int d = discriminant(f);
        if (d == 0) {
            // exhibit the repeated factor for the error message
            IntPoly g = f, h = f.derivative();
            // integer gcd via primitive pseudo-remainders
            while (!h.is_zero()) {
                IntPoly r = detail::pseudo_rem(g, h);
                r = r.is_zero() ? r : r.primitive_part();
                g = h;
                h = r;
            }
            throw InvalidInputError("count_real_roots: input is not squarefree, repeated part " +
                                    poly_to_string(g.primitive_part()));
        }
    }
    std::vector<detail::RatPoly> chain;
    chain.push_back(detail::rat_from(f));
    chain.push_back(detail::rat_from(f.derivative()));
    while (chain.back().degree() > 0) {
        detail::RatPoly r = detail::rat_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        for (auto& x : r.c) x = -x;
        chain.push_back(std::move(r));
    }
    long vm = 0, vp_ = 0;
    int prev_m = 0, prev_p = 0;
    for (const auto& g : chain) {
        if (g.is_zero()) continue;
        int sm = detail::sign_at_minus_inf(g);
        int sp = detail::sign_at_plus_inf(g);
        if (prev_m != 0 && sm != prev_m) ++vm;
        if (prev_p != 0 && sp != prev_p) ++vp_;
        prev_m = sm;
        prev_p = sp;
    }
    return vm - vp_;
}

// Signature of a degree-n field given by a squarefree defining polynomial:
// returns the number of complex places i with r1 + 2*i = n.
inline int complex_places(const IntPoly& f) {
    long n = f.degree();
    long r1 = count_real_roots(f);
    if ((n - r1) % 2 != 0) throw InternalError("complex_places: parity violation");
    return static_cast<int>((n - r1) / 2);
}

} // namespace quintic
