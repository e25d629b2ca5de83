#pragma once

#include "quintic/localfields.hpp"

namespace quintic {

inline bool is_eisenstein_at(const IntPoly& f, const Int& p) {
    if (f.degree() < 1 || !f.monic()) return false;
    if (f.coeff(0) % p != 0 || f.coeff(0) % (p * p) == 0) return false;
    for (long i = 1; i < f.degree(); ++i)
        if (f.coeff(i) % p != 0) return false;
    return true;
}

// Congruence test on a monic Eisenstein-at-5 quintic x^5 + a4 x^4 + ... + a0:
// a1, a2, a3 and a4 + a0 all divisible by 25.
inline bool star_condition(const IntPoly& g) {
    if (g.degree() != 5 || !g.monic())
        throw InvalidInputError("star_condition: monic quintic required");
    if (!is_eisenstein_at(g, 5))
        throw InvalidInputError("star_condition: polynomial is not eisenstein at 5");
    return g.coeff(1) % 25 == 0 && g.coeff(2) % 25 == 0 && g.coeff(3) % 25 == 0 &&
           (g.coeff(4) + g.coeff(0)) % 25 == 0;
}

namespace detail {

// characteristic polynomial of w(theta) in Q[x]/(f), computed as
// Res_y(f(y), x - w(y)) by evaluation at deg(f)+1 points and interpolation.
inline IntPoly charpoly_of_element(const IntPoly& f, const IntPoly& w) {
    long n = f.degree();
    std::vector<Rat> xs, ys;
    for (long k = 0; k <= n; ++k) {
        // Res_y(f(y), k - w(y)) as an integer
        IntPoly g = IntPoly::constant(Int(k)) - w;
        Int r = resultant(f, g);
        // Res_y(f, g) with deg g = deg w: sign convention keeps the monic
        // charpoly: Res_y(f(y), x - w(y)) = prod (x - w(root))
        xs.push_back(Rat(k));
        ys.push_back(Rat(r));
    }
    // Lagrange interpolation, exact
    std::vector<Rat> coef(static_cast<size_t>(n) + 1, Rat(0));
    for (size_t i = 0; i < xs.size(); ++i) {
        // basis poly prod_{j != i} (x - xs[j]) / (xs[i] - xs[j])
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) {
                nb[t + 1] += basis[t];
                nb[t] -= xs[j] * basis[t];
            }
            basis = nb;
            denom *= (xs[i] - xs[j]);
        }
        Rat scale = ys[i] / denom;
        for (size_t t = 0; t < basis.size(); ++t) coef[t] += scale * basis[t];
    }
    IntPoly out;
    for (auto& c : coef) {
        Int num = boost::multiprecision::numerator(c);
        Int den = boost::multiprecision::denominator(c);
        if (den != 1) throw InternalError("charpoly_of_element: non-integer coefficient");
        out.c.push_back(num);
    }
    out.normalize();
    if (out.degree() != n) throw InternalError("charpoly_of_element: degree dropped");
    if (out.lc() < 0) out = -out;
    if (!out.monic()) throw InternalError("charpoly_of_element: not monic");
    return out;
}

} // namespace detail

// For f monic quintic, irreducible, with 5 totally ramified: returns a monic
// quintic, eisenstein at 5, generating the same 5-adic (equivalently global)
// field.  Strategy: refine an integer center a with v5(f(a)) not a multiple
// of 5 if possible; otherwise pass to a small power of (theta - a) divided by
// a power of 5, whose characteristic polynomial is eisenstein.
inline IntPoly eisenstein_generator_at_5(const IntPoly& f) {
    const Int five(5);
    if (f.degree() != 5 || !f.monic())
        throw InvalidInputError("eisenstein_generator_at_5: monic quintic required");
    if (!is_totally_ramified(f, five))
        throw InvalidInputError("eisenstein_generator_at_5: 5 is not totally ramified");
    if (is_eisenstein_at(f, five)) return f;

    // the reduction is a 5th power of one linear factor; start at its root
    auto factors = factor_mod_p(f, five);
    if (factors.size() != 1 || factors[0].first.degree() != 1 || factors[0].second != 5)
        throw InternalError("eisenstein_generator_at_5: reduction is not (x-r)^5");
    Int a = mod_pos(-factors[0].first.coeff(0), five);

    for (int round = 0; round < 64; ++round) {
        IntPoly g = f.shift(a);
        long H = vp(g.coeff(0), five); // = v_pi(theta - a) since conjugates share valuation
        if (H % 5 != 0) {
            if (H == 1) return g;
            // i*H = 1 + 5j; (theta-a)^i / 5^j is a uniformizer
            long i = 0;
            for (long cand = 1; cand < 5; ++cand)
                if ((cand * H) % 5 == 1) i = cand;
            long j = (i * H - 1) / 5;
            IntPoly w; // (y - a)^i
            w.c = {Int(1)};
            IntPoly lin({-a, 1});
            for (long t = 0; t < i; ++t) w = w * lin;
            IntPoly D = detail::charpoly_of_element(f, w);
            // C(x) = D(5^j x) / 5^(5j)
            IntPoly C = D.scale_arg(pow_int(five, static_cast<unsigned long>(j)));
            Int denom = pow_int(five, static_cast<unsigned long>(5 * j));
            for (auto& c : C.c) {
                Int q = c / denom;
                if (q * denom != c)
                    throw InternalError("eisenstein_generator_at_5: scaling left a remainder");
                c = q;
            }
            C.normalize();
            if (!is_eisenstein_at(C, five))
                throw InternalError("eisenstein_generator_at_5: candidate is not eisenstein");
            if (discriminant(C) == 0)
                throw InternalError("eisenstein_generator_at_5: candidate is not separable");
            return C;
        }
        // H = 5k: the residual at slope k must be a perfect 5th power (x - t0)^5;
        // push the center one level deeper
        long k = H / 5;
        Int pk = pow_int(five, static_cast<unsigned long>(k));
        Int t0(-1);
        for (Int t = 0; t < 5; ++t) {
            if (g.eval(t * pk) % pow_int(five, static_cast<unsigned long>(5 * k + 1)) == 0) {
                t0 = t;
                break;
            }
        }
        if (t0 < 0)
            throw InternalError("eisenstein_generator_at_5: no deeper center found");
        a += t0 * pk;
    }
    throw SearchExhaustedError("eisenstein_generator_at_5: center refinement exceeded 64 rounds");
}

} // namespace quintic
