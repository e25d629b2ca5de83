#pragma once

#include <array>
#include <cstdint>

#include "quintic/eisenstein.hpp"

namespace quintic {

namespace detail {

// Arithmetic in Z5[pi]/(h(pi)) for a monic quintic h eisenstein at 5.
// Elements are written on the power basis with coordinates mod 5^P; using
// 64-bit coordinates with 128-bit accumulation keeps this allocation-free.
struct EisensteinRing {
    static constexpr int kMaxP = 26; // 5^26 < 2^61

    int P = 0;                 // coordinate precision
    std::uint64_t pm = 0;      // 5^P
    std::array<std::uint64_t, 5> h{};      // h0..h4 reduced mod 5^P
    std::array<std::uint64_t, 5> pi_five{}; // pi^5 = -(h0 + h1 pi + ... + h4 pi^4)
    std::uint64_t inv_u0 = 0;  // inverse of h0/5 mod 5^P

    using Elem = std::array<std::uint64_t, 5>;

    EisensteinRing(const IntPoly& host, int precision_P) {
        if (precision_P < 2 || precision_P > kMaxP)
            throw PrecisionError("EisensteinRing: coordinate precision " +
                                 std::to_string(precision_P) + " out of range");
        P = precision_P;
        pm = 1;
        for (int i = 0; i < P; ++i) pm *= 5;
        Int m(pm);
        for (int i = 0; i < 5; ++i)
            h[static_cast<size_t>(i)] = mod_pos(host.coeff(i), m).convert_to<std::uint64_t>();
        for (int i = 0; i < 5; ++i)
            pi_five[static_cast<size_t>(i)] = (pm - h[static_cast<size_t>(i)]) % pm;
        Int u0 = mod_pos(host.coeff(0) / 5, m);
        inv_u0 = inv_mod(u0, m).convert_to<std::uint64_t>();
    }

    Elem zero() const { return Elem{0, 0, 0, 0, 0}; }
    Elem scalar(std::uint64_t a) const { return Elem{a % pm, 0, 0, 0, 0}; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        for (int i = 0; i < 5; ++i) {
            std::uint64_t s = a[i] + b[i];
            r[i] = s >= pm ? s - pm : s;
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r;
        for (int i = 0; i < 5; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pm - b[i];
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        unsigned __int128 c[9] = {};
        for (int i = 0; i < 5; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < 5; ++j)
                c[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
        }
        for (int k = 8; k >= 5; --k) {
            std::uint64_t ck = static_cast<std::uint64_t>(c[k] % pm);
            if (ck == 0) continue;
            for (int j = 0; j < 5; ++j)
                c[k - 5 + j] += static_cast<unsigned __int128>(ck) * pi_five[j];
        }
        Elem r;
        for (int i = 0; i < 5; ++i) r[i] = static_cast<std::uint64_t>(c[i] % pm);
        return r;
    }

    static long v5_u64(std::uint64_t a) {
        long v = 0;
        while (a % 5 == 0) { a /= 5; ++v; }
        return v;
    }

    // pi-adic valuation as far as the representation can see; values at or
    // beyond the cap mean "indistinguishable from zero here"
    long val_cap() const { return 5L * P; }
    long val(const Elem& a) const {
        long v = val_cap();
        for (int j = 0; j < 5; ++j)
            if (a[j] != 0) v = std::min(v, 5 * v5_u64(a[j]) + j);
        return v;
    }

    bool is_zero(const Elem& a) const {
        return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0 && a[4] == 0;
    }

    // exact division by pi; requires val(a) >= 1
    Elem div_pi(const Elem& a) const {
        // a = a0 + sum_{j>=1} a_j pi^j; a0 = 5*(a0/5) and 5/pi = -w/u0 with
        // w = pi^4 + h4 pi^3 + h3 pi^2 + h2 pi + h1
        if (a[0] % 5 != 0)
            throw InternalError("EisensteinRing::div_pi: value is a unit");
        Elem r{a[1], a[2], a[3], a[4], 0};
        std::uint64_t a05 = a[0] / 5;
        if (a05 != 0) {
            // t = (a0/5) * inv_u0 mod pm
            std::uint64_t t = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a05) * inv_u0) % pm);
            // subtract t*w
            Elem tw;
            std::uint64_t w[5] = {h[1], h[2], h[3], h[4], 1};
            for (int i = 0; i < 5; ++i)
                tw[i] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(t) * w[i]) % pm);
            r = sub(r, tw);
        }
        return r;
    }

    Elem mul_pi(const Elem& a) const {
        Elem shifted{0, a[0], a[1], a[2], a[3]};
        if (a[4] == 0) return shifted;
        Elem top;
        for (int i = 0; i < 5; ++i)
            top[i] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a[4]) * pi_five[i]) % pm);
        return add(shifted, top);
    }

    // inverse of a unit (val == 0) by Newton iteration z <- z(2 - az)
    Elem inv_unit(const Elem& a) const {
        if (a[0] % 5 == 0)
            throw InternalError("EisensteinRing::inv_unit: not a unit");
        Elem z = scalar(inv_mod(Int(a[0] % 5), Int(5)).convert_to<std::uint64_t>());
        Elem two = scalar(2);
        for (int i = 0; i < 12; ++i) {
            Elem az = mul(a, z);
            z = mul(z, sub(two, az));
        }
        return z;
    }

    // x / y where val(x) >= val(y); both nonzero at the working precision
    Elem divide(Elem x, Elem y) const {
        long vy = val(y);
        if (vy >= val_cap()) throw InternalError("EisensteinRing::divide: zero divisor");
        for (long i = 0; i < vy; ++i) {
            x = div_pi(x);
            y = div_pi(y);
        }
        return mul(x, inv_unit(y));
    }

    // Horner evaluation of an integer polynomial at a ring element
    Elem eval_poly(const std::vector<Elem>& coeffs, const Elem& x) const {
        Elem r = zero();
        for (size_t i = coeffs.size(); i-- > 0;) r = add(mul(r, x), coeffs[i]);
        return r;
    }

    std::vector<Elem> reduce_poly(const IntPoly& g) const {
        std::vector<Elem> out;
        Int m(pm);
        for (long i = 0; i <= g.degree(); ++i)
            out.push_back(scalar(mod_pos(g.coeff(i), m).convert_to<std::uint64_t>()));
        return out;
    }

    // canonical truncation of an element to pi-adic precision N:
    // coordinate j survives mod 5^ceil((N - j) / 5)
    Elem truncate(const Elem& a, long N) const {
        Elem r = a;
        for (int j = 0; j < 5; ++j) {
            long digits = (N - j + 4) / 5;
            if (digits < 0) digits = 0;
            if (digits >= P) continue;
            std::uint64_t mod = 1;
            for (long t = 0; t < digits; ++t) mod *= 5;
            r[j] %= mod;
        }
        return r;
    }
};

} // namespace detail

// Number of roots of g (monic, integer coefficients) in the ring of integers
// of the totally ramified quintic extension of Q5 cut out by the eisenstein
// polynomial host.  Digit-by-digit search with a certification step; raises
// PrecisionError when precision_N cannot separate or certify the survivors.
inline long find_roots_in_extension(const IntPoly& g, const IntPoly& host, long precision_N) {
    if (!is_eisenstein_at(host, 5) || host.degree() != 5)
        throw InvalidInputError("find_roots_in_extension: host must be a quintic eisenstein at 5");
    if (g.degree() < 1 || !g.monic())
        throw InvalidInputError("find_roots_in_extension: g must be monic of degree >= 1");
    long dh = vp(discriminant(host), 5);
    if (precision_N < 2 * dh + 1)
        throw InvalidInputError("find_roots_in_extension: precision below 2*" +
                                std::to_string(dh) + "+1");

    // coordinate headroom must grow with N, not sit at a constant offset:
    // certifying a root with derivative valuation s needs values readable up
    // to N + s + 5, and escalation only makes progress if the cap outpaces N
    int P = static_cast<int>(2 * precision_N / 5 + 4);
    detail::EisensteinRing R(host, P);
    using Elem = detail::EisensteinRing::Elem;
    std::vector<Elem> gc = R.reduce_poly(g);
    IntPoly gd = g.derivative();
    std::vector<Elem> gdc = R.reduce_poly(gd);

    // integral taylor rows g^(k)/k! for the ball viability test
    std::vector<std::vector<Elem>> taylor;
    {
        long deg = g.degree();
        for (long k = 1; k <= deg; ++k) {
            IntPoly tk;
            tk.c.assign(static_cast<size_t>(deg - k + 1), Int(0));
            for (long j = k; j <= deg; ++j) {
                Int b = 1; // binom(j, k)
                for (long i = 0; i < k; ++i) b = b * (j - i) / (i + 1);
                tk.c[static_cast<size_t>(j - k)] = b * g.coeff(j);
            }
            tk.normalize();
            taylor.push_back(R.reduce_poly(tk));
        }
    }

    struct Node {
        Elem r;
        long level;
    };
    std::vector<Node> frontier{{R.zero(), 0}};
    std::vector<Elem> certified;
    long cap = R.val_cap();

    // powers of pi for appending digits
    std::vector<Elem> pi_pow;
    {
        Elem cur = R.scalar(1);
        for (long i = 0; i <= precision_N; ++i) {
            pi_pow.push_back(cur);
            cur = R.mul_pi(cur);
        }
    }

    while (!frontier.empty()) {
        Node node = frontier.back();
        frontier.pop_back();
        Elem val_g = R.eval_poly(gc, node.r);
        long t = R.val(val_g);
        if (t < node.level) continue; // cannot be a root modulo pi^level
        Elem val_gd = R.eval_poly(gdc, node.r);
        long s = R.val(val_gd);
        if (s < node.level && t > 2 * s) {
            if (precision_N + s + 1 > cap - 5)
                throw PrecisionError("find_roots_in_extension: refinement headroom exhausted");
            // unique root in this ball; Newton-refine to the canonical value
            Elem r = node.r;
            for (int iter = 0; iter < 64; ++iter) {
                Elem fr = R.eval_poly(gc, r);
                long vf = R.val(fr);
                if (vf >= std::min(cap - 5, precision_N + s + 1)) break;
                Elem fd = R.eval_poly(gdc, r);
                r = R.sub(r, R.divide(fr, fd));
            }
            certified.push_back(R.truncate(r, precision_N));
            continue;
        }
        if (node.level >= precision_N)
            throw PrecisionError("find_roots_in_extension: survivor at depth " +
                                 std::to_string(precision_N) + " not certified");
        // t reading at the cap is fine: an exact hit keeps descending until
        // the derivative valuation drops below the level and certifies
        for (std::uint64_t digit = 0; digit < 5; ++digit) {
            Elem child = node.r;
            if (digit != 0) {
                Elem d = pi_pow[static_cast<size_t>(node.level)];
                Elem dd = d;
                for (std::uint64_t rep = 1; rep < digit; ++rep) dd = R.add(dd, d);
                child = R.add(child, dd);
            }
            long m = node.level + 1;
            long tv = R.val(R.eval_poly(gc, child));
            // the ball child + pi^m O can hold a root only if g(child) is at
            // least as divisible as the cheapest taylor term: a root theta
            // inside gives g(child) = -sum_k T_k(child) pi^(km) y^k
            long bound = cap;
            for (size_t k = 0; k < taylor.size(); ++k) {
                long term = R.val(R.eval_poly(taylor[k], child)) + static_cast<long>(k + 1) * m;
                bound = std::min(bound, term);
            }
            if (tv >= bound) frontier.push_back({child, m});
        }
        if (frontier.size() > 4096)
            throw InternalError("find_roots_in_extension: frontier blow-up");
    }

    // distinct certificates sit in disjoint balls, but double-check anyway
    std::sort(certified.begin(), certified.end());
    certified.erase(std::unique(certified.begin(), certified.end()), certified.end());
    return static_cast<long>(certified.size());
}

// Convenience wrapper with automatic precision escalation.
inline long count_roots_in_extension(const IntPoly& g, const IntPoly& host) {
    long dh = vp(discriminant(host), 5);
    long N = std::max<long>(2 * dh + 1, 12);
    for (int tries = 0; tries < 4; ++tries) {
        try {
            return find_roots_in_extension(g, host, N);
        } catch (const PrecisionError&) {
            N *= 2;
            if (2 * N / 5 + 4 > detail::EisensteinRing::kMaxP) throw;
        }
    }
    throw PrecisionError("count_roots_in_extension: escalation exhausted");
}

inline bool has_root_in_extension(const IntPoly& g, const IntPoly& host) {
    return count_roots_in_extension(g, host) > 0;
}

} // namespace quintic
