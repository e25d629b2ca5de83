#pragma once

#include <functional>

#include "quintic/local_enum.hpp"

namespace quintic {

// Exact enclosure of a limit value: the interval is
// [partial * tail_low, partial * tail_high].  For additive enclosures the
// convention is partial = 1 with the interval carried by the tail pair.
struct CertifiedValue {
    Rat partial = 1;
    Rat tail_low = 1;
    Rat tail_high = 1;
    long cutoff = 0;
    std::string method;

    Rat lo() const { return partial * tail_low; }
    Rat hi() const { return partial * tail_high; }
    Rat width() const { return hi() - lo(); }
    bool rounds_unambiguously(int digits) const {
        return round_decimal(lo(), digits) == round_decimal(hi(), digits);
    }
    Rat rounded(int digits) const {
        if (!rounds_unambiguously(digits))
            throw PrecisionError("CertifiedValue: rounding at " + std::to_string(digits) +
                                 " digits is ambiguous at cutoff " + std::to_string(cutoff));
        return round_decimal(lo(), digits);
    }
};

namespace detail {

// m(p) * p^4 = p^4 + p^3 + 2p^2 + 2p + 1; the per-prime euler factors below
// are all rational in this quantity
inline Int mass_scale(const Int& p) {
    return pow_int(p, 4) + pow_int(p, 3) + 2 * pow_int(p, 2) + 2 * p + 1;
}

inline std::vector<Int> primes_1_mod_5(long cutoff) {
    std::vector<Int> out;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        if (p > static_cast<std::uint64_t>(cutoff)) break;
        if (p % 5 == 1) out.push_back(p);
    }
    return out;
}

// sum_{n > P} n^(-4) <= 1/(3 P^3), exact rational bound
inline Rat quartic_tail(long P) { return Rat(1, 3 * pow_int(Int(P), 3)); }

// smallest convenient cutoff making c * quartic_tail(P) < 10^(-digits-3)
inline long quartic_cutoff(int digits, long c) {
    if (digits < 1 || digits > 12)
        throw InvalidInputError("quartic_cutoff: digits must be in [1, 12]");
    Int need = c * pow_int(10, static_cast<unsigned long>(digits) + 3) / 3;
    long P = (iroot(need, 3) + 2).convert_to<long>();
    return std::max<long>(P, 50);
}

} // namespace detail

// Density of fields with genus number one:
// (1 - 1/506875) * prod over p = 1 mod 5 of (1 - 1/(m(p) p^4)).
inline CertifiedValue genus_one_density(long cutoff) {
    if (cutoff < 11) throw InvalidInputError("genus_one_density: cutoff too small");
    CertifiedValue v;
    v.method = "genus-one";
    v.cutoff = cutoff;
    Int num = 506874, den = 506875;
    for (const Int& p : detail::primes_1_mod_5(cutoff)) {
        Int n1 = detail::mass_scale(p);
        num *= n1 - 1;
        den *= n1;
    }
    v.partial = Rat(num, den);
    v.tail_low = 1 - detail::quartic_tail(cutoff);
    v.tail_high = 1;
    return v;
}

// Average genus number over all quintic fields ordered by discriminant:
// (1 + 4/506875) * prod over p = 1 mod 5 of (1 + 4/(m(p) p^4)).
inline CertifiedValue average_genus_number(long cutoff) {
    if (cutoff < 11) throw InvalidInputError("average_genus_number: cutoff too small");
    CertifiedValue v;
    v.method = "average";
    v.cutoff = cutoff;
    Int num = 506879, den = 506875;
    for (const Int& p : detail::primes_1_mod_5(cutoff)) {
        Int n1 = detail::mass_scale(p);
        num *= n1 + 4;
        den *= n1;
    }
    v.partial = Rat(num, den);
    Rat s4 = 4 * detail::quartic_tail(cutoff);
    if (s4 >= 1) throw InvalidInputError("average_genus_number: cutoff too small for the tail bound");
    v.tail_low = 1;
    v.tail_high = 1 / (1 - s4);
    return v;
}

// Lower bound for the density of fields with genus number 5^k: force the
// first k primes = 1 mod 5 to be totally ramified and every other one not.
inline CertifiedValue genus_power_lower_bound(long k, long cutoff) {
    if (k < 0 || k > 20)
        throw InvalidInputError("genus_power_lower_bound: k must be in [0, 20]");
    std::vector<Int> forced;
    for (std::uint32_t limit = 1 << 12; forced.size() < static_cast<size_t>(k); limit *= 2) {
        forced.clear();
        for (std::uint32_t p : primes_up_to(limit)) {
            if (p % 5 == 1) forced.push_back(p);
            if (forced.size() == static_cast<size_t>(k)) break;
        }
    }
    if (!forced.empty()) cutoff = std::max<long>(cutoff, forced.back().convert_to<long>());
    if (cutoff < 11) throw InvalidInputError("genus_power_lower_bound: cutoff too small");
    CertifiedValue v;
    v.method = "lower-bound-5^" + std::to_string(k);
    v.cutoff = cutoff;
    Int num = 506874, den = 506875;
    for (const Int& p : detail::primes_1_mod_5(cutoff)) {
        Int n1 = detail::mass_scale(p);
        bool is_forced = false;
        for (const Int& q : forced)
            if (q == p) is_forced = true;
        if (!is_forced) num *= n1 - 1;
        den *= n1;
    }
    v.partial = Rat(num, den);
    v.tail_low = 1 - detail::quartic_tail(cutoff);
    v.tail_high = 1;
    return v;
}

// Leading constants of the quintic field count by signature:
// c_i * prod over all p of (1 + p^(-2) - p^(-4) - p^(-5)), with
// c = 1/240, 1/24, 1/16 for i = 0, 1, 2 complex places.
inline CertifiedValue field_count_constant(int i, long cutoff) {
    if (i < 0 || i > 2) throw InvalidInputError("field_count_constant: i must be 0, 1 or 2");
    if (cutoff < 7) throw InvalidInputError("field_count_constant: cutoff too small");
    CertifiedValue v;
    v.method = "count-constant-i" + std::to_string(i);
    v.cutoff = cutoff;
    Int num = 1, den = (i == 0) ? 240 : (i == 1) ? 24 : 16;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        if (p > static_cast<std::uint64_t>(cutoff)) break;
        Int P(p);
        Int p5 = pow_int(P, 5);
        num *= p5 + pow_int(P, 3) - P - 1;
        den *= p5;
    }
    v.partial = Rat(num, den);
    // sum_{p > P} (p^-2 - p^-4 - p^-5) < sum_{n > P} n^-2 < 1/P
    v.tail_low = 1;
    v.tail_high = Rat(cutoff, cutoff - 1);
    return v;
}

// Truncated inclusion-exclusion over conductor-like products from the prime
// set {5} union {p = 1 mod 5}: sum over squarefree f <= Y of
// prod_{p | f} (-1/(m*(p) p^4)), where m*(5) folds in the wild factor 5^4.
inline CertifiedValue truncated_sieve_sum(long Y) {
    if (Y < 5) throw InvalidInputError("truncated_sieve_sum: Y must be >= 5");
    std::vector<Int> qprimes{5};
    for (const Int& p : detail::primes_1_mod_5(Y)) qprimes.push_back(p);
    std::sort(qprimes.begin(), qprimes.end());
    std::vector<Rat> weights;
    for (const Int& p : qprimes)
        weights.push_back(p == 5 ? Rat(1, 506875) : Rat(1, detail::mass_scale(p)));

    Rat value(0), abs_sum(0);
    // DFS over squarefree products bounded by Y
    std::function<void(size_t, Int, Rat, int)> walk = [&](size_t idx, Int prod, Rat term, int parity) {
        value += parity > 0 ? term : Rat(-term);
        abs_sum += term;
        for (size_t j = idx; j < qprimes.size(); ++j) {
            if (prod * qprimes[j] > Y) break;
            walk(j + 1, prod * qprimes[j], term * weights[j], -parity);
        }
    };
    walk(0, Int(1), Rat(1), 1);

    // bound on the absolute value of the omitted part
    Rat prod_all(1);
    for (const Rat& w : weights) prod_all *= (1 + w);
    Rat tail = detail::quartic_tail(Y);
    Rat majorant = prod_all / (1 - tail) - abs_sum;

    CertifiedValue v;
    v.method = "sieve";
    v.cutoff = Y;
    v.partial = 1;
    v.tail_low = value - majorant;
    v.tail_high = value + majorant;
    return v;
}

// Density of quintic fields passing the arithmetic screen: local factors at
// 2, 5, 7 from the mass machinery times the genus-one style product.
inline CertifiedValue screen_density(long cutoff) {
    if (cutoff < 11) throw InvalidInputError("screen_density: cutoff too small");
    CertifiedValue v;
    v.method = "screen";
    v.cutoff = cutoff;
    Rat f2 = local_density_factor(LocalConditionSet::inert(Int(2)));
    Rat f5 = local_density_factor(LocalConditionSet::inert(Int(5)));
    Rat f7 = local_density_factor(LocalConditionSet::totally_ramified(Int(7)));
    Rat pre = f2 * f5 * f7;
    Int num = numerator(pre), den = denominator(pre);
    for (const Int& p : detail::primes_1_mod_5(cutoff)) {
        Int n1 = detail::mass_scale(p);
        num *= n1 - 1;
        den *= n1;
    }
    v.partial = Rat(num, den);
    v.tail_low = 1 - detail::quartic_tail(cutoff);
    v.tail_high = 1;
    return v;
}

// digit-targeting wrappers: pick the cutoff from the tail bound, then check
// that rounding is actually unambiguous (retrying helps only near a boundary)
namespace detail {

template <typename F>
CertifiedValue certified_digits(int digits, long c, F&& compute) {
    long P = quartic_cutoff(digits, c);
    for (int attempt = 0; attempt < 3; ++attempt) {
        CertifiedValue v = compute(P);
        if (v.rounds_unambiguously(digits)) return v;
        P *= 2;
    }
    throw PrecisionError("certified_digits: value sits on a rounding boundary");
}

} // namespace detail

inline CertifiedValue genus_one_density_digits(int digits) {
    return detail::certified_digits(digits, 1, [](long P) { return genus_one_density(P); });
}
inline CertifiedValue average_genus_number_digits(int digits) {
    return detail::certified_digits(digits, 8, [](long P) { return average_genus_number(P); });
}
inline CertifiedValue genus_power_lower_bound_digits(long k, int digits) {
    return detail::certified_digits(digits, 1, [k](long P) { return genus_power_lower_bound(k, P); });
}
inline CertifiedValue screen_density_digits(int digits) {
    // the value is ~5e-6, so target enough absolute width for leading digits
    return detail::certified_digits(digits, 1, [](long P) { return screen_density(P); });
}
inline CertifiedValue field_count_constant_digits(int i, int digits) {
    if (digits < 1 || digits > 7)
        throw InvalidInputError("field_count_constant_digits: digits must be in [1, 7]");
    long P = 100;
    for (int attempt = 0; attempt < 16; ++attempt) {
        CertifiedValue v = field_count_constant(i, P);
        if (v.width() * pow_int(10, static_cast<unsigned long>(digits) + 1) < 1 &&
            v.rounds_unambiguously(digits))
            return v;
        P *= 2;
        if (P > 400000)
            throw InvalidInputError("field_count_constant_digits: tail bound too weak for " +
                                    std::to_string(digits) + " digits");
    }
    throw PrecisionError("field_count_constant_digits: escalation exhausted");
}

} // namespace quintic
