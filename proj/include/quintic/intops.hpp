#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

// plain value semantics (no expression templates) keeps mixed arithmetic,
// std::min/max and ternaries unsurprising
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    if (m <= 0) throw InvalidInputError("powmod: modulus must be positive");
    Int base = b % m;
    if (base < 0) base += m;
    return boost::multiprecision::powm(base, e, m);
}

// mod into [0, m)
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
    // extended Euclid; requires gcd(a, m) == 1
    Int old_r = mod_pos(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1)
        throw InvalidInputError("inv_mod: element not invertible, gcd = " + old_r.str());
    return mod_pos(old_s, m);
}

// p-adic valuation of a nonzero integer
inline long vp(Int a, const Int& p) {
    if (a == 0) throw InvalidInputError("vp: valuation of zero");
    long v = 0;
    a = abs_int(a);
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

// valuation, with v(a) = 0 when p does not divide a; still rejects a = 0
inline long vp_or_zero(const Int& a, const Int& p) {
    if (a == 0) throw InvalidInputError("vp_or_zero: valuation of zero");
    if (a % p != 0) return 0;
    return vp(a, p);
}

// strips p from a, returns the valuation
inline long remove_factor(Int& a, const Int& p) {
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

// Deterministic splitmix64-based generator.  We avoid std::uniform_int_distribution
// so streams are identical across standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform-ish below n (n > 0); modular reduction bias is irrelevant here
    Int below(const Int& n) {
        if (n <= 0) throw InvalidInputError("Rng::below: bound must be positive");
        unsigned words = static_cast<unsigned>((boost::multiprecision::msb(n) / 64) + 1);
        Int acc = 0;
        for (unsigned i = 0; i < words + 1; ++i) acc = (acc << 64) | Int(next());
        return acc % n;
    }
};

inline constexpr std::uint64_t kDefaultSeed = 20250515ull;

// ---- primes ----------------------------------------------------------------

namespace detail {
struct PrimeCache {
    std::mutex guard;
    std::vector<std::uint32_t> primes;
    std::uint32_t limit = 0;
};
inline PrimeCache& prime_cache() {
    static PrimeCache cache;
    return cache;
}
} // namespace detail

// all primes <= n; the cache grows on demand and is shared across threads,
// so callers get a stable copy
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    auto& cache = detail::prime_cache();
    std::lock_guard<std::mutex> lock(cache.guard);
    if (n > cache.limit) {
        std::uint32_t new_limit = std::max<std::uint32_t>(n, std::max<std::uint32_t>(2 * cache.limit, 1u << 16));
        std::vector<bool> sieve(new_limit + 1, true);
        cache.primes.clear();
        for (std::uint32_t i = 2; i <= new_limit; ++i) {
            if (sieve[i]) {
                cache.primes.push_back(i);
                for (std::uint64_t j = std::uint64_t(i) * i; j <= new_limit; j += i) sieve[j] = false;
            }
        }
        cache.limit = new_limit;
    }
    return cache.primes;
}

inline bool miller_rabin_round(const Int& n, const Int& a, const Int& d, long s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic below 3.3e24 via the fixed base set; for larger inputs the
// fixed bases plus 40 derived pseudorandom bases make error negligible.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    long s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int p : small)
        if (!miller_rabin_round(n, p, d, s)) return false;
    if (boost::multiprecision::msb(n) + 1 > 81) {
        Rng rng(kDefaultSeed ^ 0xA5A5A5A5ull);
        for (int i = 0; i < 40; ++i) {
            Int a = 2 + rng.below(n - 3);
            if (!miller_rabin_round(n, a, d, s)) return false;
        }
    }
    return true;
}

// floor of the k-th root
inline Int iroot(const Int& a, unsigned k) {
    if (a < 0) throw InvalidInputError("iroot: negative input");
    if (a == 0) return 0;
    if (k == 1) return a;
    long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
    Int x = Int(1) << (bits / k + 1);
    while (true) {
        // Newton step for x^k - a
        Int xk1 = pow_int(x, k - 1);
        Int nx = ((k - 1) * x * xk1 + a) / (k * xk1);
        if (nx >= x) break;
        x = nx;
    }
    while (pow_int(x, k) > a) --x;
    while (pow_int(x + 1, k) <= a) ++x;
    return x;
}

inline bool is_perfect_kth_power(const Int& a, unsigned k, Int* root = nullptr) {
    if (a < 0) return false;
    Int r = iroot(a, k);
    if (pow_int(r, k) == a) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// ---- integer factorization --------------------------------------------------

struct Factorization {
    std::vector<std::pair<Int, long>> primes; // sorted, exponents >= 1
    Int cofactor = 1;                         // 1 when complete, else composite remainder
    bool complete() const { return cofactor == 1; }
};

namespace detail {

inline Int pollard_brent(const Int& n, std::uint64_t seed, long budget) {
    // Brent's cycle variant; returns a nontrivial factor or 0 on budget exhaustion.
    if (n % 2 == 0) return 2;
    Rng rng(seed);
    for (int attempt = 0; attempt < 24; ++attempt) {
        Int y = 1 + rng.below(n - 1);
        Int c = 1 + rng.below(n - 1);
        Int m = 128;
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        long steps = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, r - k);
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs_int(x - y)) % n;
                }
                g = gcd_int(q, n);
                k += m;
                steps += static_cast<long>(lim);
                if (steps > budget) return 0;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd_int(abs_int(x - ys), n);
            }
        }
        if (g != n && g != 1) return g;
        // else retry with a fresh curve
    }
    return 0;
}

} // namespace detail

struct FactorBudget {
    std::uint32_t trial_bound = 1000000;
    long rho_steps = 400000;     // per composite
    std::uint64_t seed = kDefaultSeed;
};

inline Factorization factor_integer(Int n, const FactorBudget& budget = {}) {
    if (n == 0) throw InvalidInputError("factor_integer: zero input");
    Factorization out;
    n = abs_int(n);
    if (n == 1) return out;
    std::map<Int, long> found;
    for (std::uint32_t p : primes_up_to(budget.trial_bound)) {
        if (p > budget.trial_bound) break;
        if (Int(p) * p > n) break;
        long v = remove_factor(n, p);
        if (v > 0) found[p] += v;
        if (n == 1) break;
    }
    std::vector<std::pair<Int, long>> stack;
    if (n > 1) stack.push_back({n, 1});
    while (!stack.empty()) {
        auto [m, mult] = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            found[m] += mult;
            continue;
        }
        // perfect power first: rho behaves badly on p^k with p large
        bool split = false;
        for (unsigned k = 2; k <= 6 && !split; ++k) {
            Int r;
            if (is_perfect_kth_power(m, k, &r)) {
                stack.push_back({r, mult * static_cast<long>(k)});
                split = true;
            }
        }
        if (split) continue;
        Int d = detail::pollard_brent(m, budget.seed, budget.rho_steps);
        if (d == 0) {
            out.cofactor *= pow_int(m, static_cast<unsigned long>(mult));
            continue;
        }
        stack.push_back({d, mult});
        stack.push_back({m / d, mult});
    }
    for (auto& [p, e] : found) out.primes.push_back({p, e});
    return out;
}

// ---- exact decimal rendering -------------------------------------------------

// floor(r * 10^k) convenience
inline Int scaled_floor(const Rat& r, int k) {
    Int num = boost::multiprecision::numerator(r) * pow_int(10, static_cast<unsigned long>(k));
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

// round half away from zero to k decimal digits, returned as exact Rat
inline Rat round_decimal(const Rat& r, int k) {
    Int scale = pow_int(10, static_cast<unsigned long>(k));
    Rat shifted = r * scale;
    Int num = boost::multiprecision::numerator(shifted);
    Int den = boost::multiprecision::denominator(shifted);
    Int twice = 2 * num + (num >= 0 ? den : -den);
    Int q = twice / (2 * den);
    if (twice < 0 && q * 2 * den != twice) --q;
    return Rat(q, scale);
}

// fixed-point decimal string with k digits after the point (truncation toward -inf)
inline std::string decimal_string(const Rat& r, int k) {
    bool neg = r < 0;
    Rat a = neg ? Rat(-r) : r;
    Int scale = pow_int(10, static_cast<unsigned long>(k));
    Int scaled = scaled_floor(a, k);
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string s = ip.str();
    if (k > 0) {
        std::string frac = fp.str();
        if (frac.size() < static_cast<size_t>(k))
            frac.insert(frac.begin(), static_cast<size_t>(k) - frac.size(), '0');
        s += "." + frac;
    }
    if (neg && (ip != 0 || fp != 0)) s = "-" + s;
    return s;
}

} // namespace quintic
