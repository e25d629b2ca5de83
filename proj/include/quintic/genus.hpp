#pragma once

#include "quintic/eisenstein.hpp"
#include "quintic/irreducible.hpp"
#include "quintic/local_enum.hpp"
#include "quintic/sturm.hpp"

namespace quintic {

struct GenusOptions {
    FactorBudget factor_budget{};
    long cyclic_sample_bound = 200;
    long irreducibility_prime_budget = 25;
    std::uint64_t seed = kDefaultSeed;
};

struct CyclicityVerdict {
    bool cyclic = false;
    Int witness_prime = 0;            // unramified prime with a mixed shape (non-cyclic case)
    std::vector<long> witness_shape;  // its factor degree multiset
    long sample_bound = 0;            // how many good primes were scanned
    bool disc_is_fourth_power = false; // corroboration only; index^2 can break it
};

struct RamificationReport {
    Int disc = 0;
    std::vector<std::pair<Int, long>> disc_factors; // fully factored part
    Int unfactored_cofactor = 1;                    // composite remainder, if any (screened safe)
    std::vector<Int> counted_primes;                // primes contributing to t, ascending
    bool five_totally_ramified = false;
    std::optional<bool> star_at_5;                  // set when 5 is totally ramified
    std::optional<IntPoly> eisenstein_at_5;         // generator witnessing the flag
};

struct GenusCertificate {
    IntPoly poly;
    std::string irreducibility; // certificate string
    int complex_places = 0;     // i in r1 + 2i = 5
    RamificationReport ram;
    CyclicityVerdict cyclicity;
    long t = 0;
    Int genus = 1;
};

// Factor the discriminant and collect the ramified primes that matter:
// p = 5 when totally ramified with the eisenstein congruence, and the
// totally ramified p = 1 mod 5.  An unfactored cofactor is tolerated only
// when it provably hides no totally ramified prime (every prime in it
// exceeds the trial bound, so valuation >= 4 would make it >= bound^4).
inline RamificationReport ramification_report(const IntPoly& f, const GenusOptions& opts = {}) {
    RamificationReport rep;
    rep.disc = discriminant(f);
    if (rep.disc == 0)
        throw InvalidInputError("ramification_report: polynomial is not squarefree");
    Factorization fac = factor_integer(rep.disc, opts.factor_budget);
    rep.disc_factors = fac.primes;
    rep.unfactored_cofactor = fac.cofactor;
    if (fac.cofactor != 1) {
        Int bound4 = pow_int(Int(opts.factor_budget.trial_bound), 4);
        if (fac.cofactor >= bound4)
            throw FactorizationTimeoutError(
                "ramification_report: discriminant cofactor " + fac.cofactor.str() +
                " resists factorization and may hide a totally ramified prime");
        // else: every prime in the cofactor has valuation <= 3 in the
        // discriminant, so it cannot be totally ramified; safe to skip
    }
    for (auto& [p, e] : fac.primes) {
        (void)e;
        if (p == 5) {
            rep.five_totally_ramified = is_totally_ramified(f, p, opts.seed);
            if (rep.five_totally_ramified) {
                IntPoly g5 = eisenstein_generator_at_5(f);
                rep.eisenstein_at_5 = g5;
                rep.star_at_5 = star_condition(g5);
                if (*rep.star_at_5) rep.counted_primes.push_back(p);
            }
        } else if (p % 5 == 1) {
            if (is_totally_ramified(f, p, opts.seed)) rep.counted_primes.push_back(p);
        }
        // p = 2,3 mod 5 never contributes
    }
    std::sort(rep.counted_primes.begin(), rep.counted_primes.end());
    return rep;
}

// Sampled cyclicity test: an unramified prime whose factor degrees are mixed
// witnesses a non-normal (hence non-cyclic) field; if every scanned prime
// splits purely (all degrees 1, or one degree-5 factor), the field is cyclic.
inline CyclicityVerdict classify_cyclic(const IntPoly& f, const Int& disc,
                                        const GenusOptions& opts = {}) {
    CyclicityVerdict v;
    v.sample_bound = opts.cyclic_sample_bound;
    v.disc_is_fourth_power = is_perfect_kth_power(abs_int(disc), 4);
    long scanned = 0;
    size_t idx = 0;
    std::uint32_t sieve_limit = 1 << 14;
    std::vector<std::uint32_t> primes = primes_up_to(sieve_limit);
    while (scanned < opts.cyclic_sample_bound) {
        if (idx >= primes.size()) {
            sieve_limit *= 2;
            primes = primes_up_to(sieve_limit);
            continue;
        }
        Int P(primes[idx++]);
        if (disc % P == 0) continue; // ramified primes are excluded from the sample
        ++scanned;
        auto shape = factor_degree_shape(f, P, opts.seed);
        bool pure = true;
        for (long d : shape)
            if (d != shape.front()) pure = false;
        if (!pure) {
            v.cyclic = false;
            v.witness_prime = P;
            v.witness_shape = shape;
            return v;
        }
    }
    v.cyclic = true;
    return v;
}

// Genus number of the field cut out by a monic irreducible quintic:
// 5^t for non-cyclic fields and 5^(t-1) for cyclic ones, where t counts the
// totally ramified primes = 1 mod 5 plus 5 itself when its eisenstein
// generator satisfies the congruence condition.
inline GenusCertificate genus_number(const IntPoly& f, const GenusOptions& opts = {}) {
    GenusCertificate cert;
    cert.poly = f;
    if (f.degree() != 5 || !f.monic())
        throw InvalidInputError("genus_number: monic quintic required, got degree " +
                                std::to_string(f.degree()));
    IrreducibilityReport irr = is_irreducible_over_q(f, opts.irreducibility_prime_budget);
    if (irr.reducible())
        throw InvalidInputError("genus_number: polynomial is reducible (" + irr.certificate + ")");
    if (!irr.irreducible())
        throw InvalidInputError("genus_number: irreducibility could not be certified (" +
                                irr.certificate + ")");
    cert.irreducibility = irr.certificate;
    cert.complex_places = complex_places(f);
    cert.ram = ramification_report(f, opts);
    cert.cyclicity = classify_cyclic(f, cert.ram.disc, opts);
    cert.t = static_cast<long>(cert.ram.counted_primes.size());
    if (cert.cyclicity.cyclic && cert.t == 0)
        throw InternalError("genus_number: cyclic verdict with no counted ramification");
    long exponent = cert.cyclicity.cyclic ? cert.t - 1 : cert.t;
    cert.genus = pow_int(Int(5), static_cast<unsigned long>(exponent));
    return cert;
}

// Quick arithmetic screen: 2 and 5 inert, 7 totally ramified, and no
// totally ramified prime = 1 mod 5.
struct ScreenReport {
    bool inert_at_2 = false;
    bool inert_at_5 = false;
    bool totally_ramified_at_7 = false;
    bool no_totally_ramified_1_mod_5 = false;
    bool passes = false;
};

inline ScreenReport norm_euclidean_screen(const IntPoly& f, const GenusOptions& opts = {}) {
    if (f.degree() != 5 || !f.monic())
        throw InvalidInputError("norm_euclidean_screen: monic quintic required");
    ScreenReport rep;
    rep.inert_at_2 = is_inert(f, 2, opts.seed);
    if (!rep.inert_at_2) return rep;
    rep.inert_at_5 = is_inert(f, 5, opts.seed);
    if (!rep.inert_at_5) return rep;
    rep.totally_ramified_at_7 = is_totally_ramified(f, 7, opts.seed);
    if (!rep.totally_ramified_at_7) return rep;
    RamificationReport ram = ramification_report(f, opts);
    rep.no_totally_ramified_1_mod_5 = ram.counted_primes.empty();
    rep.passes = rep.no_totally_ramified_1_mod_5;
    return rep;
}

} // namespace quintic
