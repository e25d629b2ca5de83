#pragma once

#include <optional>
#include <set>
#include <string>

#include "quintic/modpoly.hpp"

namespace quintic {

struct IrreducibilityReport {
    enum class Status { Irreducible, Reducible, Inconclusive };
    Status status = Status::Inconclusive;
    std::string certificate;                // human-readable reason
    std::optional<IntPoly> witness_factor;  // set when Reducible via a factor
    std::optional<Rat> witness_root;        // set when Reducible via a rational root

    bool irreducible() const { return status == Status::Irreducible; }
    bool reducible() const { return status == Status::Reducible; }
};

namespace detail {

// small positive divisors of |n| (including 1), capped
inline std::vector<Int> small_divisors(const Int& n, long cap = 400) {
    std::vector<Int> divs{1};
    Int m = abs_int(n);
    if (m == 0) return divs;
    Factorization fac = factor_integer(m, FactorBudget{100000, 20000, kDefaultSeed});
    // enumerate divisors of the factored part only
    for (auto& [p, e] : fac.primes) {
        size_t sz = divs.size();
        Int pw = 1;
        for (long i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < sz; ++j) {
                divs.push_back(divs[j] * pw);
                if (static_cast<long>(divs.size()) > cap) { std::sort(divs.begin(), divs.end()); return divs; }
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

} // namespace detail

// Proof-carrying irreducibility test over Q for a primitive polynomial.
// Tries, in order: squarefree check, rational roots, a prime-shift Eisenstein
// criterion, then factorization patterns modulo a budget of good primes.
inline IrreducibilityReport is_irreducible_over_q(const IntPoly& input, long prime_budget = 25) {
    IrreducibilityReport rep;
    if (input.degree() < 1)
        throw InvalidInputError("is_irreducible_over_q: degree must be >= 1");
    IntPoly f = input.primitive_part();
    long n = f.degree();
    if (n == 1) {
        rep.status = IrreducibilityReport::Status::Irreducible;
        rep.certificate = "degree 1";
        return rep;
    }

    Int disc = discriminant(f);
    if (disc == 0) {
        // repeated factor: find it the same way the root counter does
        IntPoly g = f, h = f.derivative();
        while (!h.is_zero()) {
            IntPoly r = detail::pseudo_rem(g, h);
            r = r.is_zero() ? r : r.primitive_part();
            g = h;
            h = r;
        }
        rep.status = IrreducibilityReport::Status::Reducible;
        rep.witness_factor = g.primitive_part();
        rep.certificate = "repeated factor " + poly_to_string(*rep.witness_factor);
        return rep;
    }

    // rational roots p/q with p | c0, q | lc (restricted to small divisors)
    if (f.coeff(0) == 0) {
        rep.status = IrreducibilityReport::Status::Reducible;
        rep.witness_root = Rat(0);
        rep.witness_factor = IntPoly({0, 1});
        rep.certificate = "rational root 0";
        return rep;
    }
    {
        auto nums = detail::small_divisors(f.coeff(0));
        auto dens = detail::small_divisors(f.lc());
        for (const Int& num : nums) {
            for (const Int& den : dens) {
                for (int sgn : {1, -1}) {
                    Rat r(sgn * num, den);
                    if (f.eval(r) == 0) {
                        rep.status = IrreducibilityReport::Status::Reducible;
                        rep.witness_root = r;
                        Int a = boost::multiprecision::numerator(r);
                        Int b = boost::multiprecision::denominator(r);
                        rep.witness_factor = IntPoly({-a, b});
                        rep.certificate = "rational root " + a.str() +
                                          (b == 1 ? "" : "/" + b.str());
                        return rep;
                    }
                }
            }
        }
    }

    // Eisenstein at primes dividing the non-leading content
    {
        Int g0 = 0;
        for (long i = 0; i < n; ++i) g0 = gcd_int(g0, f.coeff(i));
        if (g0 > 1) {
            Factorization fac = factor_integer(g0, FactorBudget{100000, 20000, kDefaultSeed});
            for (auto& [q, e] : fac.primes) {
                (void)e;
                if (f.lc() % q != 0 && f.coeff(0) % (q * q) != 0) {
                    rep.status = IrreducibilityReport::Status::Irreducible;
                    rep.certificate = "eisenstein at " + q.str();
                    return rep;
                }
            }
        }
    }

    // mod-p patterns: a single irreducible factor proves irreducibility, a
    // degree-set intersection of {0, n} across primes proves it as well
    std::set<long> possible; // degrees of a potential proper factor, intersected
    for (long d = 0; d <= n; ++d) possible.insert(d);
    std::vector<std::string> used;
    long tried = 0;
    for (std::uint32_t p : primes_up_to(1000)) {
        if (tried >= prime_budget) break;
        Int P(p);
        if (f.lc() % P == 0) continue;
        if (disc % P == 0) continue; // keep the reduction squarefree
        ++tried;
        auto factors = factor_mod_p(f, P);
        std::vector<long> degs;
        for (auto& [g, mult] : factors) {
            (void)mult;
            degs.push_back(g.degree());
        }
        if (degs.size() == 1) {
            rep.status = IrreducibilityReport::Status::Irreducible;
            rep.certificate = "irreducible mod " + P.str();
            return rep;
        }
        // subset sums of the factor degrees
        std::set<long> sums{0};
        for (long d : degs) {
            std::set<long> next = sums;
            for (long s : sums) next.insert(s + d);
            sums = next;
        }
        std::set<long> inter;
        for (long d : possible)
            if (sums.count(d)) inter.insert(d);
        possible = inter;
        used.push_back(P.str());
        if (possible.size() == 2) { // only {0, n} survive
            rep.status = IrreducibilityReport::Status::Irreducible;
            std::string list;
            for (size_t i = 0; i < used.size(); ++i) list += (i ? "," : "") + used[i];
            rep.certificate = "factor degree sets mod {" + list + "} intersect trivially";
            return rep;
        }
    }

    rep.status = IrreducibilityReport::Status::Inconclusive;
    rep.certificate = "no certificate within budget of " + std::to_string(prime_budget) + " primes";
    return rep;
}

} // namespace quintic
