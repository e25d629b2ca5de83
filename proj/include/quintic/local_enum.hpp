#pragma once

#include <mutex>
#include <optional>

#include "quintic/padic_roots.hpp"

namespace quintic {

// Isomorphism class of a finite extension of Qp of degree e*f <= 5.
struct LocalFieldClass {
    long e = 1;
    long f = 1;
    long disc_exp = 0; // valuation of the field discriminant
    long aut = 1;      // order of Aut(K/Qp)
    bool wild = false; // the totally ramified quintics over Q5
    long tame_u = 0;   // orbit label of the tame part (0 when unramified)
    IntPoly rep;       // defining polynomial; set for wild classes
    bool galois = false;
    bool star = false; // congruence flag of the eisenstein representative

    long degree() const { return e * f; }

    // canonical identity for sorting and equality
    std::string key() const {
        std::string k = std::to_string(degree()) + ":" + std::to_string(e) + ":" +
                        std::to_string(f) + ":" + std::to_string(tame_u);
        if (wild) k += ":w:" + poly_to_csv(rep);
        return k;
    }
    bool operator<(const LocalFieldClass& o) const { return key() < o.key(); }
};

// Tame classes (p does not divide e) of degree e*f <= max_degree over Qp.
// Classes with ramification e and residue degree f correspond to orbits of
// multiplication by p on Z/gcd(e, p^f - 1).
inline std::vector<LocalFieldClass> tame_field_classes(const Int& p, long max_degree = 5) {
    if (!is_probable_prime(p)) throw InvalidInputError("tame_field_classes: p must be prime");
    std::vector<LocalFieldClass> out;
    for (long e = 1; e <= max_degree; ++e) {
        if (Int(e) % p == 0) continue;
        for (long f = 1; e * f <= max_degree; ++f) {
            Int g = gcd_int(Int(e), pow_int(p, static_cast<unsigned long>(f)) - 1);
            long gl = g.convert_to<long>();
            std::vector<bool> seen(static_cast<size_t>(gl), false);
            for (long u = 0; u < gl; ++u) {
                if (seen[static_cast<size_t>(u)]) continue;
                long cur = u;
                do {
                    seen[static_cast<size_t>(cur)] = true;
                    cur = ((Int(cur) * p) % g).convert_to<long>();
                } while (cur != u);
                LocalFieldClass c;
                c.e = e;
                c.f = f;
                c.disc_exp = f * (e - 1);
                c.tame_u = u;
                long fixed = 0;
                for (long j = 0; j < f; ++j) {
                    Int pj = pow_int(p, static_cast<unsigned long>(j)) - 1;
                    if ((pj * u) % g == 0) ++fixed;
                }
                c.aut = gl * fixed;
                c.galois = (c.aut == e * f);
                out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::vector<LocalFieldClass> sort_wild(std::vector<LocalFieldClass> classes) {
    std::sort(classes.begin(), classes.end(), [](const LocalFieldClass& a, const LocalFieldClass& b) {
        return a.rep.c < b.rep.c;
    });
    return classes;
}

} // namespace detail

// The totally ramified quintic extensions of Q5.  Candidates run through
// eisenstein quintics with coefficients sparse-first; grouping uses exact
// root tests, and the mass identity sum 5^(-d)/#Aut = 5^(-4) certifies that
// the list is complete long before the scan space is exhausted.
inline std::vector<LocalFieldClass> enumerate_wild_quintics_q5() {
    std::vector<LocalFieldClass> classes;
    const Rat target(1, 625);
    Rat mass(0);

    // value lists, sparse-first: small magnitudes before large ones.
    // mid_vals covers every multiple of 5 mod 125 once; const_vals covers
    // every residue with valuation exactly 1.
    std::vector<Int> mid_vals; // nonzero choices for a1..a4
    for (long k = 1; k <= 12; ++k) {
        mid_vals.push_back(5 * k);
        mid_vals.push_back(-5 * k);
    }
    std::vector<Int> const_vals;
    for (long k = 1; k <= 12; ++k) {
        if (k == 5 || k == 10) continue; // keep v5(a0) = 1
        const_vals.push_back(5 * k);
        const_vals.push_back(-5 * k);
    }

    auto consider = [&](const IntPoly& cand) -> bool {
        long d = vp(discriminant(cand), 5);
        for (auto& cl : classes) {
            if (cl.disc_exp != d) continue;
            if (count_roots_in_extension(cand, cl.rep) > 0) return false; // known class
        }
        LocalFieldClass c;
        c.e = 5;
        c.f = 1;
        c.wild = true;
        c.disc_exp = d;
        c.rep = cand;
        c.aut = count_roots_in_extension(cand, cand);
        c.galois = (c.aut == 5);
        c.star = star_condition(cand);
        classes.push_back(c);
        mass += Rat(1, pow_int(5, static_cast<unsigned long>(d)) * c.aut);
        return mass == target;
    };

    bool complete = false;
    // weight = number of nonzero middle coefficients, grown last
    std::vector<std::vector<int>> masks_by_weight(5);
    for (int mask = 0; mask < 16; ++mask)
        masks_by_weight[static_cast<size_t>(__builtin_popcount(static_cast<unsigned>(mask)))]
            .push_back(mask);

    for (int w = 0; w <= 4 && !complete; ++w) {
        for (int mask : masks_by_weight[static_cast<size_t>(w)]) {
            if (complete) break;
            std::vector<int> pos; // indices (1..4) of the nonzero middles
            for (int b = 0; b < 4; ++b)
                if (mask & (1 << b)) pos.push_back(b + 1);
            std::vector<size_t> choice(pos.size(), 0);
            while (!complete) {
                IntPoly cand;
                cand.c.assign(6, Int(0));
                cand.c[5] = 1;
                for (size_t i = 0; i < pos.size(); ++i)
                    cand.c[static_cast<size_t>(pos[i])] = mid_vals[choice[i]];
                for (const Int& a0 : const_vals) {
                    cand.c[0] = a0;
                    IntPoly probe = cand;
                    probe.normalize();
                    if (consider(probe)) {
                        complete = true;
                        break;
                    }
                }
                // odometer over the nonzero value lists
                size_t i = 0;
                for (; i < choice.size(); ++i) {
                    if (choice[i] + 1 < mid_vals.size()) {
                        ++choice[i];
                        for (size_t j = 0; j < i; ++j) choice[j] = 0;
                        break;
                    }
                }
                if (i == choice.size()) break; // this mask is exhausted
            }
        }
    }
    if (!complete)
        throw InternalError("enumerate_wild_quintics_q5: scan exhausted with mass " +
                            decimal_string(mass, 10) + " short of 1/625");
    return detail::sort_wild(std::move(classes));
}

// cached copy; the enumeration is deterministic
inline const std::vector<LocalFieldClass>& wild_quintics_q5() {
    static std::vector<LocalFieldClass> cached = enumerate_wild_quintics_q5();
    return cached;
}

// All isomorphism classes of local fields of degree <= 5 over Qp.
// For p in {2, 3} only the tame ones are listed (wild_complete tells).
struct LocalFieldInventory {
    std::vector<LocalFieldClass> classes;
    bool wild_complete = true;
};

inline LocalFieldInventory local_field_inventory(const Int& p) {
    LocalFieldInventory inv;
    inv.classes = tame_field_classes(p, 5);
    if (p == 5) {
        for (const auto& c : wild_quintics_q5()) inv.classes.push_back(c);
    } else if (p == 2 || p == 3) {
        inv.wild_complete = false; // degree 2,3,4 wild extensions are out of scope
    }
    return inv;
}

// ---- etale algebras of rank 5 ---------------------------------------------------

struct EtaleClass {
    std::vector<std::pair<LocalFieldClass, long>> components; // (class, multiplicity)
    long disc_exp = 0;
    Int total_aut = 1; // prod |Aut|^m * m! over components
    SplittingType splitting;

    bool is_field() const { return components.size() == 1 && components[0].second == 1; }
};

namespace detail {

inline void build_etale(const std::vector<LocalFieldClass>& fields, size_t idx, long remaining,
                        std::vector<std::pair<LocalFieldClass, long>>& cur,
                        std::vector<EtaleClass>& out) {
    if (remaining == 0) {
        EtaleClass ec;
        ec.components = cur;
        for (auto& [c, m] : cur) {
            ec.disc_exp += c.disc_exp * m;
            Int fact = 1;
            for (long i = 2; i <= m; ++i) fact *= i;
            ec.total_aut *= pow_int(Int(c.aut), static_cast<unsigned long>(m)) * fact;
            for (long i = 0; i < m; ++i) ec.splitting.push_back({c.e, c.f});
        }
        std::sort(ec.splitting.begin(), ec.splitting.end());
        out.push_back(ec);
        return;
    }
    if (idx == fields.size()) return;
    long d = fields[idx].degree();
    build_etale(fields, idx + 1, remaining, cur, out); // multiplicity 0
    for (long m = 1; m * d <= remaining; ++m) {
        cur.push_back({fields[idx], m});
        build_etale(fields, idx + 1, remaining - m * d, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// Every rank-5 etale algebra class over Qp.  Complete for p = 5 and p >= 7;
// p in {2, 3} would need the wild quadratic/cubic/quartic fields and is
// rejected here (mass_subset supports tame-only conditions at those primes).
inline std::vector<EtaleClass> etale_quintic_classes(const Int& p) {
    LocalFieldInventory inv = local_field_inventory(p);
    if (!inv.wild_complete)
        throw UnsupportedPrimeError("etale_quintic_classes: complete inventory needs p = 5 or p >= 7, got p = " +
                                    p.str());
    std::vector<EtaleClass> out;
    std::vector<std::pair<LocalFieldClass, long>> cur;
    detail::build_etale(inv.classes, 0, 5, cur, out);
    return out;
}

// ---- admissible local conditions and masses --------------------------------------

struct LocalConditionSet {
    Int p;
    // nullopt admits every splitting type
    std::optional<std::vector<SplittingType>> admitted;
    enum class Refinement { None, GaloisTotallyRamified, StarTotallyRamified };
    Refinement refine = Refinement::None;
    std::string label;

    static LocalConditionSet all(const Int& p) { return {p, std::nullopt, Refinement::None, "all"}; }
    static LocalConditionSet inert(const Int& p) {
        return {p, std::vector<SplittingType>{{{1, 5}}}, Refinement::None, "inert"};
    }
    static LocalConditionSet totally_ramified(const Int& p) {
        return {p, std::vector<SplittingType>{{{5, 1}}}, Refinement::None, "totally-ramified"};
    }
    static LocalConditionSet not_totally_ramified(const Int& p) {
        LocalConditionSet c{p, std::nullopt, Refinement::None, "not-totally-ramified"};
        c.exclude_totally_ramified = true;
        return c;
    }
    static LocalConditionSet totally_ramified_galois() {
        return {Int(5), std::vector<SplittingType>{{{5, 1}}}, Refinement::GaloisTotallyRamified,
                "totally-ramified-galois"};
    }
    static LocalConditionSet totally_ramified_star() {
        return {Int(5), std::vector<SplittingType>{{{5, 1}}}, Refinement::StarTotallyRamified,
                "totally-ramified-star"};
    }

    bool exclude_totally_ramified = false;

    bool matches(const EtaleClass& ec) const {
        if (exclude_totally_ramified) {
            SplittingType tr{{5, 1}};
            if (ec.splitting == tr) return false;
        }
        if (admitted) {
            bool ok = false;
            for (const auto& t : *admitted)
                if (ec.splitting == t) { ok = true; break; }
            if (!ok) return false;
        }
        if (refine != Refinement::None) {
            if (!ec.is_field()) return false;
            const LocalFieldClass& c = ec.components[0].first;
            if (!c.wild) return false;
            if (refine == Refinement::GaloisTotallyRamified && !c.galois) return false;
            if (refine == Refinement::StarTotallyRamified && !c.star) return false;
        }
        return true;
    }

    // a condition is tame-safe when every admitted type avoids p | e
    bool tame_safe() const {
        if (!admitted || exclude_totally_ramified) return false;
        for (const auto& t : *admitted)
            for (const auto& part : t)
                if (Int(part.e) % p == 0) return false;
        return true;
    }
};

// closed form of the full mass at p
inline Rat mass_all_closed(const Int& p) {
    Int num = pow_int(p, 4) + pow_int(p, 3) + 2 * pow_int(p, 2) + 2 * p + 1;
    return Rat(num, pow_int(p, 4));
}

// weighted count sum p^(-disc) / #Aut over the classes matching the condition
inline Rat mass_subset(const LocalConditionSet& cond) {
    const Int& p = cond.p;
    std::vector<EtaleClass> classes;
    if (p == 2 || p == 3) {
        if (!cond.tame_safe())
            throw UnsupportedPrimeError(
                "mass_subset: at p = " + p.str() +
                " only conditions naming tame splitting types are supported");
        LocalFieldInventory inv = local_field_inventory(p);
        std::vector<std::pair<LocalFieldClass, long>> cur;
        detail::build_etale(inv.classes, 0, 5, cur, classes);
        // multisets containing no wild component cover all tame-type algebras
    } else {
        classes = etale_quintic_classes(p);
    }
    Rat total(0);
    for (const auto& ec : classes) {
        if (!cond.matches(ec)) continue;
        total += Rat(1, pow_int(p, static_cast<unsigned long>(ec.disc_exp)) * ec.total_aut);
    }
    return total;
}

inline Rat mass_subset(const Int& p, const LocalConditionSet& cond) {
    if (cond.p != p) throw InvalidInputError("mass_subset: prime mismatch");
    return mass_subset(cond);
}

// fraction of the full mass carried by the condition
inline Rat local_density_factor(const LocalConditionSet& cond) {
    return mass_subset(cond) / mass_all_closed(cond.p);
}

} // namespace quintic
