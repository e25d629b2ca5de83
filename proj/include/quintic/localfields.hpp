#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quintic/modpoly.hpp"
#include "quintic/newton_polygon.hpp"

namespace quintic {

// One block of the prime decomposition: ramification index e, residue degree f.
struct SplittingPart {
    long e = 0;
    long f = 0;
    bool operator==(const SplittingPart& o) const { return e == o.e && f == o.f; }
    bool operator<(const SplittingPart& o) const {
        if (e != o.e) return e < o.e;
        return f < o.f;
    }
};

// canonical form: sorted by (e, f)
using SplittingType = std::vector<SplittingPart>;

inline std::string splitting_to_string(const SplittingType& st) {
    std::string s;
    for (size_t i = 0; i < st.size(); ++i) {
        if (i) s += " ";
        s += "(e=" + std::to_string(st[i].e) + ",f=" + std::to_string(st[i].f) + ")";
    }
    return s;
}

namespace detail {

// ---- exact arithmetic in Z[y]/(u), u monic of degree 1 or 2 -----------------
// Coefficients stay exact integers; valuations are read off coordinatewise,
// which is correct because u is irreducible mod p (unramified extension).

struct URing {
    Int p;
    IntPoly u; // monic
    long d;    // deg u
};

using UElem = std::vector<Int>; // length URing::d

inline UElem ue_zero(const URing& R) { return UElem(static_cast<size_t>(R.d), Int(0)); }

inline UElem ue_scalar(const URing& R, const Int& a) {
    UElem e = ue_zero(R);
    e[0] = a;
    return e;
}

inline bool ue_is_zero(const UElem& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline UElem ue_add(const UElem& a, const UElem& b) {
    UElem r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline UElem ue_mul(const URing& R, const UElem& a, const UElem& b) {
    size_t d = static_cast<size_t>(R.d);
    std::vector<Int> prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            prod[i + j] += a[i] * b[j];
    // reduce by monic u
    for (size_t k = 2 * d - 2; k >= d; --k) {
        Int t = prod[k];
        if (t == 0) continue;
        prod[k] = 0;
        for (size_t i = 0; i < d; ++i)
            prod[k - d + i] -= t * R.u.coeff(static_cast<long>(i));
        if (d == 1) break; // k would wrap
    }
    UElem r(d);
    for (size_t i = 0; i < d; ++i) r[i] = prod[i];
    return r;
}

constexpr long kValInfinity = 1L << 40;

inline long ue_val(const URing& R, const UElem& a) {
    long v = kValInfinity;
    for (const auto& x : a)
        if (x != 0) v = std::min(v, vp(x, R.p));
    return v;
}

// exact division by p^s
inline UElem ue_div_pow(const URing& R, const UElem& a, long s) {
    Int ps = pow_int(R.p, static_cast<unsigned long>(s));
    UElem r = a;
    for (auto& x : r) {
        Int q = x / ps;
        if (q * ps != x) throw InternalError("ue_div_pow: inexact division");
        x = q;
    }
    return r;
}

// image in the residue field, as a polynomial in y with coefficients in [0,p)
inline IntPoly ue_residue(const URing& R, const UElem& a) {
    IntPoly r;
    r.c.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i) r.c[i] = mod_pos(a[i], R.p);
    r.normalize();
    return r;
}

using UPoly = std::vector<UElem>; // coefficient of x^i at index i

inline UPoly upoly_from_int(const URing& R, const IntPoly& f) {
    UPoly g;
    for (long i = 0; i <= f.degree(); ++i) g.push_back(ue_scalar(R, f.coeff(i)));
    return g;
}

// G(x + delta)
inline UPoly upoly_shift(const URing& R, const UPoly& G, const UElem& delta) {
    UPoly r;
    for (size_t i = G.size(); i-- > 0;) {
        // r <- r*(x + delta) + G[i]
        UPoly nr(r.size() + 1, ue_zero(R));
        for (size_t j = 0; j < r.size(); ++j) {
            nr[j + 1] = ue_add(nr[j + 1], r[j]);
            nr[j] = ue_add(nr[j], ue_mul(R, delta, r[j]));
        }
        if (nr.empty()) nr.push_back(ue_zero(R));
        nr[0] = ue_add(nr[0], G[i]);
        r = std::move(nr);
    }
    return r;
}

// ---- residue field F_q, q = p^2, for residual factorization -----------------

struct Fq {
    Int p;
    IntPoly u; // monic degree 2, irreducible mod p
};

using FqElem = std::pair<Int, Int>; // a + b*y, both in [0, p)

inline FqElem fq_make(const Fq& K, const Int& a, const Int& b) {
    return {mod_pos(a, K.p), mod_pos(b, K.p)};
}
inline bool fq_is_zero(const FqElem& x) { return x.first == 0 && x.second == 0; }
inline FqElem fq_add(const Fq& K, const FqElem& x, const FqElem& y) {
    return {mod_pos(x.first + y.first, K.p), mod_pos(x.second + y.second, K.p)};
}
inline FqElem fq_sub(const Fq& K, const FqElem& x, const FqElem& y) {
    return {mod_pos(x.first - y.first, K.p), mod_pos(x.second - y.second, K.p)};
}
inline FqElem fq_mul(const Fq& K, const FqElem& x, const FqElem& y) {
    // (a + by)(c + dy) with y^2 = -u1*y - u0
    const Int& u0 = K.u.coeff(0);
    const Int& u1 = K.u.coeff(1);
    Int ac = x.first * y.first;
    Int bd = x.second * y.second;
    Int cross = x.first * y.second + x.second * y.first;
    return {mod_pos(ac - bd * u0, K.p), mod_pos(cross - bd * u1, K.p)};
}
inline FqElem fq_pow(const Fq& K, FqElem base, Int e) {
    FqElem r = fq_make(K, 1, 0);
    while (e > 0) {
        if (e % 2 == 1) r = fq_mul(K, r, base);
        base = fq_mul(K, base, base);
        e /= 2;
    }
    return r;
}
inline FqElem fq_inv(const Fq& K, const FqElem& x) {
    if (fq_is_zero(x)) throw InternalError("fq_inv: zero");
    Int q = K.p * K.p;
    return fq_pow(K, x, q - 2);
}
inline FqElem fq_neg(const Fq& K, const FqElem& x) {
    return {mod_pos(-x.first, K.p), mod_pos(-x.second, K.p)};
}

// ---- residual factorization reports ------------------------------------------

struct ResidualFactor {
    long deg = 0;
    long mult = 0;
    // root present when deg == 1 (value in the residue field as a poly in y)
    bool has_root = false;
    IntPoly root;          // deg <= 1, coefficients in [0, p)
    IntPoly psi;           // the irreducible factor itself when over F_p
};

// factor a monic residual over F_p
inline std::vector<ResidualFactor> factor_residual_fp(const IntPoly& rho, const Int& p) {
    std::vector<ResidualFactor> out;
    for (auto& [g, mult] : factor_mod_p(rho, p)) {
        ResidualFactor rf;
        rf.deg = g.degree();
        rf.mult = mult;
        rf.psi = g.lift();
        if (rf.deg == 1) {
            rf.has_root = true;
            rf.root = IntPoly({mod_pos(-g.coeff(0), p)});
        }
        out.push_back(rf);
    }
    return out;
}

// factor a monic residual of degree <= 2 over F_{p^2}
inline std::vector<ResidualFactor> factor_residual_fq2(const Fq& K, const std::vector<FqElem>& rho) {
    long m = static_cast<long>(rho.size()) - 1;
    std::vector<ResidualFactor> out;
    auto root_poly = [&](const FqElem& r) {
        IntPoly g;
        g.c = {r.first, r.second};
        g.normalize();
        return g;
    };
    if (m == 1) {
        FqElem inv = fq_inv(K, rho[1]);
        FqElem r = fq_neg(K, fq_mul(K, rho[0], inv));
        out.push_back({1, 1, true, root_poly(r), IntPoly()});
        return out;
    }
    if (m != 2) throw InternalError("factor_residual_fq2: unexpected degree " + std::to_string(m));
    FqElem inv = fq_inv(K, rho[2]);
    FqElem B = fq_mul(K, rho[1], inv);
    FqElem C = fq_mul(K, rho[0], inv);
    Int q = K.p * K.p;
    if (q <= 256) {
        std::vector<FqElem> roots;
        for (Int a = 0; a < K.p; ++a)
            for (Int b = 0; b < K.p; ++b) {
                FqElem t = fq_make(K, a, b);
                FqElem val = fq_add(K, fq_mul(K, t, fq_add(K, t, B)), C); // t^2 + Bt + C
                if (fq_is_zero(val)) roots.push_back(t);
            }
        if (roots.empty()) {
            out.push_back({2, 1, false, IntPoly(), IntPoly()});
        } else if (roots.size() == 2) {
            out.push_back({1, 1, true, root_poly(roots[0]), IntPoly()});
            out.push_back({1, 1, true, root_poly(roots[1]), IntPoly()});
        } else if (roots.size() == 1) {
            out.push_back({1, 2, true, root_poly(roots[0]), IntPoly()});
        } else {
            throw InternalError("factor_residual_fq2: root count " + std::to_string(roots.size()));
        }
        return out;
    }
    if (K.p == 2) throw InternalError("factor_residual_fq2: q>256 with p=2 is unreachable");
    // odd p: discriminant test
    FqElem four = fq_make(K, 4, 0);
    FqElem disc = fq_sub(K, fq_mul(K, B, B), fq_mul(K, four, C));
    if (fq_is_zero(disc)) {
        FqElem half = fq_inv(K, fq_make(K, 2, 0));
        FqElem r = fq_neg(K, fq_mul(K, B, half));
        out.push_back({1, 2, true, root_poly(r), IntPoly()});
        return out;
    }
    FqElem chi = fq_pow(K, disc, (q - 1) / 2);
    if (chi == fq_make(K, 1, 0)) {
        // two distinct roots; their values are never needed downstream
        out.push_back({1, 1, false, IntPoly(), IntPoly()});
        out.push_back({1, 1, false, IntPoly(), IntPoly()});
    } else {
        out.push_back({2, 1, false, IntPoly(), IntPoly()});
    }
    return out;
}

// ---- cluster analysis ----------------------------------------------------------

struct ClusterState {
    Int p;
    long rounds = 0;
    long round_cap = 0;
    std::vector<SplittingPart> parts;
};

// Analyze the part of G (monic over R) whose roots lie strictly closer than
// `floor` allows; fmult = [residue field of R : F_p].
inline void analyze_cluster(const URing& R, const UPoly& G, long fmult, const Rat& floor,
                            ClusterState& st) {
    // polygon points over the exact ring
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i < static_cast<long>(G.size()); ++i) {
        if (ue_is_zero(G[static_cast<size_t>(i)])) continue;
        pts.push_back({i, ue_val(R, G[static_cast<size_t>(i)])});
    }
    if (pts.empty() || pts.front().first != 0)
        throw InvalidInputError("splitting: exact root hit during cluster analysis; "
                                "input must be irreducible over Q");
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            Int cross = Int(b.first - a.first) * (pt.second - a.second) -
                        Int(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    bool emitted = false;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        long i1 = hull[s].first, v1 = hull[s].second;
        long i2 = hull[s + 1].first, v2 = hull[s + 1].second;
        Rat mu(Int(v1 - v2), Int(i2 - i1));
        if (!(mu > floor)) continue;
        long len = i2 - i1;
        Int h_num = boost::multiprecision::numerator(mu);
        Int e_den = boost::multiprecision::denominator(mu);
        long h = h_num.convert_to<long>();
        long eprime = e_den.convert_to<long>();
        long m = len / eprime;
        if (m * eprime != len) throw InternalError("analyze_cluster: segment length not divisible");

        // residual coefficients: rho[j] = residue of G[i1 + j*eprime] / p^(v1 - j*h)
        std::vector<IntPoly> rho_res;
        for (long j = 0; j <= m; ++j) {
            size_t idx = static_cast<size_t>(i1 + j * eprime);
            long target = v1 - j * h;
            const UElem& coef = G[idx];
            if (ue_is_zero(coef) || ue_val(R, coef) > target) {
                rho_res.push_back(IntPoly());
            } else {
                rho_res.push_back(ue_residue(R, ue_div_pow(R, coef, target)));
            }
        }

        std::vector<ResidualFactor> factors;
        if (R.d == 1) {
            IntPoly rho;
            for (long j = 0; j <= m; ++j) rho.c.push_back(rho_res[static_cast<size_t>(j)].coeff(0));
            rho.normalize();
            factors = factor_residual_fp(rho, R.p);
        } else {
            Fq K{R.p, R.u};
            std::vector<FqElem> rho;
            for (long j = 0; j <= m; ++j)
                rho.push_back(fq_make(K, rho_res[static_cast<size_t>(j)].coeff(0),
                                      rho_res[static_cast<size_t>(j)].coeff(1)));
            factors = factor_residual_fq2(K, rho);
        }

        for (const auto& rf : factors) {
            emitted = true;
            if (rf.mult == 1) {
                st.parts.push_back({eprime, rf.deg * fmult});
                continue;
            }
            if (eprime > 1)
                throw IrregularSplittingError(
                    "splitting at p=" + st.p.str() +
                    ": repeated residual factor on a fractional slope (depth " +
                    std::to_string(st.rounds) + "); a finer invariant is required");
            if (rf.deg == 1) {
                if (++st.rounds > st.round_cap)
                    throw IrregularSplittingError("splitting at p=" + st.p.str() +
                                                  ": refinement did not settle within " +
                                                  std::to_string(st.round_cap) + " rounds");
                // shift by root * p^h and climb above level h
                Int ph = pow_int(R.p, static_cast<unsigned long>(h));
                UElem delta = ue_zero(R);
                for (long i = 0; i <= rf.root.degree(); ++i)
                    delta[static_cast<size_t>(i)] = rf.root.coeff(i) * ph;
                analyze_cluster(R, upoly_shift(R, G, delta), fmult, Rat(h), st);
                continue;
            }
            if (rf.deg == 2 && R.d == 1) {
                if (++st.rounds > st.round_cap)
                    throw IrregularSplittingError("splitting at p=" + st.p.str() +
                                                  ": refinement did not settle within " +
                                                  std::to_string(st.round_cap) + " rounds");
                // repeated quadratic residual: pass to the unramified quadratic
                URing R2{R.p, rf.psi, 2};
                UPoly G2;
                for (const auto& coef : G) {
                    UElem e2 = ue_zero(R2);
                    e2[0] = coef[0];
                    G2.push_back(e2);
                }
                Int ph = pow_int(R.p, static_cast<unsigned long>(h));
                UElem delta = ue_zero(R2);
                delta[1] = ph; // y * p^h
                analyze_cluster(R2, upoly_shift(R2, G2, delta), fmult * 2, Rat(h), st);
                continue;
            }
            throw InternalError("analyze_cluster: repeated residual of degree " +
                                std::to_string(rf.deg) + " over an extension");
        }
    }
    if (!emitted)
        throw InternalError("analyze_cluster: no segment above the working level");
}

} // namespace detail

// Tests whether Z[x]/(f) is already maximal at p (Dedekind's criterion).
// Requires f monic.
inline bool dedekind_is_maximal_at(const IntPoly& f, const Int& p) {
    if (!f.monic()) throw InvalidInputError("dedekind_is_maximal_at: polynomial must be monic");
    auto factors = factor_mod_p(f, p);
    ModPoly gstar(p), hbar(p);
    gstar = mp_from_coeffs(p, {1});
    hbar = mp_from_coeffs(p, {1});
    for (auto& [g, mult] : factors) {
        gstar = mp_mul(gstar, g);
        for (long i = 1; i < mult; ++i) hbar = mp_mul(hbar, g);
    }
    // F = (lift(gstar)*lift(hbar) - f)/p
    IntPoly prod = gstar.lift() * hbar.lift();
    IntPoly diff = prod - f;
    IntPoly F;
    for (const auto& x : diff.c) {
        Int q = x / p;
        if (q * p != x) throw InternalError("dedekind: product does not reduce to f");
        F.c.push_back(q);
    }
    F.normalize();
    ModPoly Fbar = make_mod(F, p);
    ModPoly g1 = mp_gcd(Fbar, gstar);
    if (g1.is_zero() || g1.degree() == 0) return true;
    ModPoly g2 = mp_gcd(g1, hbar);
    return g2.degree() == 0;
}

// Decomposition type of p in the field Q[x]/(f); f monic and squarefree,
// irreducible over Q for field-level meaning.  Exact arithmetic throughout.
inline SplittingType splitting_type(const IntPoly& f, const Int& p,
                                    std::uint64_t seed = kDefaultSeed) {
    if (!f.monic()) throw InvalidInputError("splitting_type: polynomial must be monic");
    if (f.degree() < 1) throw InvalidInputError("splitting_type: degree must be >= 1");
    if (p < 2 || !is_probable_prime(p)) throw InvalidInputError("splitting_type: p must be prime");
    Int disc = discriminant(f);
    if (disc == 0) throw InvalidInputError("splitting_type: polynomial is not squarefree");

    SplittingType parts;
    auto factors = factor_mod_p(f, p, seed);

    bool maximal = (disc % p != 0) || dedekind_is_maximal_at(f, p);
    if (maximal) {
        // Kummer-Dedekind: read e and f off the mod-p factorization
        for (auto& [g, mult] : factors) parts.push_back({mult, g.degree()});
    } else {
        detail::ClusterState st;
        st.p = p;
        st.round_cap = vp(disc, p) + 4;
        for (auto& [g, mult] : factors) {
            if (mult == 1) {
                st.parts.push_back({1, g.degree()});
                continue;
            }
            long d0 = g.degree();
            if (d0 == 1) {
                detail::URing R{p, IntPoly({0, 1}), 1};
                Int r = mod_pos(-g.coeff(0), p);
                detail::UPoly G = detail::upoly_from_int(R, f.shift(r));
                detail::analyze_cluster(R, G, 1, Rat(0), st);
            } else if (d0 == 2) {
                detail::URing R{p, g.lift(), 2};
                detail::UPoly G0 = detail::upoly_from_int(R, f);
                detail::UElem y = detail::ue_zero(R);
                y[1] = 1;
                detail::UPoly G = detail::upoly_shift(R, G0, y);
                detail::analyze_cluster(R, G, 2, Rat(0), st);
            } else {
                throw InternalError("splitting_type: repeated factor of degree " +
                                    std::to_string(d0) + " in degree " +
                                    std::to_string(f.degree()));
            }
        }
        parts = st.parts;
    }
    std::sort(parts.begin(), parts.end());
    long total = 0;
    for (auto& pt : parts) total += pt.e * pt.f;
    if (total != f.degree())
        throw InternalError("splitting_type: parts sum to " + std::to_string(total) +
                            " at p=" + p.str());
    return parts;
}

// p stays prime in Q[x]/(f)
inline bool is_inert(const IntPoly& f, const Int& p, std::uint64_t seed = kDefaultSeed) {
    SplittingType st = splitting_type(f, p, seed);
    return st.size() == 1 && st[0].e == 1 && st[0].f == f.degree();
}

// p is totally ramified in Q[x]/(f)
inline bool is_totally_ramified(const IntPoly& f, const Int& p,
                                std::uint64_t seed = kDefaultSeed) {
    if (!f.monic()) throw InvalidInputError("is_totally_ramified: polynomial must be monic");
    long n = f.degree();
    // cheap exclusions first: the reduction must be a power of one linear factor,
    // and the discriminant must carry enough of p
    {
        ModPoly fm = make_mod(f, p);
        if (fm.degree() != n) throw InvalidInputError("is_totally_ramified: p divides lc");
        // f == (x - r)^n mod p forces f'(r) == 0 and f(r) == 0 for n >= 2; quick test via gcd
        Int disc = discriminant(f);
        if (disc == 0) throw InvalidInputError("is_totally_ramified: polynomial is not squarefree");
        if (n >= 2 && vp_or_zero(disc, p) < n - 1) return false;
    }
    SplittingType st = splitting_type(f, p, seed);
    return st.size() == 1 && st[0].e == n && st[0].f == 1;
}

} // namespace quintic
