#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/intops.hpp"

namespace quintic {

// Dense integer polynomial, constant coefficient first.
// Invariant: no trailing zero coefficients; the zero polynomial has c.empty().
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

    static IntPoly constant(const Int& a) { return IntPoly(std::vector<Int>{a}); }
    static IntPoly x() { return IntPoly({0, 1}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    const Int& lc() const {
        if (is_zero()) throw InvalidInputError("lc of zero polynomial");
        return c.back();
    }
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return 0;
        return c[static_cast<size_t>(i)];
    }
    bool monic() const { return !is_zero() && c.back() == 1; }

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& a : r.c) a = -a;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.normalize();
        return r;
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        IntPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.normalize();
        return r;
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        IntPoly r = a;
        for (auto& x : r.c) x *= s;
        r.normalize();
        return r;
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    IntPoly derivative() const {
        IntPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = Int(i) * c[i];
        r.normalize();
        return r;
    }

    // f(x + a)
    IntPoly shift(const Int& a) const {
        IntPoly r;
        for (size_t i = c.size(); i-- > 0;) {
            // r <- r*(x+a) + c[i]
            IntPoly nr;
            nr.c.assign(r.c.size() + 1, 0);
            for (size_t j = 0; j < r.c.size(); ++j) {
                nr.c[j + 1] += r.c[j];
                nr.c[j] += a * r.c[j];
            }
            if (nr.c.empty()) nr.c.push_back(0);
            nr.c[0] += c[i];
            nr.normalize();
            r = nr;
        }
        return r;
    }

    // f(s*x)
    IntPoly scale_arg(const Int& s) const {
        IntPoly r = *this;
        Int pw = 1;
        for (size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] *= pw;
            pw *= s;
        }
        r.normalize();
        return r;
    }

    Int content() const {
        Int g = 0;
        for (const auto& a : c) g = gcd_int(g, a);
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return *this;
        Int g = content();
        if (lc() < 0) g = -g;
        IntPoly r = *this;
        for (auto& a : r.c) a /= g;
        return r;
    }
};

namespace detail {

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    long db = b.degree();
    if (db < 0) throw InvalidInputError("pseudo_rem: division by zero polynomial");
    const Int& lb = b.lc();
    long e = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        long k = a.degree() - db;
        Int la = a.lc();
        for (auto& x : a.c) x *= lb;
        for (long i = 0; i <= db; ++i)
            a.c[static_cast<size_t>(k + i)] -= la * b.c[static_cast<size_t>(i)];
        a.normalize();
        --e;
    }
    if (e > 0) {
        Int f = pow_int(lb, static_cast<unsigned long>(e));
        for (auto& x : a.c) x *= f;
    }
    return a;
}

} // namespace detail

// Resultant via the subresultant PRS (keeps coefficients small, stays in Z).
inline Int resultant(IntPoly a, IntPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0 && b.degree() == 0) return 1;
    Int sign = 1;
    Int ca = a.content(); if (a.lc() < 0) ca = -ca;
    Int cb = b.content(); if (b.lc() < 0) cb = -cb;
    a = a.primitive_part();
    b = b.primitive_part();
    if (ca < 0 && (b.degree() % 2 == 1)) sign = -sign;
    if (cb < 0 && (a.degree() % 2 == 1)) sign = -sign;
    Int t = pow_int(abs_int(ca), static_cast<unsigned long>(b.degree())) *
            pow_int(abs_int(cb), static_cast<unsigned long>(a.degree()));
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0)
        return sign * t * pow_int(b.c[0], static_cast<unsigned long>(a.degree()));
    Int g = 1, h = 1;
    while (true) {
        long da = a.degree(), db = b.degree();
        long delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
        IntPoly r = detail::pseudo_rem(a, b);
        a = b;
        Int div = g * pow_int(h, static_cast<unsigned long>(delta));
        b = r;
        for (auto& x : b.c) {
            Int q = x / div;
            if (q * div != x) throw InternalError("resultant: inexact subresultant division");
            x = q;
        }
        b.normalize();
        g = a.lc();
        if (delta > 0) {
            Int num = pow_int(g, static_cast<unsigned long>(delta));
            Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
            Int q = num / den;
            if (q * den != num) throw InternalError("resultant: inexact h update");
            h = q;
        }
        if (b.is_zero()) return 0;
        if (b.degree() == 0) {
            long da2 = a.degree();
            Int num = pow_int(b.c[0], static_cast<unsigned long>(da2));
            Int den = pow_int(h, static_cast<unsigned long>(da2 - 1));
            Int q = num / den;
            if (q * den != num) throw InternalError("resultant: inexact final division");
            return sign * t * q;
        }
    }
}

inline Int discriminant(const IntPoly& f) {
    long n = f.degree();
    if (n < 1) throw InvalidInputError("discriminant: degree must be >= 1");
    if (n == 1) return 1;
    Int r = resultant(f, f.derivative());
    Int d = r / f.lc();
    if (d * f.lc() != r) throw InternalError("discriminant: lc does not divide resultant");
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

// ---- parsing / printing ------------------------------------------------------

// Accepts either a comma-separated coefficient list "c0,c1,...,cn" or a
// human-readable sum of monomials like "x^5 - 2*x + 7" (the '*' optional).
inline IntPoly parse_poly(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw InvalidInputError("parse_poly: empty input");

    if (s.find(',') != std::string::npos) {
        std::vector<Int> coeffs;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw InvalidInputError("parse_poly: empty coefficient in list");
            try {
                coeffs.push_back(Int(tok));
            } catch (...) {
                throw InvalidInputError("parse_poly: bad integer '" + tok + "'");
            }
        }
        return IntPoly(std::move(coeffs));
    }

    std::vector<Int> coeffs;
    auto bump = [&](long e, const Int& v) {
        if (e < 0 || e > 64) throw InvalidInputError("parse_poly: exponent out of range");
        if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1, 0);
        coeffs[static_cast<size_t>(e)] += v;
    };

    size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InvalidInputError("parse_poly: expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        bool has_coef = !digits.empty();
        Int coef = has_coef ? Int(digits) : Int(1);
        if (i < s.size() && s[i] == '*') {
            if (!has_coef) throw InvalidInputError("parse_poly: stray '*'");
            ++i;
            if (i >= s.size() || s[i] != 'x') throw InvalidInputError("parse_poly: expected x after '*'");
        }
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            long e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ex;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ex.push_back(s[i++]);
                if (ex.empty()) throw InvalidInputError("parse_poly: missing exponent after '^'");
                e = std::stol(ex);
            }
            bump(e, sign * coef);
        } else {
            if (!has_coef) throw InvalidInputError("parse_poly: lone sign");
            bump(0, sign * coef);
        }
    }
    return IntPoly(std::move(coeffs));
}

inline std::string poly_to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        Int a = f.coeff(i);
        if (a == 0) continue;
        bool lead = out.empty();
        if (lead) {
            if (a < 0) out += "-";
        } else {
            out += (a < 0) ? " - " : " + ";
        }
        Int mag = abs_int(a);
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string poly_to_csv(const IntPoly& f) {
    std::string out;
    for (long i = 0; i <= f.degree(); ++i) {
        if (i) out += ",";
        out += f.coeff(i).str();
    }
    if (f.is_zero()) out = "0";
    return out;
}

} // namespace quintic
