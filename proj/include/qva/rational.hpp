#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qva {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct not_invertible : error {
    using error::error;
};

struct variable_mismatch : error {
    using error::error;
};

struct invalid_parameter : error {
    using error::error;
};

struct insufficient_order : error {
    insufficient_order(const std::string& msg, int minimal)
        : error(msg), minimal_order(minimal) {}
    int minimal_order;
};

struct inconsistent_central_charge : error {
    using error::error;
};

/// binom(n, k) for arbitrary integer n and k >= 0, via the falling-factorial
/// extension: n(n-1)...(n-k+1)/k!.  Always an integer.
inline Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    // binom(-m, k) = (-1)^k binom(m+k-1, k)
    bool flip = false;
    unsigned long long nn;
    if (n < 0) {
        flip = (k % 2 != 0);
        nn = static_cast<unsigned long long>(k - n - 1);
    } else {
        nn = static_cast<unsigned long long>(n);
    }
    Int c = 1;
    for (unsigned long long t = 0; t < static_cast<unsigned long long>(k); ++t) {
        c *= Int(nn - t);
        c /= Int(t + 1);
    }
    return flip ? Int(-c) : c;
}

inline Int factorial(long long k) {
    Int f = 1;
    for (long long t = 2; t <= k; ++t) f *= t;
    return f;
}

/// Gaussian rational a + b*i.  The coefficient field of the whole library.
struct Scalar {
    Rat re;
    Rat im;

    Scalar() = default;
    Scalar(long long r) : re(r) {}                    // NOLINT(google-explicit-constructor)
    Scalar(Rat r) : re(std::move(r)) {}               // NOLINT(google-explicit-constructor)
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    Rat norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    Scalar inverse() const {
        Rat n = norm();
        if (n == 0) throw not_invertible("division by zero scalar");
        return Scalar(re / n, -im / n);
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar pow(const Scalar& base, long long e) {
    Scalar b = e < 0 ? base.inverse() : base;
    unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
    Scalar r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

namespace detail {

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Parses an optionally signed rational "a" or "a/b" starting at pos.
inline Rat parse_rat_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw parse_error("expected digits in scalar at '" + s.substr(start) + "'");
    Int num(s.substr(digits, pos - digits));
    if (negative) num = -num;
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw parse_error("expected denominator in scalar '" + s + "'");
        den = Int(s.substr(dstart, pos - dstart));
        if (den == 0) throw parse_error("zero denominator in scalar '" + s + "'");
    }
    return Rat(num, den);
}

} // namespace detail

/// Scalar text format: "a/b", "a/b+c/di", pure imaginary "c/di" and bare
/// "i"/"-i" are accepted, e.g. "-1", "1/2+1/2i", "i".
inline Scalar parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty scalar");

    auto parse_part = [&](size_t& pos) -> Rat {
        // bare i / +i / -i
        size_t p = pos;
        Rat sign = 1;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            if (s[p] == '-') sign = -1;
            ++p;
        }
        if (p < s.size() && s[p] == 'i') {
            pos = p + 1;
            return sign; // coefficient 1, caller knows it was imaginary
        }
        return detail::parse_rat_at(s, pos);
    };

    size_t pos = 0;
    Rat first = parse_part(pos);
    bool first_imag = pos <= s.size() && pos > 0 && s[pos - 1] == 'i';
    if (!first_imag && pos < s.size() && s[pos] == 'i') {
        first_imag = true;
        ++pos;
    }
    if (pos == s.size()) {
        return first_imag ? Scalar(Rat(0), first) : Scalar(first);
    }
    if (first_imag) throw parse_error("malformed scalar '" + text + "'");
    // remainder must be the imaginary part, ending in 'i'
    Rat second = parse_part(pos);
    if (pos < s.size() && s[pos] == 'i') ++pos;
    else if (!(pos > 0 && s[pos - 1] == 'i'))
        throw parse_error("expected trailing 'i' in scalar '" + text + "'");
    if (pos != s.size()) throw parse_error("trailing characters in scalar '" + text + "'");
    return Scalar(first, second);
}

inline std::string to_string(const Scalar& v) {
    if (v.im == 0) return detail::rat_to_string(v.re);
    std::string s;
    if (v.re != 0) {
        s = detail::rat_to_string(v.re);
        if (v.im > 0) s += "+";
    }
    s += detail::rat_to_string(v.im) + "i";
    return s;
}

/// Half-integer, stored as twice its value.  Used for L(0)-weights.
struct HalfInt {
    long long twice = 0;

    HalfInt() = default;
    explicit HalfInt(long long t) : twice(t) {}
    static HalfInt whole(long long n) { return HalfInt(2 * n); }
    static HalfInt half(long long n) { return HalfInt(n); }

    bool is_integer() const { return twice % 2 == 0; }
    /// Largest integer <= value.
    long long floor() const {
        long long t = twice;
        return t >= 0 ? t / 2 : -((-t + 1) / 2);
    }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    auto operator<=>(const HalfInt&) const = default;
};

inline std::string to_string(HalfInt w) {
    if (w.twice % 2 == 0) return std::to_string(w.twice / 2);
    return std::to_string(w.twice) + "/2";
}

} // namespace qva
