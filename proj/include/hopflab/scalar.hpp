// Exact field scalars: arbitrary-precision rationals and prime fields F_p.
//
// Every scalar is stored in canonical form (reduced fraction with positive
// denominator, or residue in [0,p)) and all arithmetic is exact. No
// floating-point types appear anywhere in this library.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflab {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Residue class modulo a prime carried by the element. Mixing moduli is a
// programming error and throws.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.match(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp::raw(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }
    friend bool operator==(const Fp& a, const Fp& b) { a.match(b); return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp::raw(static_cast<std::uint64_t>(t), p_);
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) { Fp x; x.v_ = v; x.p_ = p; return x; }
    void match(const Fp& b) const {
        if (p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
    }
    std::uint64_t v_, p_;
};

// Field descriptor: knows how to make and render scalars. All matrices and
// presentations carry one so that dimension-zero objects stay constructible.
template <class K>
struct Field;

template <>
struct Field<Rational> {
    using Scalar = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }
    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }

    // accepts "a" or "a/b" with arbitrary-precision integers
    std::optional<Rational> parse(std::string_view s, std::string* err = nullptr) const {
        auto fail = [&](const char* m) -> std::optional<Rational> {
            if (err) *err = m;
            return std::nullopt;
        };
        auto is_int = [](std::string_view t) {
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return fail("malformed integer");
            return Rational(BigInt(std::string(s)));
        }
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return fail("malformed rational");
        BigInt d{std::string(den)};
        if (d == 0) return fail("zero denominator");
        return Rational(BigInt(std::string(num)), d);  // canonicalizes
    }

    std::string str(const Rational& x) const { return x.str(); }
    friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
struct Field<Fp> {
    using Scalar = Fp;
    std::uint64_t p = 0;

    Field() = default;
    explicit Field(std::uint64_t p_) : p(p_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus not prime");
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_int(long long n) const {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }
    std::uint64_t characteristic() const { return p; }
    std::string name() const { return "F" + std::to_string(p); }

    // accepts an integer literal in canonical range [0, p)
    std::optional<Fp> parse(std::string_view s, std::string* err = nullptr) const {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
            if (err) *err = "residue must be an integer in [0,p)";
            return std::nullopt;
        }
        std::uint64_t v = 0;
        for (char c : s) {
            if (v > (UINT64_MAX - 9) / 10) {
                if (err) *err = "residue out of range";
                return std::nullopt;
            }
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (v >= p) {
            if (err) *err = "residue must be an integer in [0,p)";
            return std::nullopt;
        }
        return Fp(v, p);
    }

    std::string str(const Fp& x) const { return std::to_string(x.value()); }
    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
};

template <class K>
concept field_scalar = requires(K a, K b, const Field<K> f) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { f.zero() } -> std::convertible_to<K>;
    { f.one() } -> std::convertible_to<K>;
};

}  // namespace hopflab
