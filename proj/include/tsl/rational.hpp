// Exact rational arithmetic on 64-bit integers with overflow detection.
// All quantities in this library are exact; there is no floating point.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tsl {

class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline long long checked_narrow(__int128 v, const char* ctx)
{
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw arithmetic_error(std::string("integer overflow in ") + ctx);
    return static_cast<long long>(v);
}

} // namespace detail

inline long long checked_add(long long a, long long b)
{
    return detail::checked_narrow(static_cast<__int128>(a) + b, "add");
}

inline long long checked_mul(long long a, long long b)
{
    return detail::checked_narrow(static_cast<__int128>(a) * b, "mul");
}

// Normalized fraction: den > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long as_integer() const
    {
        if (den_ != 1) throw arithmetic_error("rational is not an integer: " + str());
        return num_;
    }

    friend Rat operator+(const Rat& a, const Rat& b)
    {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b)
    {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b)
    {
        return from_wide(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.num_ == 0) throw arithmetic_error("division by zero");
        return from_wide(static_cast<__int128>(a.num_) * b.den_,
                         static_cast<__int128>(a.den_) * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b)
    {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    // Largest integer <= value.
    long long floor() const
    {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const
    {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    std::string str() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p" or "p/q".
    static Rat parse(const std::string& s)
    {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw arithmetic_error("cannot parse rational: '" + s + "'");
        }
    }

    size_t hash() const
    {
        size_t h = std::hash<long long>{}(num_);
        return h * 1000003u ^ std::hash<long long>{}(den_);
    }

    // Exact square root when the value is a perfect rational square.
    static bool sqrt_exact(const Rat& v, Rat& out)
    {
        if (v.sign() < 0) return false;
        auto isqrt = [](long long x, long long& r) {
            long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
            while (s > 0 && s * s > x) --s;
            while ((s + 1) * (s + 1) <= x) ++s;
            r = s;
            return s * s == x;
        };
        long long rn, rd;
        if (!isqrt(v.num(), rn) || !isqrt(v.den(), rd)) return false;
        out = Rat(rn, rd);
        return true;
    }

private:
    static Rat from_wide(__int128 n, __int128 d)
    {
        if (d == 0) throw arithmetic_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num_ = detail::checked_narrow(n, "rational numerator");
        r.den_ = detail::checked_narrow(d, "rational denominator");
        return r;
    }

    void normalize()
    {
        if (den_ == 0) throw arithmetic_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

} // namespace tsl

template <>
struct std::hash<tsl::Rat> {
    size_t operator()(const tsl::Rat& r) const { return r.hash(); }
};
