#pragma once
// Exact rational numbers over int64. All arithmetic in the library is exact;
// overflow is guarded by __int128 intermediates and a loud check.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adlv {

struct Rat {
    long long n = 0;  // numerator
    long long d = 1;  // denominator, always > 0

    Rat() = default;
    Rat(long long num) : n(num), d(1) {}
    Rat(long long num, long long den) : n(num), d(den) { norm(); }

    void norm() {
        if (d == 0) throw std::runtime_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }

    static Rat make(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { num /= a; den /= a; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::runtime_error("Rat: overflow");
        Rat r; r.n = (long long)num; r.d = (long long)den; return r;
    }

    friend Rat operator+(Rat a, Rat b) { return make((__int128)a.n * b.d + (__int128)b.n * a.d, (__int128)a.d * b.d); }
    friend Rat operator-(Rat a, Rat b) { return make((__int128)a.n * b.d - (__int128)b.n * a.d, (__int128)a.d * b.d); }
    friend Rat operator*(Rat a, Rat b) { return make((__int128)a.n * b.n, (__int128)a.d * b.d); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.n == 0) throw std::runtime_error("Rat: division by zero");
        return make((__int128)a.n * b.d, (__int128)a.d * b.n);
    }
    Rat operator-() const { Rat r; r.n = -n; r.d = d; return r; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return (__int128)a.n * b.d < (__int128)b.n * a.d; }
    friend bool operator<=(const Rat& a, const Rat& b) { return (__int128)a.n * b.d <= (__int128)b.n * a.d; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_int() const { return d == 1; }
    std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

}  // namespace adlv
