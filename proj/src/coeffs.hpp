#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "basics.hpp"

namespace gmld {

// Exact rational coefficient. mpq_class keeps values canonical
// (lowest terms, positive denominator).
struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(long n, long d) : v(n, d) {
        if (d == 0) input_error("rational with zero denominator");
        v.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v(q) {}
    explicit Rat(const mpz_class& n, const mpz_class& d) : v(n, d) {
        if (d == 0) input_error("rational with zero denominator");
        v.canonicalize();
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    Rat operator-() const { return Rat(mpq_class(-v)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v + o.v)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v - o.v)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v * o.v)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) input_error("division by zero");
        return Rat(mpq_class(v / o.v));
    }
    Rat inv() const { return Rat(1) / *this; }
    bool operator==(const Rat& o) const { return v == o.v; }
    bool operator!=(const Rat& o) const { return v != o.v; }

    mpz_class num() const { return v.get_num(); }
    mpz_class den() const { return v.get_den(); }

    std::string str() const { return v.get_str(); }
};

// Prime field element; the modulus rides along so mixed-modulus bugs fail fast.
struct Zp {
    uint64_t v = 0;
    uint64_t p = 0;

    Zp() = default;
    Zp(uint64_t val, uint64_t prime) : v(val % prime), p(prime) {}

    static Zp of_long(long n, uint64_t p) {
        long long r = n % (long long)p;
        if (r < 0) r += (long long)p;
        return Zp((uint64_t)r, p);
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    void check(const Zp& o) const {
        if (p != o.p) input_error("prime field mismatch");
    }
    Zp operator-() const { return Zp(v == 0 ? 0 : p - v, p); }
    Zp operator+(const Zp& o) const {
        check(o);
        uint64_t s = v + o.v;
        if (s >= p) s -= p;
        return Zp(s, p);
    }
    Zp operator-(const Zp& o) const {
        check(o);
        return *this + (-o);
    }
    Zp operator*(const Zp& o) const {
        check(o);
        return Zp((v * o.v) % p, p);  // p < 2^31 so the product fits
    }
    Zp inv() const {
        if (v == 0) input_error("division by zero mod p");
        // extended Euclid
        int64_t a = (int64_t)v, m = (int64_t)p, x0 = 0, x1 = 1;
        int64_t b = m;
        while (a > 1) {
            int64_t q = a / b;
            int64_t t = b;
            b = a - q * b;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        if (x1 < 0) x1 += m;
        return Zp((uint64_t)x1, p);
    }
    Zp operator/(const Zp& o) const { return *this * o.inv(); }
    bool operator==(const Zp& o) const { return v == o.v && p == o.p; }
    bool operator!=(const Zp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v); }
};

bool is_prime_u64(uint64_t n);

// Reduction QQ -> Z/p; fails if a denominator vanishes mod p.
inline Zp reduce_mod(const Rat& r, uint64_t p) {
    mpz_class n = r.num() % (long)p;
    mpz_class d = r.den() % (long)p;
    long ni = n.get_si(), di = d.get_si();
    if (ni < 0) ni += (long)p;
    if (di == 0) input_error("denominator vanishes mod p; pick another prime");
    return Zp((uint64_t)ni, p) / Zp((uint64_t)di, p);
}

}  // namespace gmld
