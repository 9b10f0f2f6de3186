// Scalar fields used by the exact linear algebra layer: arbitrary-precision
// rationals (default) and a prime field GF(p) selectable for speed on the
// largest examples.  All operations are exact; nothing here ever rounds.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fcy/errors.hpp"

namespace fcy {

// The rational field is GMP's canonicalizing mpq_class used directly.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// GF(p).  The modulus is a process-wide runtime parameter (set once by the
// CLI before any algebra is built), in the style of NTL's zz_p.  p must be an
// odd prime < 2^62 so products fit in unsigned __int128.
// ---------------------------------------------------------------------------
class Fp {
  public:
    Fp() : v_(0) {}
    explicit Fp(uint64_t reduced) : v_(reduced) {}

    static void set_modulus(uint64_t p) {
        if (p < 3 || p >= (uint64_t(1) << 62))
            throw ParseError("prime-field modulus out of range");
        modulus_ = p;
    }
    static uint64_t modulus() { return modulus_; }

    static Fp from_int(long long n) {
        long long r = n % (long long)modulus_;
        if (r < 0) r += (long long)modulus_;
        return Fp((uint64_t)r);
    }

    static Fp from_rational(const Rat& q) {
        Fp num = from_mpz(q.get_num());
        Fp den = from_mpz(q.get_den());
        if (den.is_zero())
            throw ParseError("rational denominator divisible by field characteristic");
        return num * den.inverse();
    }

    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const {
        uint64_t s = v_ + o.v_;
        if (s >= modulus_) s -= modulus_;
        return Fp(s);
    }
    Fp operator-(Fp o) const {
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_);
    }
    Fp operator-() const { return v_ == 0 ? Fp(0) : Fp(modulus_ - v_); }
    Fp operator*(Fp o) const {
        return Fp((uint64_t)((unsigned __int128)v_ * o.v_ % modulus_));
    }
    Fp inverse() const {
        if (v_ == 0) throw InvariantViolation("inverse of zero in GF(p)");
        // p is prime: a^(p-2) = a^(-1).
        uint64_t base = v_, e = modulus_ - 2, acc = 1;
        while (e) {
            if (e & 1) acc = (uint64_t)((unsigned __int128)acc * base % modulus_);
            base = (uint64_t)((unsigned __int128)base * base % modulus_);
            e >>= 1;
        }
        return Fp(acc);
    }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

  private:
    static Fp from_mpz(const mpz_class& z) {
        mpz_class m((unsigned long)(modulus_ & 0xffffffffu));
        // Assemble the modulus in two 32-bit halves so 32-bit ulong builds of
        // GMP can't truncate it.
        mpz_class hi((unsigned long)(modulus_ >> 32));
        m += hi << 32;
        mpz_class r = z % m;
        if (r < 0) r += m;
        return Fp(r.get_ui() | ((uint64_t)mpz_class(r >> 32).get_ui() << 32));
    }

    uint64_t v_;
    static inline uint64_t modulus_ = 0x1fffffffffffffffULL;  // 2^61 - 1
};

// ---------------------------------------------------------------------------
// Uniform field interface used by the templated layers.
// ---------------------------------------------------------------------------
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long long n) { return Rat((long)n); }
    static Rat from_rational(const Rat& q) { return q; }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat inverse(const Rat& x) {
        if (x == 0) throw InvariantViolation("inverse of zero rational");
        return Rat(1) / x;
    }
    static Rat negate(const Rat& x) { return -x; }
    static std::string to_string(const Rat& x) { return x.get_str(); }
    static constexpr const char* name() { return "q"; }
};

template <>
struct FieldOps<Fp> {
    static Fp zero() { return Fp(); }
    static Fp one() { return Fp::from_int(1); }
    static Fp from_int(long long n) { return Fp::from_int(n); }
    static Fp from_rational(const Rat& q) { return Fp::from_rational(q); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static Fp inverse(const Fp& x) { return x.inverse(); }
    static Fp negate(const Fp& x) { return -x; }
    static std::string to_string(const Fp& x) { return std::to_string(x.value()); }
    static constexpr const char* name() { return "fp"; }
};

}  // namespace fcy
