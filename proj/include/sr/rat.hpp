#ifndef SR_RAT_HPP
#define SR_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sr {

/*
 * Exact rational scalar backed by GMP.
 *
 * Invariants: always reduced (gcd(num, den) = 1), denominator > 0,
 * canonical zero is 0/1. All arithmetic is exact; there is no implicit
 * conversion to or from floating point.
 *
 * The wrapper is a plain value type (no gmpxx expression templates leak
 * out), which also makes it usable as an Eigen scalar.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& q);

    // Parses "p", "-p", "p/q". Throws std::invalid_argument on bad input.
    static Rat parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat pow(unsigned long e) const;

    // Serialized as "p" for integers, "p/q" otherwise (bit-exact round trip).
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace sr

#endif
