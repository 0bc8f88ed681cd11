#pragma once
#include <gmpxx.h>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbs/errors.hpp"

namespace mbs {

using Int = mpz_class;

/// Arbitrary-precision rational, always reduced with positive denominator.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    /// Parses "p/q" or "p".  Throws ValidationError on malformed input.
    static Rat parse(const std::string& s);

    Int numerator() const { return Int(q_.get_num()); }
    Int denominator() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= value.
    Int floor() const;
    Int ceil() const;

    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using VecQ = std::vector<Rat>;
using VecZ = std::vector<Int>;

Rat rat_from_int_vecdot(const VecZ& a, const VecQ& b);

/// k! as an Int.
Int factorial(unsigned k);

VecQ to_vecq(const VecZ& v);
std::string vecq_str(const VecQ& v);
std::string vecz_str(const VecZ& v);

} // namespace mbs
