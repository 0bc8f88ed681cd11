#include "mbs/rat.hpp"

#include <ostream>
#include <sstream>

namespace mbs {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    auto bad = [&] { throw ValidationError("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::string t = s;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rat();  // unreachable
}

Int Rat::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

Int Rat::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
}

std::string Rat::str() const {
    std::ostringstream os;
    os << q_.get_num();
    if (q_.get_den() != 1) os << "/" << q_.get_den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_from_int_vecdot(const VecZ& a, const VecQ& b) {
    Rat acc;
    for (size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
    return acc;
}

Int factorial(unsigned k) {
    Int f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

VecQ to_vecq(const VecZ& v) {
    VecQ out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

std::string vecq_str(const VecQ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string vecz_str(const VecZ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

} // namespace mbs
