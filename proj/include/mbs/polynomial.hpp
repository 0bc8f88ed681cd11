#pragma once
#include <map>
#include <string>
#include <vector>

#include "mbs/linalg.hpp"

namespace mbs {

/// Exponent vector of one monomial.
using Expo = std::vector<unsigned>;

/// Total degree, then lexicographic.
struct MonomialOrder {
    bool operator()(const Expo& a, const Expo& b) const;
};

/// Sparse multivariate polynomial over Rat.  Zero coefficients are never
/// stored; the map order is the canonical print order.
class MultiPolyQ {
public:
    explicit MultiPolyQ(size_t nvars = 0) : nvars_(nvars) {}
    static MultiPolyQ constant(size_t nvars, const Rat& c);
    static MultiPolyQ variable(size_t nvars, size_t i);
    /// Affine-linear polynomial  coeffs . v + c.
    static MultiPolyQ affine_linear(const VecQ& coeffs, const Rat& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t total_degree() const;
    const std::map<Expo, Rat, MonomialOrder>& terms() const { return terms_; }
    Rat coeff(const Expo& e) const;

    void add_term(const Expo& e, const Rat& c);

    MultiPolyQ operator-() const;
    MultiPolyQ& operator+=(const MultiPolyQ& o);
    MultiPolyQ& operator-=(const MultiPolyQ& o);
    friend MultiPolyQ operator+(MultiPolyQ a, const MultiPolyQ& b) { return a += b; }
    friend MultiPolyQ operator-(MultiPolyQ a, const MultiPolyQ& b) { return a -= b; }
    MultiPolyQ operator*(const MultiPolyQ& o) const;
    MultiPolyQ operator*(const Rat& c) const;
    bool operator==(const MultiPolyQ& o) const;

    MultiPolyQ pow(unsigned k) const;
    MultiPolyQ derivative(size_t var) const;
    /// Directional derivative along an integer vector.
    MultiPolyQ directional_derivative(const VecZ& dir) const;

    Rat eval(const VecQ& v) const;
    double eval_d(const std::vector<double>& v) const;

    /// Canonical text rendering with variables name1..nameN.
    std::string str(const std::string& varname = "v") const;

private:
    size_t nvars_;
    std::map<Expo, Rat, MonomialOrder> terms_;
};

/// B(k, t): B(0)=1, d/dt B(k) = k B(k-1), integral over [0,1] is 0 for k>=1.
MultiPolyQ bernoulli_polynomial(unsigned k);

/// P a polynomial in the dual variables; each monomial x^a acts as d^a on f.
MultiPolyQ apply_diff_operator(const MultiPolyQ& p, const MultiPolyQ& f);

/// Composition f(M w + b); M maps the new variables to the old ones.
MultiPolyQ affine_substitute(const MultiPolyQ& f, const MatQ& m, const VecQ& b);
MultiPolyQ affine_substitute(const MultiPolyQ& f, const MatQ& m);

/// Finite sum  sum_k (2 i pi)^k p_k(v)  with exact rational p_k.
struct PiPolynomial {
    std::map<int, MultiPolyQ> parts;

    void add(int k, const MultiPolyQ& p);
    bool operator==(const PiPolynomial& o) const;
    std::string str(const std::string& varname = "v") const;
};

} // namespace mbs
