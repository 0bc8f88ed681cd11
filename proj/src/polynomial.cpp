#include "mbs/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mbs {

bool MonomialOrder::operator()(const Expo& a, const Expo& b) const {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;  // higher total degree first
    return a > b;                  // then lexicographic, leading variable first
}

MultiPolyQ MultiPolyQ::constant(size_t nvars, const Rat& c) {
    MultiPolyQ p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

MultiPolyQ MultiPolyQ::variable(size_t nvars, size_t i) {
    MultiPolyQ p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

MultiPolyQ MultiPolyQ::affine_linear(const VecQ& coeffs, const Rat& c) {
    MultiPolyQ p(coeffs.size());
    p.add_term(Expo(coeffs.size(), 0), c);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Expo e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

size_t MultiPolyQ::total_degree() const {
    size_t d = 0;
    for (const auto& [e, c] : terms_) {
        size_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Rat MultiPolyQ::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPolyQ::add_term(const Expo& e, const Rat& c) {
    if (e.size() != nvars_) throw ValidationError("monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPolyQ MultiPolyQ::operator-() const {
    MultiPolyQ p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPolyQ& MultiPolyQ::operator+=(const MultiPolyQ& o) {
    if (nvars_ != o.nvars_) throw ValidationError("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPolyQ& MultiPolyQ::operator-=(const MultiPolyQ& o) {
    if (nvars_ != o.nvars_) throw ValidationError("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPolyQ MultiPolyQ::operator*(const MultiPolyQ& o) const {
    if (nvars_ != o.nvars_) throw ValidationError("polynomial arity mismatch");
    MultiPolyQ p(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPolyQ MultiPolyQ::operator*(const Rat& c) const {
    MultiPolyQ p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
    return p;
}

bool MultiPolyQ::operator==(const MultiPolyQ& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPolyQ MultiPolyQ::pow(unsigned k) const {
    MultiPolyQ p = MultiPolyQ::constant(nvars_, Rat(1));
    for (unsigned i = 0; i < k; ++i) p = p * (*this);
    return p;
}

MultiPolyQ MultiPolyQ::derivative(size_t var) const {
    MultiPolyQ p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        p.add_term(d, c * Rat(static_cast<long>(e[var])));
    }
    return p;
}

MultiPolyQ MultiPolyQ::directional_derivative(const VecZ& dir) const {
    MultiPolyQ p(nvars_);
    for (size_t i = 0; i < nvars_; ++i) {
        if (dir[i] == 0) continue;
        p += derivative(i) * Rat(dir[i]);
    }
    return p;
}

Rat MultiPolyQ::eval(const VecQ& v) const {
    if (v.size() != nvars_) throw ValidationError("eval arity mismatch");
    Rat acc;
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) m *= v[i];
        acc += m;
    }
    return acc;
}

double MultiPolyQ::eval_d(const std::vector<double>& v) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double m = c.to_double();
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i]) m *= std::pow(v[i], e[i]);
        acc += m;
    }
    return acc;
}

std::string MultiPolyQ::str(const std::string& varname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned k) { return k > 0; });
        bool coeff_shown = !has_var || a != Rat(1);
        if (coeff_shown) os << a.str();
        bool need_star = coeff_shown;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << varname << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

MultiPolyQ bernoulli_polynomial(unsigned k) {
    // antiderivative recursion with zero mean on [0,1]
    MultiPolyQ b = MultiPolyQ::constant(1, Rat(1));
    for (unsigned n = 1; n <= k; ++n) {
        MultiPolyQ next(1);
        Rat mean;  // integral over [0,1] of n * antiderivative(b)
        for (const auto& [e, c] : b.terms()) {
            unsigned d = e[0];
            Rat coeff = c * Rat(static_cast<long>(n), static_cast<long>(d + 1));
            next.add_term(Expo{d + 1}, coeff);
            mean += coeff * Rat(1, static_cast<long>(d + 2));
        }
        next.add_term(Expo{0}, -mean);
        b = next;
    }
    return b;
}

MultiPolyQ apply_diff_operator(const MultiPolyQ& p, const MultiPolyQ& f) {
    if (p.nvars() != f.nvars()) throw ValidationError("operator arity mismatch");
    MultiPolyQ out(f.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiPolyQ g = f;
        for (size_t i = 0; i < e.size() && !g.is_zero(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) g = g.derivative(i);
        out += g * c;
    }
    return out;
}

MultiPolyQ affine_substitute(const MultiPolyQ& f, const MatQ& m, const VecQ& b) {
    if (m.rows() != f.nvars() || m.rows() != b.size())
        throw ValidationError("substitution shape mismatch");
    size_t nv = m.cols();
    std::vector<MultiPolyQ> images;
    images.reserve(f.nvars());
    for (size_t i = 0; i < f.nvars(); ++i)
        images.push_back(MultiPolyQ::affine_linear(m.row(i), b[i]));
    MultiPolyQ out(nv);
    for (const auto& [e, c] : f.terms()) {
        MultiPolyQ mono = MultiPolyQ::constant(nv, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) mono = mono * images[i].pow(e[i]);
        out += mono;
    }
    return out;
}

MultiPolyQ affine_substitute(const MultiPolyQ& f, const MatQ& m) {
    return affine_substitute(f, m, VecQ(m.rows()));
}

void PiPolynomial::add(int k, const MultiPolyQ& p) {
    if (p.is_zero()) return;
    auto it = parts.find(k);
    if (it == parts.end()) {
        parts.emplace(k, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) parts.erase(it);
    }
}

bool PiPolynomial::operator==(const PiPolynomial& o) const { return parts == o.parts; }

std::string PiPolynomial::str(const std::string& varname) const {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : parts) {
        if (!first) os << " + ";
        os << "(2*i*pi)^" << k << " * (" << p.str(varname) << ")";
        first = false;
    }
    return os.str();
}

} // namespace mbs
