#include "mop/polynomial.hpp"

#include "mop/error.hpp"

#include <sstream>

namespace mop {

std::size_t Degree::value() const {
    if (neg_inf_) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial is -infinity");
    return d_;
}

bool Degree::operator<(const Degree& o) const {
    if (neg_inf_) return !o.neg_inf_;
    if (o.neg_inf_) return false;
    return d_ < o.d_;
}

std::string Degree::str() const { return neg_inf_ ? "-inf" : std::to_string(d_); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Degree Polynomial::degree() const {
    return c_.empty() ? Degree::neg_infinity() : Degree::of(c_.size() - 1);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double Polynomial::eval_double(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Rational> quo(rem.size() > db ? rem.size() - db : 0);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / b.c_.back();
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    q = Polynomial(std::move(quo));
    r = Polynomial(std::move(rem));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].get_str() << ")";
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::InvalidArgument, "interpolation size mismatch");
    Polynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        Polynomial basis = Polynomial::constant(1);
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw Error(ErrorKind::InvalidArgument, "repeated interpolation node");
            basis *= Polynomial({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += basis * (ys[i] / denom);
    }
    return result;
}

}  // namespace mop
