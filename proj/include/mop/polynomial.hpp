#pragma once

#include "mop/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mop {

// Degree of a polynomial; the zero polynomial carries an explicit -infinity marker.
class Degree {
public:
    static Degree neg_infinity() { return Degree(); }
    static Degree of(std::size_t d) { return Degree(d); }

    bool is_neg_infinity() const { return neg_inf_; }
    std::size_t value() const;  // throws on -infinity

    bool operator==(const Degree& o) const { return neg_inf_ == o.neg_inf_ && (neg_inf_ || d_ == o.d_); }
    bool operator<(const Degree& o) const;
    bool operator<=(const Degree& o) const { return *this < o || *this == o; }
    std::string str() const;

private:
    Degree() : neg_inf_(true) {}
    explicit Degree(std::size_t d) : neg_inf_(false), d_(d) {}
    bool neg_inf_;
    std::size_t d_ = 0;
};

// Dense polynomial over Q, coefficients lowest degree first, always trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial x();
    static Polynomial monomial(std::size_t k, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Degree degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact division with remainder; divisor must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Lagrange interpolation through distinct rational nodes.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace mop
