#include "mop/rational.hpp"

#include "mop/error.hpp"

#include <cctype>

namespace mop {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational literal");

    auto parse_int = [&](const std::string& t) {
        if (t.empty() || t == "-" || t == "+")
            throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + raw + "'");
        std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + raw + "'");
        return Integer(t[0] == '+' ? t.substr(1) : t);
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Integer num = parse_int(s.substr(0, slash));
        Integer den = parse_int(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + raw + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        Integer w = parse_int(whole);
        if (frac.empty()) return Rational(w);
        Integer f = parse_int(frac);
        if (frac[0] == '-' || frac[0] == '+')
            throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + raw + "'");
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational q(f, scale);
        q.canonicalize();
        return neg ? Rational(Rational(w) - q) : Rational(Rational(w) + q);
    }
    return Rational(parse_int(s));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const Rational& q, long* m) {
    if (!is_integer(q) || sgn(q) > 0) return false;
    if (m) *m = -q.get_num().get_si();
    return true;
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error(ErrorKind::PoleInParams, "zero raised to a negative power");
        return 1 / pow(q, -e);
    }
    Rational r(1), b(q);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mop
