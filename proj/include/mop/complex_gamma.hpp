#pragma once

#include "mop/rational.hpp"

#include <complex>

namespace mop {

// Principal branch of log Gamma(z), cut along the negative real axis. Shifts z to Re z >= 20 with the
// recurrence (sum of principal logs keeps the branch) and then applies the Stirling series.
// Throws InvalidArgument at the poles z = 0, -1, -2, ...
template <class T> std::complex<T> log_gamma(std::complex<T> z);

// exp(log_gamma(z)) with the same conventions.
template <class T> std::complex<T> gamma(std::complex<T> z) { return std::exp(log_gamma(z)); }

template <class T> T to_float(const Rational& q) {
    return static_cast<T>(q.get_num().get_d()) / static_cast<T>(q.get_den().get_d());
}

extern template std::complex<double> log_gamma<double>(std::complex<double>);
extern template std::complex<long double> log_gamma<long double>(std::complex<long double>);

}  // namespace mop
