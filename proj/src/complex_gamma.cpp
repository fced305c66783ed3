#include "mop/complex_gamma.hpp"

#include "mop/error.hpp"

#include <cmath>
#include <numbers>

namespace mop {

template <class T> std::complex<T> log_gamma(std::complex<T> z) {
    if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real())
        throw Error(ErrorKind::InvalidArgument, "Gamma has a pole at " + std::to_string(static_cast<double>(z.real())));
    // B_{2k} / (2k (2k-1)), k = 1..10
    static const T coef[] = {T(1) / 12,          T(-1) / 360,           T(1) / 1260,        T(-1) / 1680,
                             T(1) / 1188,        T(-691) / 360360,      T(1) / 156,         T(-3617) / 122400,
                             T(43867) / 244188,  T(-174611) / 125400};
    std::complex<T> shift(0);
    while (z.real() < T(20)) {
        shift += std::log(z);
        z += T(1);
    }
    const std::complex<T> inv = T(1) / z;
    const std::complex<T> inv2 = inv * inv;
    std::complex<T> series(0), p = inv;
    for (T c : coef) {
        series += c * p;
        p *= inv2;
    }
    const T half_log_2pi = T(0.5) * std::log(T(2) * std::numbers::pi_v<T>);
    return (z - T(0.5)) * std::log(z) - z + half_log_2pi + series - shift;
}

template std::complex<double> log_gamma<double>(std::complex<double>);
template std::complex<long double> log_gamma<long double>(std::complex<long double>);

}  // namespace mop
