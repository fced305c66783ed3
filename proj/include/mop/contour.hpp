#pragma once

#include "mop/families.hpp"
#include "mop/multi_index.hpp"

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mop {

enum class Orientation { Clockwise, Counterclockwise };
const char* orientation_name(Orientation o);

struct Circle {
    std::complex<double> center;
    double radius = 1;
};
// Axis-parallel rectangle, traversed through its four edges.
struct Rectangle {
    std::complex<double> lower_left;
    std::complex<double> upper_right;
};

struct ContourSpec {
    std::variant<Circle, Rectangle> shape;
    Orientation orientation = Orientation::Counterclockwise;
    int nodes = 256;

    void validate() const;  // radius > 0, nodes >= 16 and a power of two
    // Winding number of the closed curve around z, +1 for counterclockwise enclosure.
    int winding(std::complex<double> z) const;
    double distance(std::complex<double> z) const;
};

// A cycle made of disjoint closed pieces; integrals add up.
using Contour = std::vector<ContourSpec>;

// Which representation to integrate. Type I without a component is the linear form
// sum_i A^{(i)} w_i; with a component it is the single polynomial A^{(i)}.
struct IntegrandSpec {
    FamilyParams params;
    MultiIndex n;
    long x = 0;
    bool type2 = false;
    std::optional<std::size_t> component;
};

std::string integrand_name(const IntegrandSpec& s);

// Poles the contour must enclose exactly once, singular points it must keep outside, and the
// half-plane the theorem confines the contour to. All singularities are real.
struct PoleSets {
    std::vector<double> required;
    std::vector<double> forbidden;
    std::optional<double> re_lower;
    std::optional<double> re_upper;
};
PoleSets pole_sets(const IntegrandSpec& s);

// Orientation as stated with the theorem, and the one under which the integral reproduces the
// closed form.
Orientation stated_orientation(Family f, bool type2);
Orientation matching_orientation(Family f, bool type2);

// Circle(s) enclosing the required points and avoiding the forbidden ones. A single circle when
// the required points are not interleaved with forbidden points, otherwise one small circle per
// required point. Throws WrongEnclosure when no such contour exists inside the half-plane.
Contour choose_contour(const PoleSets& poles, Orientation o, int nodes);

// Throws PoleOnContour / WrongEnclosure.
void validate_contour(const Contour& c, const PoleSets& poles);

template <class T> struct QuadratureResult {
    std::complex<T> value;  // with the contour's node count
    std::complex<T> refined;  // with twice the nodes
    T error_estimate = 0;     // |refined - value|
    T scale = 0;              // |prefactor| * (1/2 pi) * integral of |f| |dt|, bounds |value|
};

// Relative deviation of a quadrature value from a reference. An exactly vanishing reference has
// no relative scale; the deviation is then measured against the integral of |f|.
template <class T> T relative_deviation(std::complex<T> value, T reference, bool reference_is_zero, T scale) {
    const T d = std::abs(value - std::complex<T>(reference));
    return reference_is_zero ? d / scale : d / std::abs(reference);
}

// Prefactor times (1/2 pi i) times the contour integral of the theorem's integrand. Validates the
// contour against pole_sets(s) first.
template <class T> QuadratureResult<T> contour_quadrature(const IntegrandSpec& s, const Contour& c);

// Float value of the same quantity from the closed forms (type II value, A^{(i)}(x), or the linear
// form). `exact_zero` reports whether the exact rational value vanishes.
template <class T> T closed_form_value(const IntegrandSpec& s, bool* exact_zero = nullptr);

extern template QuadratureResult<double> contour_quadrature<double>(const IntegrandSpec&, const Contour&);
extern template QuadratureResult<long double> contour_quadrature<long double>(const IntegrandSpec&,
                                                                              const Contour&);
extern template double closed_form_value<double>(const IntegrandSpec&, bool*);
extern template long double closed_form_value<long double>(const IntegrandSpec&, bool*);

}  // namespace mop
