#include "mop/serialize.hpp"

#include "mop/error.hpp"

namespace mop {

ojson rationals_to_json(const std::vector<Rational>& v) {
    ojson a = ojson::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

ojson polynomial_to_json(const Polynomial& p) { return ojson{{"coeffs", rationals_to_json(p.coeffs())}}; }

ojson multi_index_to_json(const MultiIndex& n) { return ojson(n.entries()); }

ojson permutation_to_json(const Permutation& perm) { return ojson(perm.mapping()); }

ojson params_to_json(const FamilyParams& fp) {
    ojson j;
    j["family"] = family_name(fp.family());
    std::visit(
        [&](const auto& P) {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, HahnParams>) {
                j["alpha"] = rationals_to_json(P.alpha);
                j["beta"] = to_string(P.beta);
                j["N"] = P.N;
            } else if constexpr (std::is_same_v<T, MeixnerIIParams>) {
                j["beta"] = rationals_to_json(P.beta);
                j["c"] = to_string(P.c);
            } else if constexpr (std::is_same_v<T, MeixnerIParams>) {
                j["beta"] = to_string(P.beta);
                j["c"] = rationals_to_json(P.c);
            } else if constexpr (std::is_same_v<T, KravchukParams>) {
                j["pi"] = rationals_to_json(P.pi);
                j["N"] = P.N;
            } else {
                j["a"] = rationals_to_json(P.a);
            }
        },
        fp.value());
    return j;
}

Rational rational_from_json(const ojson& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw Error(ErrorKind::InvalidArgument, "expected a rational, got " + j.dump());
}

namespace {

const ojson& field(const ojson& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Rational> rational_list(const ojson& j) {
    std::vector<Rational> v;
    if (!j.is_array()) return {rational_from_json(j)};
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

long integer_field(const ojson& j, const char* key) {
    const ojson& v = field(j, key);
    if (v.is_number_integer()) return v.get<long>();
    Rational q = rational_from_json(v);
    if (!is_integer(q)) throw Error(ErrorKind::InvalidParams, std::string(key) + " must be an integer");
    return q.get_num().get_si();
}

}  // namespace

FamilyParams params_from_json(const ojson& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "family spec must be a JSON object");
    const Family f = parse_family(field(j, "family").get<std::string>());
    switch (f) {
    case Family::Hahn:
        return FamilyParams::make(
            HahnParams{rational_list(field(j, "alpha")), rational_from_json(field(j, "beta")), integer_field(j, "N")});
    case Family::MeixnerII:
        return FamilyParams::make(MeixnerIIParams{rational_list(field(j, "beta")), rational_from_json(field(j, "c"))});
    case Family::MeixnerI:
        return FamilyParams::make(MeixnerIParams{rational_from_json(field(j, "beta")), rational_list(field(j, "c"))});
    case Family::Kravchuk:
        return FamilyParams::make(KravchukParams{rational_list(field(j, "pi")), integer_field(j, "N")});
    case Family::Charlier: return FamilyParams::make(CharlierParams{rational_list(field(j, "a"))});
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

MultiIndex multi_index_from_json(const ojson& j) {
    if (j.is_number_integer()) return MultiIndex({j.get<long>()});
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "multi-index must be an array of integers");
    return MultiIndex(j.get<std::vector<long>>());
}

Permutation permutation_from_json(const ojson& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "permutation must be an array of integers");
    return Permutation(j.get<std::vector<int>>());
}

ojson report_to_json(const VerificationReport& r) {
    return ojson{{"check", r.check}, {"family", r.family}, {"params", r.params}, {"n", r.n},
                 {"perm", r.perm},   {"status", r.status}, {"lhs", r.lhs},       {"rhs", r.rhs}};
}

}  // namespace mop
