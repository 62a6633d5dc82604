#include "mirrorq/serialize.hpp"

namespace mirrorq {

json series_to_json(const TruncSeries<>& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i) coeffs.push_back(s[i].str());
    return json{{"var", var_name(s.var())}, {"order", s.order()}, {"coeffs", coeffs}};
}

TruncSeries<> series_from_json(const json& j) {
    Var v = var_from_name(j.at("var").get<std::string>());
    int order = j.at("order").get<int>();
    const json& coeffs = j.at("coeffs");
    if ((int)coeffs.size() != order + 1)
        throw std::invalid_argument("series_from_json: coefficient count mismatch");
    TruncSeries<> s(v, order);
    for (int i = 0; i <= order; ++i) s[i] = Rational(coeffs[i].get<std::string>());
    return s;
}

json complex_to_json(const BigComplex& z) {
    mpfr_prec_t p = std::max(z.re.prec(), z.im.prec());
    return json{{"re", z.re.str()}, {"im", z.im.str()}, {"prec_bits", (long)p}};
}

json report_to_json(const CheckReport& r) {
    json checks = json::array();
    for (const auto& it : r.items) {
        json c{{"name", it.name}, {"status", it.pass ? "pass" : "fail"}};
        if (!it.residual.empty()) c["residual"] = it.residual;
        checks.push_back(c);
    }
    return json{{"suite", r.suite}, {"checks", checks}};
}

std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

}  // namespace mirrorq
