#include "commat/poly_io.hpp"

#include "json_util.hpp"

namespace commat {

namespace detail {

nlohmann::ordered_json poly_json_value(const Poly& p) {
    nlohmann::ordered_json j;
    j["n"] = p.ring().n;
    j["char"] = p.ring().characteristic;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : p.terms()) {
        nlohmann::ordered_json jt;
        jt["c"] = t.coeff.get_str();
        auto jm = nlohmann::ordered_json::object();
        for (const auto& [v, e] : t.mono.factors())
            jm[v.name()] = e;
        jt["m"] = std::move(jm);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace detail

std::string poly_to_json(const Poly& p) { return detail::poly_json_value(p).dump(); }

std::string poly_to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        mpz_class c = t.coeff;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first) {
            if (negative)
                s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        const bool unit = (c == 1) && !t.mono.is_one();
        if (!unit)
            s += c.get_str();
        bool star = !unit;
        for (const auto& [v, e] : t.mono.factors()) {
            if (star)
                s += "*";
            s += v.name();
            if (e > 1)
                s += "^" + std::to_string(e);
            star = true;
        }
    }
    return s;
}

}  // namespace commat
