#ifndef QJF_IO_JSON_HPP
#define QJF_IO_JSON_HPP

// JSON wire formats. Rationals always cross the boundary as strings ("p" or
// "p/q"), never as floats; exponents are integer numerators over the
// series' stored denominator. nlohmann::json keeps object keys sorted, so
// identical values serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "qjf/decomp.hpp"
#include "qjf/jseries.hpp"
#include "qjf/numeric.hpp"
#include "qjf/qseries.hpp"
#include "qjf/svoa.hpp"
#include "qjf/theta.hpp"

namespace qjf {

using nlohmann::json;

inline json to_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({{"exp", std::to_string(k)}, {"coeff", rat_str(c)}});
    return {{"denom", s.denom()}, {"order", rat_str(s.order())}, {"terms", terms}};
}

inline QSeries qseries_from_json(const json& j) {
    try {
        long long denom = j.at("denom").get<long long>();
        Rat order = parse_rat(j.at("order").get<std::string>());
        QSeries::TermMap t;
        for (const auto& term : j.at("terms"))
            t[std::stoll(term.at("exp").get<std::string>())] =
                parse_rat(term.at("coeff").get<std::string>());
        if (denom <= 0) throw ParseError("denom must be positive");
        return QSeries::make(denom, std::move(t), order);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad QSeries JSON: ") + e.what());
    }
}

inline json to_json(const JSeries& a) {
    json comps = json::array();
    for (const auto& [k, c] : a.components())
        comps.push_back({{"zexp", k}, {"series", to_json(c)}});
    return {{"zdenom", a.zdenom()}, {"order", rat_str(a.order())}, {"components", comps}};
}

inline JSeries jseries_from_json(const json& j) {
    try {
        long long zdenom = j.at("zdenom").get<long long>();
        Rat order = parse_rat(j.at("order").get<std::string>());
        JSeries::CompMap m;
        for (const auto& comp : j.at("components"))
            m.emplace(comp.at("zexp").get<long long>(), qseries_from_json(comp.at("series")));
        if (zdenom <= 0) throw ParseError("zdenom must be positive");
        return JSeries::make(zdenom, std::move(m), order);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSeries JSON: ") + e.what());
    }
}

inline json to_json(const LatticeSpec& spec) {
    auto vec = [](const std::vector<Rat>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(rat_str(x));
        return out;
    };
    json gram = json::array();
    for (const auto& row : spec.gram) gram.push_back(vec(row));
    return {{"gram", gram}, {"shift", vec(spec.shift)}, {"pairing", vec(spec.pairing)}};
}

inline LatticeSpec lattice_from_json(const json& j) {
    try {
        auto vec = [](const json& a) {
            std::vector<Rat> out;
            for (const auto& x : a) out.push_back(parse_rat(x.get<std::string>()));
            return out;
        };
        LatticeSpec spec;
        for (const auto& row : j.at("gram")) spec.gram.push_back(vec(row));
        spec.shift = vec(j.at("shift"));
        spec.pairing = vec(j.at("pairing"));
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad LatticeSpec JSON: ") + e.what());
    }
}

// Jacobi form inputs use the flat coefficient list { n, r, c }.
inline json to_json(const JacobiFormInput& in) {
    json coeffs = json::array();
    for (const auto& [k, comp] : in.form.components()) {
        Rat r = in.form.zexponent(k);
        for (const auto& [key, c] : comp.terms())
            coeffs.push_back({{"n", rat_str(comp.exponent(key))},
                              {"r", to_ll(r.get_num())},
                              {"c", rat_str(c)}});
    }
    return {{"label", in.label}, {"order", rat_str(in.form.order())}, {"coefficients", coeffs}};
}

inline JacobiFormInput jacobi_input_from_json(const json& j) {
    try {
        Rat order = parse_rat(j.at("order").get<std::string>());
        std::map<long long, std::map<Rat, Rat>> acc; // r -> (exponent -> coefficient)
        for (const auto& entry : j.at("coefficients")) {
            Rat n = parse_rat(entry.at("n").get<std::string>());
            long long r = entry.at("r").get<long long>();
            acc[r][n] += parse_rat(entry.at("c").get<std::string>());
        }
        JSeries::CompMap m;
        for (const auto& [r, terms] : acc) {
            long long d = 1;
            for (const auto& [e, c] : terms) d = ll_lcm(d, to_ll(e.get_den()));
            QSeries::TermMap t;
            for (const auto& [e, c] : terms)
                if (c != 0) t[to_ll(Rat(e * rat(d)).get_num())] = c;
            m.emplace(r, QSeries::make(d, std::move(t), order));
        }
        return {JSeries::make(1, std::move(m), order), j.value("label", std::string("input"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad Jacobi form JSON: ") + e.what());
    }
}

inline json to_json(const DecompResult& res) {
    json b = json::array();
    for (const auto& bn : res.b) b.push_back(rat_str(bn));
    return {{"label", res.label},       {"chi", rat_str(res.chi)}, {"a0", rat_str(res.a0)},
            {"b", b},                   {"r_shift", to_json(res.r_shift)},
            {"f0", to_json(res.f0)},    {"f1", to_json(res.f1)},
            {"fmock", to_json(res.fmock)}};
}

inline json to_json(const PositivityReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations)
        out.push_back({{"mu", v.mu}, {"N", rat_str(v.N)}, {"coeff", rat_str(v.coeff)}});
    return out;
}

inline json to_json(const CheckReport& rep) {
    json items = json::array();
    for (const auto& item : rep.items) {
        json info = json::object();
        for (const auto& [k, v] : item.info) info[k] = v;
        items.push_back({{"name", item.name},
                         {"residual", item.residual},
                         {"tol", item.tol},
                         {"pass", item.pass},
                         {"info", info}});
    }
    json trunc = json::object();
    for (const auto& [k, v] : rep.truncation) trunc[k] = v;
    json point = json::object();
    for (const auto& [k, v] : rep.point) point[k] = v;
    return {{"check", rep.check}, {"point", point},   {"residual", rep.residual},
            {"tol", rep.tol},     {"pass", rep.pass}, {"truncation", trunc},
            {"items", items}};
}

} // namespace qjf

#endif
