#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "rcr/metrics.hpp"

namespace rcr {

using Json = nlohmann::ordered_json;

namespace detail {

// JSON numbers are kept within the exact-integer double range; anything
// larger is emitted as a decimal string.
inline Json big_to_json(const BigInt& v) {
    if (v >= BigInt(-(std::int64_t{1} << 53)) && v <= BigInt(std::int64_t{1} << 53))
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Json rational_to_json(const Rational& q) {
    Json j;
    j["num"] = big_to_json(numerator(q));
    j["den"] = big_to_json(denominator(q));
    j["approx"] = static_cast<double>(q);
    return j;
}

inline Json bounds_to_json(const ValueBounds& b) {
    Json j;
    j["lo"] = big_to_json(ceil_rat(b.lo));
    j["hi"] = big_to_json(floor_rat(b.hi));
    j["branch"] = b.branch;
    if (!b.coefficient_name.empty()) {
        j[b.coefficient_name] = rational_to_json(b.coefficient);
    }
    j["method"] = "bound";
    return j;
}

}  // namespace detail

inline Json report_to_json(const MetricsReport& rep) {
    Json j;
    j["n"] = rep.params.n;
    j["d"] = rep.params.d;
    j["r"] = rep.params.r;
    j["regime"] = rep.regime;
    j["n_divisible_by_d"] = rep.n_mod_d_zero;
    j["vertices"] = detail::big_to_json(rep.vertices);
    j["edges"] = detail::big_to_json(rep.edges);

    j["diameter"] = Json{{"value", rep.diameter}, {"method", "formula"}};
    if (rep.diameter_oracle) j["diameter_oracle"] = Json{{"value", *rep.diameter_oracle}, {"method", "oracle"}};

    if (rep.td) j["td"] = Json{{"value", *rep.td}, {"method", "router-exact"}};
    if (rep.td_oracle) j["td_oracle"] = Json{{"value", *rep.td_oracle}, {"method", "oracle"}};
    if (rep.sum_l) j["sum_l"] = Json{{"value", *rep.sum_l}, {"method", "router-exact"}};
    if (rep.weight_sum) j["weight_sum"] = Json{{"value", *rep.weight_sum}, {"method", "router-exact"}};
    j["td_bounds"] = detail::bounds_to_json(rep.td_envelope);

    if (rep.wiener_index) j["wiener"] = Json{{"value", *rep.wiener_index}, {"method", "router-exact"}};
    if (rep.xi) j["xi"] = Json{{"value", *rep.xi}, {"method", "router-exact"}};
    j["xi_bounds"] = detail::bounds_to_json(rep.xi_envelope);

    if (rep.pi_exact) j["pi"] = Json{{"value", detail::big_to_json(*rep.pi_exact)}, {"method", "router-exact"}};
    j["pi_bounds"] = detail::bounds_to_json(rep.pi_envelope);
    if (rep.pi_m_simulated) j["pi_m_hi"] = Json{{"value", *rep.pi_m_simulated}, {"method", "simulation"}};

    Json bw;
    bw["lo"] = detail::big_to_json(rep.bw.lo);
    bw["hi"] = detail::big_to_json(rep.bw.hi);
    bw["lo_case"] = rep.bw.lo_case;
    bw["method"] = "bound";
    Json cons = Json::array();
    for (const auto& c : rep.constructions) {
        Json jc;
        jc["name"] = c.name;
        jc["cut"] = detail::big_to_json(c.cut);
        if (c.counted) jc["counted"] = *c.counted;
        jc["method"] = "formula";
        cons.push_back(jc);
    }
    bw["constructions"] = cons;
    if (rep.bw_oracle) bw["oracle"] = Json{{"value", *rep.bw_oracle}, {"method", "oracle"}};
    j["bw"] = bw;
    return j;
}

}  // namespace rcr
