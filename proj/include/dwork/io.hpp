#pragma once

// JSON serialization for replayable runs.  All values that can exceed 64
// bits are strings (decimal, or "num/den" for rationals); a schema_version
// field is embedded in every top-level document.

#include "dwork/charcount.hpp"
#include "dwork/counting.hpp"
#include "dwork/families.hpp"
#include "dwork/frobenius.hpp"
#include "dwork/operators.hpp"
#include "dwork/padic.hpp"
#include "dwork/zeta.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace dwork {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline json to_json(const ExtField& F) {
    json j;
    j["p"] = F.p();
    j["r"] = F.r();
    j["modulus"] = F.modulus();
    std::vector<uint32_t> gen;
    for (uint32_t i = 0; i < F.r(); ++i) gen.push_back(F.coeff(F.generator(), i));
    j["generator"] = gen;
    return j;
}

inline json to_json(const CountResult& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = c.family;
    j["p"] = c.p;
    j["r"] = c.r;
    j["variant"] = c.variant;
    j["count"] = to_string(c.count);
    j["truncated"] = c.truncated;
    return j;
}

inline json to_json(const CharCountResult& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = c.family;
    j["p"] = c.p;
    j["precision"] = c.precision;
    j["value"] = to_string(c.value.value());
    j["modulus"] = to_string(c.value.modulus());
    if (c.resolved) j["resolved_count"] = to_string(*c.resolved);
    if (c.projective) j["projective_count"] = to_string(*c.projective);
    j["torus_value"] = to_string(c.torus_value.value());
    j["printed_forms_agree"] = c.printed_forms_agree;
    return j;
}

inline json to_json(const GaussRatio& g) {
    json j;
    std::vector<long> num, den;
    for (const auto& c : g.num_indices) num.push_back(c.m);
    for (const auto& c : g.den_indices) den.push_back(c.m);
    j["num_indices"] = num;
    j["den_indices"] = den;
    j["p"] = g.p;
    j["precision"] = g.precision;
    j["unit"] = to_string(g.unit.value());
    j["p_exponent"] = g.exponent;
    if (g.integral()) j["value"] = to_string(g.value().value());
    return j;
}

inline json to_json(const DifferentialOperator& op) {
    json j;
    j["variable"] = op.var();
    j["style"] = op.style() == OpStyle::theta ? "theta" : "ddx";
    json terms = json::array();
    const char* key = op.style() == OpStyle::theta ? "theta_power" : "power";
    for (size_t k = 0; k < op.coeffs().size(); ++k) {
        if (op.coeff(k).is_zero()) continue;
        json t;
        t[key] = k;
        t["coeff"] = op.coeff(k).str(op.var());
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["canonical_text"] = op.str();
    return j;
}

inline json to_json(const RatSeries& s) {
    json j;
    j["variable"] = s.var();
    j["order"] = s.order();
    json c = json::array();
    for (const auto& x : s.coeffs()) c.push_back(to_string(x));
    j["coefficients"] = c;
    return j;
}

inline json to_json(const HypergeometricData& h) {
    json j;
    json up = json::array(), lo = json::array();
    for (const auto& a : h.upper) up.push_back(to_string(a));
    for (const auto& b : h.lower) lo.push_back(to_string(b));
    j["upper"] = up;
    j["lower"] = lo;
    j["scale"] = to_string(h.scale);
    j["variable"] = h.variable_map;
    return j;
}

inline json to_json(const SlopeProfile& s) {
    json arr = json::array();
    for (const auto& [slope, mult] : s.slopes) {
        json e;
        e["slope"] = to_string(slope);
        e["multiplicity"] = mult;
        arr.push_back(e);
    }
    return arr;
}

inline json to_json(const WanReport& w) {
    json j;
    j["r"] = w.r;
    j["count_X"] = to_string(w.count_X);
    j["count_Y_closure"] = to_string(w.count_Y_closure);
    if (w.count_Y_torus) j["count_Y_torus"] = to_string(*w.count_Y_torus);
    j["valuation"] = w.valuation_closure;
    j["passes"] = w.passes;
    return j;
}

// family descriptor of the CLI input format, e.g.
// {"type":"dwork","n":5,"psi":"2","field":{"p":7,"r":1}}
inline json family_descriptor(const std::string& type, unsigned n, const std::string& psi,
                              uint32_t p, uint32_t r) {
    json j;
    j["type"] = type;
    j["n"] = n;
    j["psi"] = psi;
    j["field"] = {{"p", p}, {"r", r}};
    return j;
}

}  // namespace dwork
