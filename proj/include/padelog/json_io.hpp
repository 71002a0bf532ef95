#ifndef PADELOG_JSON_IO_HPP
#define PADELOG_JSON_IO_HPP

#include <json.hpp>

#include "padelog/measures.hpp"
#include "padelog/normality.hpp"
#include "padelog/numeric_eval.hpp"
#include "padelog/pade_binlog.hpp"
#include "padelog/pade_exp.hpp"

namespace padelog {

// Deterministic payloads: ordered_json keeps insertion order, rationals
// serialize as "p/q" text, reals at a fixed decimal width.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& q) { return to_string(q); }

inline std::string real_str(const Real& x, int digits = 20) {
    return x.str(digits);
}

inline Json to_json(const TruncSeries& s) {
    Json j;
    j["trunc_order"] = s.trunc_order();
    Json arr = Json::array();
    for (const auto& c : s.coeffs()) arr.push_back(to_string(c));
    j["coefficients"] = arr;
    return j;
}

inline Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline Json to_json(const PartialFractionTable& t, const PoleConfig& cfg) {
    Json arr = Json::array();
    for (size_t h = 0; h < cfg.poles.size(); ++h) {
        Json entry;
        entry["pole"] = to_string(cfg.poles[h]);
        Json terms = Json::array();
        for (int j = 1; j <= cfg.multiplicities[h]; ++j)
            terms.push_back(Json{{"exponent", j}, {"coefficient", to_string(t.coeff[h][j - 1])}});
        entry["terms"] = terms;
        arr.push_back(entry);
    }
    return arr;
}

inline Json to_json(const SystemConfig& cfg) {
    Json j;
    Json om = Json::array(), rr = Json::array();
    for (const auto& w : cfg.omegas) om.push_back(to_string(w));
    for (int r : cfg.rs) rr.push_back(r);
    j["omegas"] = om;
    j["rs"] = rr;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    return j;
}

inline Json to_json(const SingleSystem& sys) {
    Json j;
    j["config"] = to_json(sys.config);
    Json polys = Json::array();
    for (size_t i = 0; i < sys.P.size(); ++i)
        for (size_t jj = 0; jj < sys.P[i].size(); ++jj)
            polys.push_back(Json{{"i", i + 1}, {"j", jj}, {"coefficients", to_json(sys.P[i][jj])}});
    j["polynomials"] = polys;
    j["certified_order"] = sys.certified_order;
    return j;
}

inline Json to_json(const PadeSystem& sys) {
    Json j;
    Json om = Json::array(), rr = Json::array();
    for (const auto& w : sys.omegas) om.push_back(to_string(w));
    for (int r : sys.rs) rr.push_back(r);
    j["omegas"] = om;
    j["rs"] = rr;
    j["n"] = sys.n;
    j["scaling"] = sys.scaling.get_str();
    Json cols = Json::array();
    for (const auto& c : sys.columns) cols.push_back(to_json(c));
    j["columns"] = cols;
    return j;
}

inline Json to_json(const DeterminantCertificate& cert) {
    Json j;
    j["monomial_ok"] = cert.monomial_ok;
    j["exponent"] = cert.exponent;
    j["gamma"] = to_string(cert.gamma);
    return j;
}

inline Json to_json(const MeasureReport& rep) {
    Json j;
    j["valid"] = rep.valid;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    j["C_omega"] = real_str(rep.C_omega);
    j["A"] = real_str(rep.A);
    j["B"] = real_str(rep.B);
    j["U"] = real_str(rep.U);
    j["V"] = real_str(rep.V);
    if (rep.valid) {
        j["mu"] = real_str(rep.mu);
        j["C"] = real_str(rep.C_eps);
        j["log_C"] = real_str(Real(log(rep.C_eps)));
    }
    Json terms = Json::array();
    for (const auto& [label, value] : rep.terms)
        terms.push_back(Json{{"term", label}, {"value", real_str(value)}});
    j["terms"] = terms;
    return j;
}

inline Json to_json(const GrowthRow& row) {
    return Json{{"n", row.n},
                {"log_max_coeff", real_str(row.log_max_coeff)},
                {"g", real_str(row.g)},
                {"g_over_n", real_str(row.g_over_n)}};
}

inline Json to_json(const DecayRow& row) {
    return Json{{"n", row.n},
                {"measured", real_str(row.measured)},
                {"bound", real_str(row.bound)},
                {"slack", real_str(row.slack)},
                {"pass", row.pass}};
}

}  // namespace padelog

#endif
