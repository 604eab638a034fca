#pragma once

// JSON schemas for the library's data types.  Keys are emitted in a fixed
// order (nlohmann ordered_json) so identical inputs produce byte-identical
// output; rationals travel as canonical "p/q" strings, complex values as
// [re, im] pairs.  Polynomial round-trips are bit-exact.

#include <string>

#include <json.hpp>

#include "lidstone/basis.hpp"
#include "lidstone/expand.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/growth.hpp"
#include "lidstone/multipoly.hpp"
#include "lidstone/verify.hpp"

namespace lidstone {

using Json = nlohmann::ordered_json;

struct JsonFormatError : std::runtime_error {
    explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

// ---- basic values ----------------------------------------------------------

inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw JsonFormatError("expected rational as \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

inline Json complex_to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }

inline Json multi_index_to_json(const MultiIndex& t) {
    Json a = Json::array();
    for (int j = 0; j < t.dim(); ++j) a.push_back(t[j]);
    return a;
}

inline MultiIndex multi_index_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw JsonFormatError("expected multi-index as a nonempty array");
    std::vector<int> e;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<int>() < 0)
            throw JsonFormatError("multi-index entries must be nonnegative integers");
        e.push_back(v.get<int>());
    }
    return MultiIndex(std::move(e));
}

// ---- polynomials -----------------------------------------------------------

inline Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["n"] = p.dim();
    auto deg = p.total_degree();
    j["degree"] = deg ? Json(*deg) : Json(nullptr);
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json term;
        term["exp"] = multi_index_to_json(k);
        term["coef"] = rational_to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MultiPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw JsonFormatError("polynomial JSON needs \"n\" and \"terms\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw JsonFormatError("polynomial dimension must be a positive integer");
    MultiPoly p(j["n"].get<int>());
    for (const auto& term : j["terms"]) {
        if (!term.contains("exp") || !term.contains("coef"))
            throw JsonFormatError("polynomial term needs \"exp\" and \"coef\"");
        p.add_term(multi_index_from_json(term["exp"]), rational_from_json(term["coef"]));
    }
    return p;
}

// ---- frames and data sets ----------------------------------------------------

inline Json frame_to_json(const AffineFrame& f) {
    Json points = Json::array();
    for (const auto& p : f.points()) {
        Json row = Json::array();
        for (const auto& q : p) row.push_back(rational_to_json(q));
        points.push_back(std::move(row));
    }
    Json j;
    j["points"] = std::move(points);
    return j;
}

inline AffineFrame frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points")) throw JsonFormatError("frame JSON needs \"points\"");
    std::vector<std::vector<Rational>> pts;
    for (const auto& row : j["points"]) {
        std::vector<Rational> p;
        for (const auto& v : row) p.push_back(rational_from_json(v));
        pts.push_back(std::move(p));
    }
    try {
        return AffineFrame(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

inline Json dataset_to_json(const DataSet& d) {
    Json j;
    j["n"] = d.n;
    if (d.frame) j["frame"] = frame_to_json(*d.frame);
    Json entries = Json::array();
    for (const auto& [key, value] : d.entries) {
        Json e;
        e["t"] = multi_index_to_json(key.t);
        e["i"] = key.i;
        e["value"] = rational_to_json(value);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline DataSet dataset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw JsonFormatError("data set JSON needs \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw JsonFormatError("data set dimension must be a positive integer");
    DataSet d(j["n"].get<int>());
    if (j.contains("frame") && !j["frame"].is_null()) d.frame = frame_from_json(j["frame"]);
    for (const auto& e : j["entries"]) {
        if (!e.contains("t") || !e.contains("i") || !e.contains("value"))
            throw JsonFormatError("data entry needs \"t\", \"i\" and \"value\"");
        if (!e["i"].is_number_integer()) throw JsonFormatError("data entry index must be an integer");
        MultiIndex t = multi_index_from_json(e["t"]);
        int i = e["i"].get<int>();
        IndexPair key(t, i);
        if (!in_index_set(key))
            throw JsonFormatError("data entry (t, i) is not an admissible pair");
        if (d.entries.count(key)) throw JsonFormatError("duplicate data entry");
        d.set(key, rational_from_json(e["value"]));
    }
    return d;
}

// ---- reports ----------------------------------------------------------------

inline Json basis_element_to_json(const LidstoneBasisElement& el) {
    Json j;
    j["t"] = multi_index_to_json(el.t);
    j["i"] = el.i;
    j["degree"] = el.degree;
    j["poly"] = poly_to_json(el.poly);
    return j;
}

inline Json verify_entry_to_json(const VerifyEntry& e) {
    Json j;
    j["t"] = multi_index_to_json(e.t);
    j["i"] = e.i;
    if (e.exact_value)
        j["value"] = e.exact_value->str();
    else
        j["value"] = complex_to_json(e.numeric_value);
    j["exact"] = e.exact;
    j["pass"] = e.pass;
    return j;
}

inline Json verify_report_to_json(const VerifyReport& r) {
    Json j;
    j["total"] = r.total;
    j["passed"] = r.passed;
    j["exact"] = r.exact_count;
    j["all_pass"] = r.all_pass;
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(verify_entry_to_json(e));
    j["entries"] = std::move(entries);
    return j;
}

inline Json type_estimate_to_json(const TypeEstimate& t) {
    Json j;
    j["type"] = t.type;
    j["order"] = t.order;
    j["window_spread"] = t.window_spread;
    return j;
}

inline Json diagnostics_to_json(const GrowthDiagnostics& d) {
    Json j;
    j["r_grid"] = d.r_grid;
    j["supnorm_estimates"] = d.growth_condition.sup_norms;
    j["order_estimate"] = d.order_estimate;
    Json types = Json::array();
    for (const auto& t : d.directional_types) {
        Json e;
        e["direction"] = t.direction;
        e["estimate"] = type_estimate_to_json(t.estimate);
        e["at_pi_boundary"] = t.at_pi_boundary;
        types.push_back(std::move(e));
    }
    j["type_estimates"] = std::move(types);
    Json growth;
    growth["verdict"] = to_string(d.growth_condition.verdict);
    growth["tail_max_log"] = d.growth_condition.tail_max_log;
    growth["threshold_log"] = d.growth_condition.threshold_log;
    growth["margin_log"] = d.growth_condition.margin_log;
    j["growth_condition"] = std::move(growth);
    j["type_condition"] = Json{{"verdict", to_string(d.type_condition)}};
    Json polya;
    polya["A"] = d.params.a;
    polya["eta"] = d.params.eta;
    polya["T0"] = d.threshold_order;
    j["polya_threshold"] = std::move(polya);
    Json hits = Json::array();
    for (const auto& h : d.exception_scan) {
        Json e;
        e["t"] = multi_index_to_json(h.pair.t);
        e["i"] = h.pair.i;
        e["value"] = complex_to_json(h.value);
        e["exact"] = h.exact;
        hits.push_back(std::move(e));
    }
    j["exception_scan"] = std::move(hits);
    if (d.degree_certificate) {
        Json c;
        c["degree"] = d.degree_certificate->degree;
        c["bound"] = d.degree_certificate->bound;
        c["pass"] = d.degree_certificate->pass;
        j["degree_certificate"] = std::move(c);
    }
    j["notes"] = d.notes;
    return j;
}

inline Json expansion_to_json(const Expansion& e) {
    Json j;
    j["n"] = e.n;
    j["truncation"] = e.truncation;
    j["pairs_scanned"] = e.pairs_scanned;
    j["all_exact"] = e.all_exact;
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        Json row;
        row["t"] = multi_index_to_json(t.pair.t);
        row["i"] = t.pair.i;
        if (t.exact)
            row["coef"] = rational_to_json(t.coef_exact);
        else
            row["coef"] = complex_to_json(t.coef);
        row["exact"] = t.exact;
        row["basis_degree"] = t.basis.degree;
        row["basis"] = poly_to_json(t.basis.poly);
        terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    if (e.partial_sum) j["partial_sum"] = poly_to_json(*e.partial_sum);
    Json res;
    res["max_abs"] = e.residual_max;
    res["exact_zero"] = e.residual_exact_zero;
    res["grid_points_per_axis"] = e.residual_grid;
    res["random_samples"] = e.residual_samples;
    j["residual"] = std::move(res);
    return j;
}

}  // namespace lidstone
