#pragma once

#include "lform/intform.hpp"
#include "lform/linking.hpp"
#include "lform/orders.hpp"
#include "lform/parse.hpp"
#include "lform/surgery.hpp"
#include "lform/torsion.hpp"

#include <json.hpp>

#include <string>

namespace lform {

using nlohmann::json;

// ---- polynomials -----------------------------------------------------------

/// Accepts the text grammar or an object mapping exponent strings to ints.
inline LaurentPoly poly_from_json(const json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (j.is_number_integer()) return LaurentPoly(Int(j.get<long long>()));
    if (j.is_object()) {
        LaurentPoly::Map m;
        for (const auto& [key, val] : j.items()) {
            const auto exp = static_cast<LaurentPoly::Exp>(std::stoll(key));
            Int c = val.is_string() ? Int(val.get<std::string>()) : Int(val.get<long long>());
            if (c != 0) m[exp] = c;
        }
        return LaurentPoly::from_map(std::move(m));
    }
    throw std::invalid_argument("polynomial JSON must be a string, integer, or exponent map");
}

inline json poly_to_json(const LaurentPoly& p) { return to_string(p); }

inline RatFun ratfun_from_json(const json& j) {
    if (j.is_string()) return parse_ratfun(j.get<std::string>());
    if (j.is_number_integer()) return RatFun(Int(j.get<long long>()));
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
    throw std::invalid_argument("rational function JSON must be \"num / den\" or {num, den}");
}

inline json ratfun_to_json(const RatFun& f) { return to_string(f); }

// ---- matrices --------------------------------------------------------------

inline PolyMatrix poly_matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<std::vector<LaurentPoly>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(poly_from_json(e));
    }
    return PolyMatrix::from_rows(rows);
}

inline json poly_matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RatFunMatrix ratfun_matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<std::vector<RatFun>> rows;
    for (const auto& r : j) {
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(ratfun_from_json(e));
    }
    return RatFunMatrix::from_rows(rows);
}

inline json ratfun_matrix_to_json(const RatFunMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("integer matrix JSON must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        rows.emplace_back();
        for (const auto& e : r)
            rows.back().push_back(e.is_string() ? Int(e.get<std::string>())
                                                : Int(e.get<long long>()));
    }
    return IntMatrix::from_rows(rows);
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Int& v = m(i, c);
            if (v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max())
                row.push_back(v.convert_to<long long>());
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- linking forms and presented modules -----------------------------------

inline LinkingForm linking_form_from_json(const json& j) {
    if (!j.contains("presentation") || !j.contains("values"))
        throw std::invalid_argument("linking form JSON needs \"presentation\" and \"values\"");
    return LinkingForm(poly_matrix_from_json(j.at("presentation")),
                       ratfun_matrix_from_json(j.at("values")));
}

inline json linking_form_to_json(const LinkingForm& l) {
    return json{{"presentation", poly_matrix_to_json(l.presentation())},
                {"values", ratfun_matrix_to_json(l.values())}};
}

inline PresentedModule presented_module_from_json(const json& j) {
    if (j.is_object() && j.contains("relations"))
        return PresentedModule(poly_matrix_from_json(j.at("relations")));
    return PresentedModule(poly_matrix_from_json(j));
}

// ---- based complexes (degree lists are written top degree first) ------------

inline BasedComplex based_complex_from_json(const json& j) {
    if (!j.contains("dims") || !j.contains("boundaries"))
        throw std::invalid_argument("complex JSON needs \"dims\" and \"boundaries\"");
    const auto& jd = j.at("dims");
    const std::size_t count = jd.size();
    if (count == 0) throw std::invalid_argument("complex JSON: empty dims");
    BasedComplex c;
    c.dims.resize(count);
    for (std::size_t k = 0; k < count; ++k)
        c.dims[count - 1 - k] = jd.at(k).get<std::size_t>(); // listed C_m ... C_0
    const auto& jb = j.at("boundaries");
    if (jb.size() + 1 != count)
        throw std::invalid_argument("complex JSON: need one boundary per adjacent pair");
    c.boundaries.resize(count - 1);
    for (std::size_t k = 0; k < jb.size(); ++k) {
        // listed k-th boundary maps the k-th listed space to the next one,
        // i.e. C_{m-k} -> C_{m-k-1}; internally that is boundaries[m-k-1]
        c.boundaries[count - 2 - k] = ratfun_matrix_from_json(jb.at(k));
    }
    c.homology_bases.resize(count);
    if (j.contains("homology_bases") && !j.at("homology_bases").is_null()) {
        const auto& jh = j.at("homology_bases");
        if (jh.size() != count)
            throw std::invalid_argument("complex JSON: homology_bases length mismatch");
        for (std::size_t k = 0; k < count; ++k) {
            const auto& hk = jh.at(k);
            if (hk.is_null()) continue;
            std::vector<std::vector<RatFun>> vecs;
            for (const auto& v : hk) {
                vecs.emplace_back();
                for (const auto& e : v) vecs.back().push_back(ratfun_from_json(e));
            }
            c.homology_bases[count - 1 - k] = std::move(vecs);
        }
    }
    c.validate();
    return c;
}

inline json based_complex_to_json(const BasedComplex& c) {
    const std::size_t count = c.dims.size();
    json jd = json::array(), jb = json::array(), jh = json::array();
    for (std::size_t k = 0; k < count; ++k) jd.push_back(c.dims[count - 1 - k]);
    for (std::size_t k = 0; k + 1 < count; ++k)
        jb.push_back(ratfun_matrix_to_json(c.boundaries[count - 2 - k]));
    bool any_h = false;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& h = c.homology_bases[count - 1 - k];
        if (!h) {
            jh.push_back(nullptr);
            continue;
        }
        any_h = true;
        json vecs = json::array();
        for (const auto& v : *h) {
            json vec = json::array();
            for (const auto& e : v) vec.push_back(to_string(e));
            vecs.push_back(std::move(vec));
        }
        jh.push_back(std::move(vecs));
    }
    json out{{"dims", jd}, {"boundaries", jb}};
    if (any_h) out["homology_bases"] = jh;
    return out;
}

// ---- reports ----------------------------------------------------------------

inline json invariants_to_json(const IntInvariants& inv) {
    return json{{"rank", inv.rank},
                {"signature", inv.signature},
                {"parity", inv.even ? "even" : "odd"},
                {"det_nondegenerate", inv.det_nondeg.str()}};
}

inline json congruence_to_json(const CongruenceVerdict& v) {
    json j;
    switch (v.kind) {
        case CongruenceVerdict::Kind::congruent: j["verdict"] = "congruent"; break;
        case CongruenceVerdict::Kind::not_congruent: j["verdict"] = "not_congruent"; break;
        case CongruenceVerdict::Kind::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    if (v.witness) j["witness"] = int_matrix_to_json(*v.witness);
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    j["bound"] = v.bound_used.str();
    return j;
}

inline json realisation_to_json(const RealisationReport& r) {
    return json{{"linking_matrix", ratfun_matrix_to_json(r.linking_matrix)},
                {"framing_symmetric", r.framing_symmetric},
                {"dual_is_transpose", r.dual_is_qt},
                {"alexander_polynomial", to_string(r.delta_y.representative())},
                {"order_matches_det", r.order_matches_det},
                {"alexander_product", to_string(r.alexander_product)},
                {"alexander_trivial", r.alexander_trivial},
                {"tau_les_original", to_string(r.tau_les_l)},
                {"tau_les_dual", to_string(r.tau_les_lprime)},
                {"les_torsion_matches", r.les_torsion_matches},
                {"all_passed", r.all_passed}};
}

inline json multiplicativity_to_json(const MultiplicativityReport& r) {
    return json{{"tau_sub", to_string(r.tau_sub)},
                {"tau_total", to_string(r.tau_total)},
                {"tau_quot", to_string(r.tau_quot)},
                {"tau_les", to_string(r.tau_les)},
                {"discrepancy", to_string(r.discrepancy)},
                {"exact_equal", r.exact_equal}};
}

} // namespace lform
