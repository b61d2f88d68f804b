#pragma once

#include <string>

#include <json.hpp>

#include "centroidal/corpus.hpp"
#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"
#include "centroidal/synthesis.hpp"
#include "centroidal/term_io.hpp"
#include "centroidal/totality.hpp"

namespace centroidal {

using Json = nlohmann::json;

// {"num": "...", "den": "..."} over Q, {"res": "..."} over GF(p).
inline Json to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return Json{{"res", std::to_string(s.residue_value())}};
    return Json{{"num", numerator(s.rational_value()).str()},
                {"den", denominator(s.rational_value()).str()}};
}

// List of {"exps": [e1..e_k], "num"/"den" or "res"}.
inline Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json entry = to_json(c);
        entry["exps"] = m;
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline Json to_json(const PolyPair& pp) {
    return Json{{"n", pp.pair_count()}, {"p1", to_json(pp.p1)}, {"p2", to_json(pp.p2)}};
}

inline Json to_json(const TotalityReport& r) {
    Json j{{"strongly_total", r.strongly_total}, {"defect", to_json(r.defect)}};
    j["semantically_total"] = r.semantically_total ? Json(*r.semantically_total) : Json(nullptr);
    if (r.witness) {
        Json w = Json::array();
        for (const auto& s : *r.witness) w.push_back(to_json(s));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json to_json(const SynthesisResult& r) {
    return Json{{"term", print_term(r.term)},
                {"verified", r.verified},
                {"nodes", r.nodes},
                {"basis_count", r.basis_count}};
}

inline Json to_json(const BasisElement& b) {
    return Json{{"I", b.I}, {"J", b.J}};
}

inline Json to_json(const CorpusEntry& e) {
    return Json{{"name", e.name},
                {"term", print_term(e.term)},
                {"expected", to_json(e.expected)},
                {"note", e.note}};
}

}  // namespace centroidal
