#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "element.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "ordering.hpp"
#include "tensor.hpp"

namespace grassbanach {

using json = nlohmann::ordered_json;

inline json to_json(const field_descriptor& d) {
    json j;
    switch (d.kind()) {
        case field_kind::real64: j["kind"] = "real64"; break;
        case field_kind::rational: j["kind"] = "rational"; break;
        case field_kind::padic:
            j["kind"] = "padic";
            j["p"] = d.prime();
            j["precision"] = d.precision();
            break;
    }
    return j;
}

inline field_descriptor field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw parse_error(0, "field descriptor must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "real64") return field_descriptor::real64();
    if (kind == "rational") return field_descriptor::rational();
    if (kind == "padic") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw parse_error(0, "padic descriptor requires an unsigned \"p\"");
        const int precision = j.contains("precision") ? j["precision"].get<int>() : 20;
        return field_descriptor::padic(j["p"].get<std::uint64_t>(), precision);
    }
    throw parse_error(0, "unknown field kind \"" + kind + "\"");
}

inline json to_json(const monomial& m) {
    json j = json::array();
    for (generator_label a : m.labels()) j.push_back(a);
    return j;
}

inline monomial monomial_from_json(const json& j) {
    if (!j.is_array()) throw parse_error(0, "monomial must be an array of labels");
    std::vector<generator_label> labels;
    labels.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw parse_error(0, "monomial labels must be unsigned integers");
        labels.push_back(v.get<generator_label>());
    }
    return monomial(labels);
}

/// Scalar coefficients serialize in the scalar text grammar.
inline json coeff_to_json(const scalar& c) { return c.to_string(); }

inline scalar coeff_from_json(const json& j, const field_descriptor& d) {
    if (!j.is_string()) throw parse_error(0, "coefficient must be a string");
    return scalar::parse(j.get<std::string>(), d);
}

/// Polynomial coefficients serialize as an array of base-field scalar
/// strings: ["1", "0", "3/2"] is 1 + (3/2)t^2.
inline json coeff_to_json(const bscalar& c) {
    json j = json::array();
    for (const scalar& s : c.coefficients()) j.push_back(s.to_string());
    return j;
}

inline bscalar coeff_from_json(const json& j, const algebra_descriptor& d) {
    if (!j.is_array()) throw parse_error(0, "polynomial coefficient must be an array of strings");
    std::vector<scalar> cs;
    cs.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) throw parse_error(0, "polynomial coefficient entries must be strings");
        cs.push_back(scalar::parse(v.get<std::string>(), d.base()));
    }
    return bscalar::from_coefficients(d, cs);
}

namespace detail {

template <coefficient_ring C>
json terms_to_json(const basic_element<C>& a) {
    json terms = json::array();
    for (const auto& t : a.terms()) {
        json entry;
        entry["monomial"] = to_json(t.mono);
        entry["coeff"] = coeff_to_json(t.coeff);
        terms.push_back(std::move(entry));
    }
    return terms;
}

template <coefficient_ring C, typename Descriptor>
std::vector<std::pair<monomial, C>> terms_from_json(const json& j, const Descriptor& d) {
    if (!j.is_array()) throw parse_error(0, "\"terms\" must be an array");
    std::vector<std::pair<monomial, C>> terms;
    terms.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("monomial") || !entry.contains("coeff"))
            throw parse_error(0, "each term needs \"monomial\" and \"coeff\"");
        terms.emplace_back(monomial_from_json(entry["monomial"]), coeff_from_json(entry["coeff"], d));
    }
    return terms;
}

}  // namespace detail

inline json to_json(const grassmann_element& a) {
    json j;
    j["field"] = to_json(a.descriptor());
    j["terms"] = detail::terms_to_json(a);
    return j;
}

/// The JSON form carries no ordering function; elements deserialize with
/// the canonical ordering unless one is supplied.
inline grassmann_element element_from_json(const json& j,
                                           ordering_function ord = ordering_function::canonical()) {
    if (!j.is_object() || !j.contains("field") || !j.contains("terms"))
        throw parse_error(0, "element must be an object with \"field\" and \"terms\"");
    const field_descriptor d = field_from_json(j["field"]);
    return grassmann_element::from_terms(d, std::move(ord),
                                         detail::terms_from_json<scalar>(j["terms"], d));
}

inline json to_json(const algebra_descriptor& d) {
    json j;
    j["base"] = to_json(d.base());
    if (d.kind() == algebra_kind::truncated_poly) {
        j["degree_bound"] = d.degree_bound();
        j["norm"] = d.norm_kind() == poly_norm::l1 ? "l1" : "sup";
    }
    return j;
}

inline algebra_descriptor algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base"))
        throw parse_error(0, "algebra descriptor must be an object with \"base\"");
    const field_descriptor base = field_from_json(j["base"]);
    if (!j.contains("degree_bound")) return algebra_descriptor::field(base);
    const int bound = j["degree_bound"].get<int>();
    poly_norm norm = poly_norm::l1;
    if (j.contains("norm")) {
        const std::string n = j["norm"].get<std::string>();
        if (n == "sup")
            norm = poly_norm::sup;
        else if (n != "l1")
            throw parse_error(0, "unknown polynomial norm \"" + n + "\"");
    }
    return algebra_descriptor::truncated_poly(base, bound, norm);
}

inline json to_json(const extended_element& a) {
    json j;
    j["algebra"] = to_json(a.descriptor());
    j["terms"] = detail::terms_to_json(a);
    return j;
}

inline extended_element extended_from_json(const json& j,
                                           ordering_function ord = ordering_function::canonical()) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("terms"))
        throw parse_error(0, "extended element must be an object with \"algebra\" and \"terms\"");
    const algebra_descriptor d = algebra_from_json(j["algebra"]);
    return extended_element::from_terms(d, std::move(ord),
                                        detail::terms_from_json<bscalar>(j["terms"], d));
}

inline json to_json(const tensor_element& x) {
    json j;
    j["mode"] = x.mode() == tensor_mode::projective ? "projective" : "injective";
    json words = json::array();
    for (const auto& [w, c] : x.words()) {
        json entry;
        entry["word"] = json::array();
        for (generator_label a : w) entry["word"].push_back(a);
        entry["coeff"] = coeff_to_json(c);
        words.push_back(std::move(entry));
    }
    j["words"] = std::move(words);
    return j;
}

/// Tensor JSON does not embed the field descriptor; supply it explicitly.
inline tensor_element tensor_from_json(const json& j, const field_descriptor& d) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("words"))
        throw parse_error(0, "tensor must be an object with \"mode\" and \"words\"");
    const std::string mode_name = j["mode"].get<std::string>();
    tensor_mode mode;
    if (mode_name == "projective")
        mode = tensor_mode::projective;
    else if (mode_name == "injective")
        mode = tensor_mode::injective;
    else
        throw parse_error(0, "unknown tensor mode \"" + mode_name + "\"");
    if (!j["words"].is_array()) throw parse_error(0, "\"words\" must be an array");
    std::vector<std::pair<word, scalar>> entries;
    entries.reserve(j["words"].size());
    for (const auto& entry : j["words"]) {
        if (!entry.is_object() || !entry.contains("word") || !entry.contains("coeff"))
            throw parse_error(0, "each word entry needs \"word\" and \"coeff\"");
        word w;
        for (const auto& v : entry["word"]) {
            if (!v.is_number_unsigned()) throw parse_error(0, "word labels must be unsigned integers");
            w.push_back(v.get<generator_label>());
        }
        entries.emplace_back(std::move(w), coeff_from_json(entry["coeff"], d));
    }
    return tensor_element::from_words(d, mode, entries);
}

/// Ordering tables load from JSON as
/// {"table": [{"set": [1,2], "order": [2,1]}, ...]}.
inline ordering_function ordering_from_json(const json& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
        throw parse_error(0, "ordering must be an object with a \"table\" array");
    ordering_function::table_type table;
    for (const auto& entry : j["table"]) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("order"))
            throw parse_error(0, "each table entry needs \"set\" and \"order\"");
        monomial key = monomial_from_json(entry["set"]);
        if (!entry["order"].is_array()) throw parse_error(0, "\"order\" must be an array of labels");
        std::vector<generator_label> tuple;
        for (const auto& v : entry["order"]) {
            if (!v.is_number_unsigned())
                throw parse_error(0, "\"order\" labels must be unsigned integers");
            tuple.push_back(v.get<generator_label>());
        }
        if (table.count(key)) throw invalid_ordering("duplicate table entry for " + key.to_string());
        table.emplace(std::move(key), std::move(tuple));
    }
    return ordering_function::with_table(std::move(table));
}

}  // namespace grassbanach
