#pragma once

// JSON encodings of barcodes, induced matrices, block functions and reports.
//
// Deaths at infinity are written as the string "inf". Doubles use the
// shortest representation that round-trips.

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topoquality/block_function.hpp"
#include "topoquality/induced.hpp"
#include "topoquality/quality.hpp"

namespace topoquality::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Interval& iv) {
    Json j;
    j["birth"] = iv.birth;
    if (iv.death)
        j["death"] = *iv.death;
    else
        j["death"] = "inf";
    return j;
}

inline Interval interval_from_json(const Json& j) {
    Interval iv;
    iv.birth = j.at("birth").get<double>();
    const auto& d = j.at("death");
    if (d.is_string()) {
        if (d.get<std::string>() != "inf") throw InvalidArgument("death must be a number or \"inf\"");
    } else {
        iv.death = d.get<double>();
    }
    validate(iv);
    return iv;
}

inline Json to_json(const Barcode& b) {
    Json j;
    j["degree"] = b.dimension();
    j["intervals"] = Json::array();
    for (const auto& iv : b) j["intervals"].push_back(to_json(iv));
    return j;
}

inline std::vector<Interval> intervals_from_json(const Json& arr) {
    std::vector<Interval> out;
    for (const auto& e : arr) out.push_back(interval_from_json(e));
    return out;
}

inline Barcode barcode_from_json(const Json& j) {
    return Barcode(j.at("degree").get<std::size_t>(), intervals_from_json(j.at("intervals")));
}

/// {"degree", "domain", "codomain", "matrix"}; the matrix is dense and
/// row-major, with rows and columns in the order the bars are listed.
inline InducedMatrix induced_from_json(const Json& j) {
    const auto domain = intervals_from_json(j.at("domain"));
    const auto codomain = intervals_from_json(j.at("codomain"));
    const auto rows = j.at("matrix").get<std::vector<std::vector<int>>>();
    return InducedMatrix::from_unsorted(j.value("degree", std::size_t{0}), domain, codomain, rows);
}

inline Json to_json(const InducedMatrix& ind) {
    Json j;
    j["degree"] = ind.degree();
    j["domain"] = to_json(ind.domain())["intervals"];
    j["codomain"] = to_json(ind.codomain())["intervals"];
    j["matrix"] = ind.matrix().to_dense_rows();
    return j;
}

inline Json to_json(const BlockFunction& bf) {
    Json j;
    j["degree"] = bf.degree;
    j["tq"] = topological_quality(bf);
    j["domain"] = to_json(bf.domain)["intervals"];
    j["codomain"] = to_json(bf.codomain)["intervals"];
    j["assignments"] = Json::array();
    for (std::size_t i = 0; i < bf.assignment.size(); ++i) {
        Json a;
        a["domain_index"] = i;
        a["interval"] = to_json(bf.domain[i]);
        if (bf.assignment[i]) {
            a["codomain_index"] = *bf.assignment[i];
            a["target"] = to_json(bf.codomain[*bf.assignment[i]]);
        } else {
            a["codomain_index"] = nullptr;
            a["target"] = nullptr;
        }
        j["assignments"].push_back(std::move(a));
    }
    return j;
}

inline Json to_json(const QualityReport& r) {
    auto degree_map = [](const std::map<std::size_t, std::size_t>& m) {
        Json j = Json::object();
        for (const auto& [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };

    Json j;
    j["metadata"] = {{"subset_size", r.subset_size}, {"dataset_size", r.dataset_size},
                     {"r_max", nullptr},             {"max_dim", r.max_dim},
                     {"degrees", r.degrees}};
    if (std::isfinite(r.r_max))
        j["metadata"]["r_max"] = r.r_max;
    else
        j["metadata"]["r_max"] = "inf";
    j["per_degree"] = degree_map(r.per_degree);
    if (r.per_class) {
        j["per_class"] = Json::object();
        for (const auto& [label, m] : *r.per_class) j["per_class"][label] = degree_map(m);
    } else {
        j["per_class"] = nullptr;
    }
    j["sections"] = Json::array();
    for (const auto& s : r.sections) {
        Json sj;
        sj["label"] = s.label;
        sj["subset_size"] = s.subset_size;
        sj["dataset_size"] = s.dataset_size;
        sj["degrees"] = Json::array();
        for (const auto& [k, dq] : s.degrees) {
            Json dj;
            dj["degree"] = k;
            dj["tq"] = dq.tq;
            dj["domain"] = to_json(dq.block_function.domain)["intervals"];
            dj["codomain"] = to_json(dq.block_function.codomain)["intervals"];
            dj["matched_pairs"] = Json::array();
            for (const auto& [a, b] : dq.matched)
                dj["matched_pairs"].push_back({{"domain_index", a}, {"codomain_index", b}});
            sj["degrees"].push_back(std::move(dj));
        }
        j["sections"].push_back(std::move(sj));
    }
    j["warnings"] = r.warnings;
    return j;
}

}  // namespace topoquality::io
