#ifndef MCS_JSON_IO_HPP
#define MCS_JSON_IO_HPP

#include "mcs/certificate.hpp"
#include "mcs/numeric.hpp"
#include "mcs/simplicial_complex.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace mcs {

using nlohmann::json;

// Counts that fit in 64 bits are emitted as JSON numbers, anything larger as
// a decimal string.
inline json bigint_to_json(const BigInt& x)
{
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi)
        return json(static_cast<long long>(x));
    return json(x.str());
}

inline json bigvec_to_json(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(bigint_to_json(x));
    return a;
}

inline BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw Error("expected an integer or a decimal string");
}

inline std::string label_from_json(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw Error("vertex labels must be strings or integers");
}

inline json label_to_json(const std::string& label)
{
    // labels that round-trip as integers are emitted as integers
    if (!label.empty() && (std::isdigit(static_cast<unsigned char>(label[0])) || label[0] == '-')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(label, &used);
            if (used == label.size() && std::to_string(v) == label)
                return json(v);
        } catch (...) {
        }
    }
    return json(label);
}

inline SimplicialComplex complex_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw Error("complex JSON must be an object with a \"facets\" array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw Error("each facet must be an array of labels");
        std::vector<std::string> facet;
        for (const auto& lab : f)
            facet.push_back(label_from_json(lab));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open complex file: " + path);
    json j;
    in >> j;
    return complex_from_json(j);
}

inline json complex_to_json(const SimplicialComplex& sc)
{
    json j;
    json verts = json::array();
    for (const auto& lab : sc.vertex_labels())
        verts.push_back(label_to_json(lab));
    j["vertices"] = std::move(verts);
    json facets = json::array();
    for (const auto& f : sc.facets()) {
        json facet = json::array();
        for (int v : f)
            facet.push_back(label_to_json(sc.vertex_labels()[static_cast<std::size_t>(v)]));
        facets.push_back(std::move(facet));
    }
    j["facets"] = std::move(facets);
    j["f_vector"] = bigvec_to_json(sc.f_vector());
    j["h_vector"] = bigvec_to_json(f_to_h(sc.f_vector()));
    return j;
}

inline json certificate_to_json(const VerificationCertificate& cert)
{
    json j;
    j["suite"] = cert.suite;
    j["params"] = json::object();
    for (const auto& [k, v] : cert.params)
        j["params"][k] = v;
    j["pass"] = cert.pass;
    j["witness"] = cert.witness;
    j["duration_ms"] = cert.duration_ms;
    return j;
}

}  // namespace mcs

#endif
