#include "torigid/io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>

#include "torigid/errors.hpp"

namespace torigid {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

void require(bool condition, const std::string& message) {
    if (!condition) throw TorigidError(ErrorCode::ParseError, message);
}

void check_version(const Json& doc, const char* what) {
    require(doc.is_object(), std::string(what) + ": document must be a JSON object");
    require(doc.contains("format_version") && doc["format_version"].is_string() &&
                doc["format_version"] == "1",
            std::string(what) + ": format_version must be \"1\"");
}

std::size_t count_field(const Json& doc, const char* key) {
    require(doc.contains(key) && doc[key].is_number_integer() &&
                doc[key].get<long long>() >= 0,
            std::string(key) + " must be a nonnegative integer");
    return doc[key].get<std::size_t>();
}

std::vector<Int> int_vector_from_json(const Json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array");
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_json(x));
    return j;
}

Json int_matrix_to_json(const IntMatrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) j.push_back(int_vector_to_json(m.row(i)));
    return j;
}

IntMatrix int_matrix_from_json(const Json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) rows.push_back(int_vector_from_json(r, what));
    return IntMatrix::from_rows(rows);
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v <= kSafeMax && v >= -kSafeMax) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw TorigidError(ErrorCode::ParseError, "bad integer string '" +
                                                          j.get<std::string>() + "'");
        }
    }
    throw TorigidError(ErrorCode::ParseError,
                       "expected an integer (number or decimal string), got " + j.dump());
}

Json rat_to_json(const Rat& v) { return Json(format_rational(v)); }

Rat rat_from_json(const Json& j) {
    require(j.is_string(), "rationals must be strings \"p\" or \"p/q\", got " + j.dump());
    return parse_rational(j.get<std::string>());
}

LoadedPair pair_from_json(const Json& doc) {
    check_version(doc, "PairDocument");
    LoadedPair out;
    HyperCharPair& p = out.pair;
    if (doc.contains("name")) {
        require(doc["name"].is_string(), "name must be a string");
        p.name = doc["name"].get<std::string>();
    }
    const std::size_t n = count_field(doc, "dim");
    const std::size_t rank = count_field(doc, "torus_rank");
    require(n >= 1, "dim must be >= 1");
    require(rank >= n, "torus_rank must be >= dim");
    p.combinatorics.dim = n;
    p.torus_rank = rank;

    require(doc.contains("facets") && doc["facets"].is_array(), "facets must be an array");
    std::vector<std::vector<Int>> columns;
    for (const auto& f : doc["facets"]) {
        require(f.is_object() && f.contains("xi"), "each facet needs an xi vector");
        std::string label;
        if (f.contains("label")) {
            require(f["label"].is_string(), "facet label must be a string");
            label = f["label"].get<std::string>();
        }
        auto col = int_vector_from_json(f["xi"], "facet xi");
        require(col.size() == rank, "facet xi length must equal torus_rank");
        p.combinatorics.facet_labels.push_back(label);
        columns.push_back(std::move(col));
    }
    const std::size_t m = columns.size();
    p.combinatorics.facet_count = m;
    p.xi = IntMatrix::from_columns(columns, rank);

    require(doc.contains("vertices") && doc["vertices"].is_array(), "vertices must be an array");
    for (const auto& v : doc["vertices"]) {
        require(v.is_array(), "each vertex must be an array of facet indices");
        std::vector<int> subset;
        for (const auto& e : v) {
            require(e.is_number_integer(), "facet indices must be integers");
            const long long idx = e.get<long long>();
            require(idx >= 0 && idx < static_cast<long long>(m),
                    "facet index " + std::to_string(idx) + " out of range");
            subset.push_back(static_cast<int>(idx));
        }
        std::sort(subset.begin(), subset.end());
        p.combinatorics.vertices.push_back(std::move(subset));
    }

    out.complex_violations = validate_complex(p.combinatorics);
    out.pair_violations = validate_pair(p);
    return out;
}

Json pair_to_json(const HyperCharPair& pair) {
    Json doc;
    doc["format_version"] = "1";
    if (!pair.name.empty()) doc["name"] = pair.name;
    doc["dim"] = pair.dim();
    doc["torus_rank"] = pair.torus_rank;
    Json facets = Json::array();
    for (std::size_t j = 0; j < pair.facet_count(); ++j) {
        Json f;
        f["label"] = pair.combinatorics.label(j);
        f["xi"] = int_vector_to_json(pair.xi.column(j));
        facets.push_back(std::move(f));
    }
    doc["facets"] = std::move(facets);
    Json vertices = Json::array();
    for (const auto& v : pair.combinatorics.vertices) vertices.push_back(v);
    doc["vertices"] = std::move(vertices);
    return doc;
}

LoadedGeometry geometry_from_json(const Json& doc) {
    check_version(doc, "GeometryDocument");
    LoadedGeometry out;
    if (doc.contains("name")) {
        require(doc["name"].is_string(), "name must be a string");
        out.name = doc["name"].get<std::string>();
    }
    const std::size_t n = count_field(doc, "dim");
    require(n >= 1, "dim must be >= 1");
    out.polytope.dim = n;

    require(doc.contains("inequalities") && doc["inequalities"].is_array(),
            "inequalities must be an array");
    std::vector<std::vector<Int>> columns;
    std::size_t rank = 0;
    for (const auto& ineq : doc["inequalities"]) {
        require(ineq.is_object() && ineq.contains("a") && ineq.contains("b") &&
                    ineq.contains("xi"),
                "each inequality needs a, b, xi");
        Inequality h;
        require(ineq["a"].is_array() && ineq["a"].size() == n,
                "inequality normal must have dim entries");
        for (const auto& e : ineq["a"]) h.normal.push_back(rat_from_json(e));
        h.bound = rat_from_json(ineq["b"]);
        if (ineq.contains("label")) {
            require(ineq["label"].is_string(), "inequality label must be a string");
            h.label = ineq["label"].get<std::string>();
        }
        auto col = int_vector_from_json(ineq["xi"], "inequality xi");
        if (columns.empty()) {
            rank = col.size();
            require(rank >= n, "xi length must be >= dim");
        } else {
            require(col.size() == rank, "all xi vectors must have equal length");
        }
        columns.push_back(std::move(col));
        out.polytope.inequalities.push_back(std::move(h));
    }
    require(!columns.empty(), "at least one inequality is required");
    out.xi = IntMatrix::from_columns(columns, rank);
    return out;
}

LatticePolytopeV cone_from_json(const Json& doc) {
    check_version(doc, "ConeDocument");
    LatticePolytopeV out;
    out.ambient_dim = count_field(doc, "ambient_dim");
    require(doc.contains("vertices") && doc["vertices"].is_array(), "vertices must be an array");
    for (const auto& v : doc["vertices"]) {
        auto vec = int_vector_from_json(v, "vertex");
        require(vec.size() == out.ambient_dim, "vertex length must equal ambient_dim");
        out.vertices.push_back(std::move(vec));
    }
    require(doc.contains("facets") && doc["facets"].is_array(), "facets must be an array");
    for (const auto& f : doc["facets"]) {
        require(f.is_array(), "each facet must be an array of vertex indices");
        std::vector<int> subset;
        for (const auto& e : f) {
            require(e.is_number_integer(), "vertex indices must be integers");
            const long long idx = e.get<long long>();
            require(idx >= 0 && idx < static_cast<long long>(out.vertices.size()),
                    "vertex index " + std::to_string(idx) + " out of range");
            subset.push_back(static_cast<int>(idx));
        }
        out.facets.push_back(std::move(subset));
    }
    if (doc.contains("facet_labels")) {
        require(doc["facet_labels"].is_array(), "facet_labels must be an array");
        for (const auto& l : doc["facet_labels"]) {
            require(l.is_string(), "facet labels must be strings");
            out.facet_labels.push_back(l.get<std::string>());
        }
        require(out.facet_labels.size() == out.facets.size(),
                "facet_labels length must match facets");
    }
    return out;
}

Json certificate_to_json(const EquivalenceCertificate& cert) {
    Json doc;
    doc["format_version"] = "1";
    doc["phi"] = cert.phi;
    doc["eps"] = cert.eps;
    doc["A"] = int_matrix_to_json(cert.a);
    if (cert.split_data) {
        Json s;
        s["source_change"] = int_matrix_to_json(cert.split_data->source_change);
        s["target_change"] = int_matrix_to_json(cert.split_data->target_change);
        s["torus_factor"] = cert.split_data->torus_factor;
        doc["split"] = std::move(s);
    }
    return doc;
}

EquivalenceCertificate certificate_from_json(const Json& doc) {
    check_version(doc, "CertificateDocument");
    EquivalenceCertificate cert;
    require(doc.contains("phi") && doc["phi"].is_array(), "phi must be an array");
    require(doc.contains("eps") && doc["eps"].is_array(), "eps must be an array");
    require(doc.contains("A"), "A must be present");
    for (const auto& e : doc["phi"]) {
        require(e.is_number_integer(), "phi entries must be integers");
        cert.phi.push_back(e.get<int>());
    }
    for (const auto& e : doc["eps"]) {
        require(e.is_number_integer(), "eps entries must be integers");
        cert.eps.push_back(e.get<int>());
    }
    cert.a = int_matrix_from_json(doc["A"], "A");
    return cert;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TorigidError(ErrorCode::ParseError, "cannot open file '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw TorigidError(ErrorCode::ParseError,
                           "invalid JSON in '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace torigid
