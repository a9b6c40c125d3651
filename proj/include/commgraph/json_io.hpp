#pragma once

// JSON interchange for matrices, Jordan forms, certificates and graph
// reports. Exact scalars travel as canonical strings; float entries as JSON
// numbers. Files are written atomically (temp then rename) so a failed run
// never leaves a partial output.

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "commgraph/certificate.hpp"
#include "commgraph/finite_lab.hpp"
#include "commgraph/float_mode.hpp"
#include "commgraph/jordan.hpp"
#include "commgraph/matrix.hpp"

namespace commgraph {

using Json = nlohmann::json;

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Gaussian>, Matrix<Fp>, Matrix<double>>;

template <class K>
Json matrix_to_json(const Matrix<K>& m) {
    Json j;
    j["domain"] = scalar_traits<K>::domain_name;
    if constexpr (std::is_same_v<K, Fp>) j["modulus"] = m.exemplar().modulus();
    j["n"] = m.order();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jx = 0; jx < m.cols(); ++jx) {
            if constexpr (std::is_same_v<K, double>)
                row.push_back(m(i, jx));
            else
                row.push_back(scalar_traits<K>::to_string(m(i, jx)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

namespace detail_json {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error("matrix json: " + msg);
}

template <class K>
Matrix<K> parse_entries(const Json& j, const K& like) {
    const std::size_t n = j.at("n").get<std::size_t>();
    require(n >= 1, "order must be >= 1");
    const Json& rows = j.at("entries");
    require(rows.is_array() && rows.size() == n, "entries shape mismatch");
    Matrix<K> m(n, n, scalar_traits<K>::zero(like));
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = rows[i];
        require(row.is_array() && row.size() == n, "entries shape mismatch");
        for (std::size_t c = 0; c < n; ++c) {
            if constexpr (std::is_same_v<K, double>) {
                require(row[c].is_number(), "float entry must be a number");
                const double v = row[c].get<double>();
                require(std::isfinite(v), "float entry must be finite");
                m(i, c) = v;
            } else {
                require(row[c].is_string(), "exact entry must be a string");
                m(i, c) = scalar_traits<K>::parse(row[c].get<std::string>(), like);
            }
        }
    }
    return m;
}

} // namespace detail_json

inline AnyMatrix parse_matrix_json(const Json& j) {
    using detail_json::parse_entries;
    const std::string domain = j.at("domain").get<std::string>();
    if (domain == "Q") return parse_entries<Rational>(j, Rational(0));
    if (domain == "Qi") return parse_entries<Gaussian>(j, Gaussian(0));
    if (domain == "Fp") {
        const std::uint32_t p = j.at("modulus").get<std::uint32_t>();
        check_prime_modulus(p);
        return parse_entries<Fp>(j, Fp(0, p));
    }
    if (domain == "R") return parse_entries<double>(j, 0.0);
    throw input_error("matrix json: unknown domain '" + domain + "'");
}

inline Json jordan_to_json(const RealJordanForm& f) {
    Json j;
    j["S"] = matrix_to_json(f.transform);
    Json blocks = Json::array();
    for (const auto& blk : f.blocks) {
        Json b;
        if (blk.complex) {
            b["type"] = "complex";
            b["a"] = blk.a.to_string();
            b["b"] = blk.b.to_string();
            b["k"] = blk.size;
        } else {
            b["type"] = "real";
            b["lambda"] = blk.a.to_string();
            b["m"] = blk.size;
        }
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline std::vector<JordanBlock> parse_blocks_json(const Json& j) {
    if (!j.is_array()) throw input_error("blocks json: expected an array");
    std::vector<JordanBlock> out;
    for (const auto& b : j) {
        const std::string type = b.at("type").get<std::string>();
        if (type == "complex") {
            out.push_back(JordanBlock::complex_block(Rational::parse(b.at("a").get<std::string>()),
                                                     Rational::parse(b.at("b").get<std::string>()),
                                                     b.at("k").get<unsigned>()));
        } else if (type == "real") {
            out.push_back(JordanBlock::real_block(Rational::parse(b.at("lambda").get<std::string>()),
                                                  b.at("m").get<unsigned>()));
        } else {
            throw input_error("blocks json: unknown block type '" + type + "'");
        }
    }
    validate_blocks(out);
    return out;
}

template <class K>
Json certificate_to_json(const PathCertificate<K>& cert, const VerifyReport& rep) {
    Json j;
    j["n"] = cert.order();
    j["mode"] = "exact";
    j["route"] = cert.route;
    Json vs = Json::array();
    for (const auto& v : cert.vertices) vs.push_back(matrix_to_json(v));
    j["vertices"] = std::move(vs);
    j["edge_residuals"] = rep.edge_residuals;
    j["verified"] = rep.ok;
    return j;
}

inline Json certificate_to_json(const PathCertificate<double>& cert, const FloatVerifyReport& rep) {
    Json j;
    j["n"] = cert.order();
    j["mode"] = "float";
    j["route"] = cert.route;
    Json vs = Json::array();
    for (const auto& v : cert.vertices) vs.push_back(matrix_to_json(v));
    j["vertices"] = std::move(vs);
    j["edge_residuals"] = rep.edge_residuals;
    j["verified"] = rep.ok;
    return j;
}

using AnyCertificate =
    std::variant<PathCertificate<Rational>, PathCertificate<Gaussian>, PathCertificate<Fp>, PathCertificate<double>>;

inline AnyCertificate parse_certificate_json(const Json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    const Json& vs = j.at("vertices");
    if (!vs.is_array() || vs.empty()) throw input_error("certificate json: vertices must be a non-empty array");
    const std::string route = j.value("route", "");

    auto build = [&](auto tag) -> AnyCertificate {
        using K = decltype(tag);
        PathCertificate<K> cert;
        cert.route = route;
        for (const auto& vj : vs) {
            AnyMatrix m = parse_matrix_json(vj);
            if (!std::holds_alternative<Matrix<K>>(m))
                throw input_error("certificate json: vertices mix scalar domains");
            cert.vertices.push_back(std::get<Matrix<K>>(m));
        }
        return cert;
    };

    const std::string domain = vs[0].at("domain").get<std::string>();
    if (mode == "float") {
        if (domain != "R") throw input_error("certificate json: float mode requires domain R");
        return build(double{});
    }
    if (mode != "exact") throw input_error("certificate json: unknown mode '" + mode + "'");
    if (domain == "Q") return build(Rational{});
    if (domain == "Qi") return build(Gaussian{});
    if (domain == "Fp") return build(Fp{});
    throw input_error("certificate json: exact mode cannot hold domain '" + domain + "'");
}

inline Json graph_stats_to_json(const GraphStats& s) {
    Json j;
    j["n"] = s.n;
    j["p"] = s.p;
    j["vertices"] = s.vertex_count;
    j["component_count"] = s.component_count;
    j["component_sizes"] = s.component_sizes;
    j["component_diameters"] = s.component_diameters;
    Json hist = Json::object();
    for (const auto& [ecc, count] : s.eccentricity_histogram) hist[std::to_string(ecc)] = count;
    j["eccentricity_histogram"] = std::move(hist);
    j["elapsed_seconds"] = s.elapsed_seconds;
    return j;
}

inline Json oracle_report_to_json(const OracleReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["matrices"] = r.matrices;
    j["pairs_checked"] = r.pairs_checked;
    j["violations"] = r.violations;
    j["passed"] = r.passed();
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline Json cross_check_report_to_json(const CrossCheckReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["requested"] = r.requested;
    j["used"] = r.used;
    j["skipped_no_eigenvalue"] = r.skipped_no_eigenvalue;
    Json hist = Json::object();
    for (const auto& [slack, count] : r.slack_histogram) hist[std::to_string(slack)] = count;
    j["slack_histogram"] = std::move(hist);
    j["violations"] = r.violations;
    j["passed"] = r.passed();
    return j;
}

// temp-and-rename: no partial writes on failure.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.flush()) throw input_error("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, target);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw input_error("malformed json in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace commgraph
