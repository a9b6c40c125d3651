// Command-line front end: path construction, Jordan forms, certificate
// verification, seeded generation and the finite-field lab, all speaking the
// JSON interchange formats.
//
// Exit codes: 0 success, 1 verification failure, 2 unsupported spectrum in
// exact mode, 3 malformed input / precondition / resource errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "commgraph/generate.hpp"
#include "commgraph/json_io.hpp"
#include "commgraph/paths.hpp"

namespace {

using namespace commgraph;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUnsupportedSpectrum = 2;
constexpr int kExitBadInput = 3;

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

Matrix<double> to_float_matrix(const AnyMatrix& any) {
    if (std::holds_alternative<Matrix<double>>(any)) return std::get<Matrix<double>>(any);
    if (std::holds_alternative<Matrix<Rational>>(any)) {
        const auto& q = std::get<Matrix<Rational>>(any);
        Matrix<double> m(q.rows(), q.cols(), 0.0);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = q(i, j).to_double();
        return m;
    }
    throw input_error("float mode accepts domains R and Q only");
}

int cmd_path(const std::string& a_path, const std::string& b_path, const std::string& mode,
             const Tolerance& tol, const std::string& out_path) {
    AnyMatrix A = parse_matrix_json(read_json_file(a_path));
    AnyMatrix B = parse_matrix_json(read_json_file(b_path));

    if (mode == "float") {
        Matrix<double> a = to_float_matrix(A), b = to_float_matrix(B);
        PathCertificate<double> cert = connect(a, b, tol);
        FloatVerifyReport rep = verify(cert, tol);
        emit(certificate_to_json(cert, rep), out_path);
        std::cerr << "path: route " << cert.route << ", length " << cert.length()
                  << (rep.ok ? ", verified\n" : ", VERIFICATION FAILED: " + rep.diagnostic + "\n");
        return rep.ok ? kExitOk : kExitVerifyFailure;
    }

    if (A.index() != B.index()) throw input_error("path: endpoints live in different domains");
    if (std::holds_alternative<Matrix<Rational>>(A)) {
        PathCertificate<Rational> cert = connect(std::get<Matrix<Rational>>(A), std::get<Matrix<Rational>>(B));
        VerifyReport rep = verify(cert);
        emit(certificate_to_json(cert, rep), out_path);
        std::cerr << "path: route " << cert.route << ", length " << cert.length()
                  << (rep.ok ? ", verified\n" : ", VERIFICATION FAILED: " + rep.diagnostic + "\n");
        return rep.ok ? kExitOk : kExitVerifyFailure;
    }
    if (std::holds_alternative<Matrix<Fp>>(A)) {
        PathCertificate<Fp> cert = connect(std::get<Matrix<Fp>>(A), std::get<Matrix<Fp>>(B));
        VerifyReport rep = verify(cert);
        emit(certificate_to_json(cert, rep), out_path);
        std::cerr << "path: route " << cert.route << ", length " << cert.length()
                  << (rep.ok ? ", verified\n" : ", VERIFICATION FAILED: " + rep.diagnostic + "\n");
        return rep.ok ? kExitOk : kExitVerifyFailure;
    }
    throw input_error("path: exact mode accepts domains Q and Fp");
}

int cmd_jordan(const std::string& a_path, const std::string& out_path) {
    AnyMatrix A = parse_matrix_json(read_json_file(a_path));
    if (!std::holds_alternative<Matrix<Rational>>(A))
        throw input_error("jordan: the real Jordan form is computed over domain Q");
    RealJordanForm f = real_jordan_form(std::get<Matrix<Rational>>(A));
    emit(jordan_to_json(f), out_path);
    std::cerr << "jordan: " << f.blocks.size() << " block(s)\n";
    return kExitOk;
}

int cmd_gen(const std::string& blocks_path, std::uint64_t seed, int ops, const std::string& out_path) {
    Json spec = read_json_file(blocks_path);
    const Json& blocks_json = spec.is_array() ? spec : spec.at("blocks");
    std::vector<JordanBlock> blocks = parse_blocks_json(blocks_json);
    if (spec.is_object() && spec.contains("n")) {
        if (spec["n"].get<std::size_t>() != blocks_order(blocks))
            throw input_error("gen: declared n does not match the block sizes");
    }
    Matrix<Rational> A = generate_with_spectrum(blocks, seed, ops);
    Json out = matrix_to_json(A);
    out["seed"] = seed;  // logged for replay
    emit(out, out_path);
    std::cerr << "gen: order " << A.order() << ", seed " << seed << "\n";
    return kExitOk;
}

int cmd_graph(std::uint32_t n, std::uint32_t p, const std::string& oracle, std::uint32_t sample,
              std::uint64_t seed, unsigned threads, const std::string& out_path) {
    FiniteLab lab(n, p);
    Json out;
    out["n"] = n;
    out["p"] = p;
    bool all_passed = true;

    if (oracle == "sqzero") {
        OracleReport rep = lab.oracle_square_zero(threads);
        out["oracle"] = oracle_report_to_json(rep);
        all_passed = all_passed && rep.passed();
        std::cerr << "oracle square-zero: " << rep.matrices << " matrices, " << rep.pairs_checked
                  << " pairs, " << rep.violations << " violation(s), " << rep.elapsed_seconds << " s\n";
    } else if (oracle == "idem") {
        OracleReport rep = lab.oracle_idempotents(threads);
        out["oracle"] = oracle_report_to_json(rep);
        all_passed = all_passed && rep.passed();
        std::cerr << "oracle idempotents: " << rep.matrices << " matrices, " << rep.pairs_checked
                  << " pairs, " << rep.violations << " violation(s), " << rep.elapsed_seconds << " s\n";
    }
    if (sample > 0) {
        CrossCheckReport rep = lab.cross_check_constructions(sample, seed);
        out["cross_check"] = cross_check_report_to_json(rep);
        out["seed"] = seed;
        all_passed = all_passed && rep.passed();
        std::cerr << "cross-check: " << rep.used << " used, " << rep.skipped_no_eigenvalue
                  << " skipped (no eigenvalue), " << rep.violations << " violation(s)\n";
    }
    if (oracle == "none" && sample == 0) {
        GraphStats stats = lab.graph_stats(threads);
        out["stats"] = graph_stats_to_json(stats);
        std::cerr << "graph: " << stats.vertex_count << " vertices, " << stats.component_count
                  << " component(s), diameters [";
        for (std::size_t i = 0; i < stats.component_diameters.size(); ++i)
            std::cerr << (i ? " " : "") << stats.component_diameters[i];
        std::cerr << "], " << stats.elapsed_seconds << " s\n";
    }
    emit(out, out_path);
    return all_passed ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting-graph path construction and verification"};
    app.require_subcommand(1);

    std::string a_path, b_path, cert_path, blocks_path, out_path;
    std::string mode = "exact";
    std::string oracle = "none";
    Tolerance tol;
    std::uint64_t seed = 0;
    int ops = commgraph::kDefaultAssemblyOps;
    std::uint32_t n = 3, p = 2, sample = 0;
    unsigned threads = 0;

    auto* path_cmd = app.add_subcommand("path", "construct a verified path between two matrices");
    path_cmd->add_option("A", a_path, "matrix json for the first endpoint")->required();
    path_cmd->add_option("B", b_path, "matrix json for the second endpoint")->required();
    path_cmd->add_option("--mode", mode, "exact (default) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    path_cmd->add_option("--tol-abs", tol.abs_eps, "absolute tolerance (float mode)");
    path_cmd->add_option("--tol-rel", tol.rel_eps, "relative tolerance (float mode)");
    path_cmd->add_option("--out", out_path, "certificate output file (default stdout)");

    auto* jordan_cmd = app.add_subcommand("jordan", "real Jordan form with explicit transform");
    jordan_cmd->add_option("A", a_path, "matrix json over Q")->required();
    jordan_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a path certificate");
    verify_cmd->add_option("certificate", cert_path, "certificate json")->required();
    verify_cmd->add_option("--tol-abs", tol.abs_eps, "absolute tolerance (float certificates)");
    verify_cmd->add_option("--tol-rel", tol.rel_eps, "relative tolerance (float certificates)");

    auto* gen_cmd = app.add_subcommand("gen", "generate a matrix with a prescribed real Jordan form");
    gen_cmd->add_option("--blocks", blocks_path, "block spec json")->required();
    gen_cmd->add_option("--seed", seed, "assembly seed")->required();
    gen_cmd->add_option("--ops", ops, "number of elementary row operations (default 3n)");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* graph_cmd = app.add_subcommand("graph", "finite-field commuting graph lab");
    graph_cmd->add_option("--n", n, "matrix order")->required();
    graph_cmd->add_option("--p", p, "prime modulus")->required();
    graph_cmd->add_option("--oracle", oracle, "none | sqzero | idem")
        ->check(CLI::IsMember({"none", "sqzero", "idem"}));
    graph_cmd->add_option("--sample", sample, "cross-check sample count");
    graph_cmd->add_option("--seed", seed, "sampling seed");
    graph_cmd->add_option("--threads", threads, "worker threads (default: hardware)");
    graph_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        tol.validate();
        if (path_cmd->parsed()) return cmd_path(a_path, b_path, mode, tol, out_path);
        if (jordan_cmd->parsed()) return cmd_jordan(a_path, out_path);
        if (verify_cmd->parsed()) {
            AnyCertificate cert = parse_certificate_json(read_json_file(cert_path));
            if (std::holds_alternative<PathCertificate<double>>(cert)) {
                FloatVerifyReport rep = verify(std::get<PathCertificate<double>>(cert), tol);
                std::cerr << (rep.ok ? "verify: ok\n" : "verify: FAILED: " + rep.diagnostic + "\n");
                return rep.ok ? kExitOk : kExitVerifyFailure;
            }
            VerifyReport rep = std::visit(
                [](const auto& c) -> VerifyReport {
                    if constexpr (std::is_same_v<std::decay_t<decltype(c)>, PathCertificate<double>>)
                        return VerifyReport{};
                    else
                        return verify(c);
                },
                cert);
            std::cerr << (rep.ok ? "verify: ok\n" : "verify: FAILED: " + rep.diagnostic + "\n");
            return rep.ok ? kExitOk : kExitVerifyFailure;
        }
        if (gen_cmd->parsed()) return cmd_gen(blocks_path, seed, ops, out_path);
        if (graph_cmd->parsed()) return cmd_graph(n, p, oracle, sample, seed, threads, out_path);
    } catch (const unsupported_spectrum_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedSpectrum;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
