// torigid: validate, inspect, construct, present, and compare hyper
// characteristic pairs stored as JSON documents.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <thread>

#include "torigid/cohomology.hpp"
#include "torigid/errors.hpp"
#include "torigid/io.hpp"

namespace {

using namespace torigid;

// Results go to stdout, diagnostics to stderr. Exit codes: 0 success or a
// positive answer, 1 negative answer on valid input, 2 errors.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

int worker_cap() {
    // Accepted and clamped; the v1 engines run serially, which trivially
    // respects any cap.
    const char* env = std::getenv("TORIGID_THREADS");
    if (!env) return 1;
    const int requested = std::atoi(env);
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (requested < 1) return 1;
    return std::min(requested, std::max(hw, 1));
}

std::string subset_text_1based(const std::vector<int>& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) t += ",";
        t += std::to_string(s[i] + 1);
    }
    return t + "}";
}

std::string int_vec_text(const std::vector<Int>& v) {
    std::string t = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) t += ",";
        t += v[i].str();
    }
    return t + ")";
}

void emit(const Json& doc, bool as_json, std::ostream& os, const std::string& text) {
    if (as_json)
        os << doc.dump(2) << "\n";
    else
        os << text;
}

void write_or_print(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw TorigidError(ErrorCode::ParseError, "cannot write '" + out_path + "'");
    out << doc.dump(2) << "\n";
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json arr = Json::array();
    for (const auto& v : violations) {
        Json j;
        j["code"] = v.code;
        j["message"] = v.message;
        if (!v.vertex.empty()) j["vertex"] = v.vertex;
        if (!v.invariant_factors.empty()) {
            Json f = Json::array();
            for (const Int& x : v.invariant_factors) f.push_back(int_to_json(x));
            j["invariant_factors"] = std::move(f);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

// Text output uses 1-based facet indices (F1..Fm); the JSON output and the
// file formats stay 0-based.
std::string violations_to_text(const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        out += "violation [" + v.code + "]";
        if (!v.vertex.empty()) out += " at facets " + subset_text_1based(v.vertex);
        if (!v.invariant_factors.empty()) {
            out += ", invariant factors (";
            for (std::size_t i = 0; i < v.invariant_factors.size(); ++i) {
                if (i) out += ",";
                out += v.invariant_factors[i].str();
            }
            out += ")";
        }
        out += ": " + v.message + "\n";
    }
    return out;
}

LoadedPair load_pair_file(const std::string& path) { return pair_from_json(read_json_file(path)); }

// Loads a pair and insists it is valid (used by subcommands whose operations
// require validity). Returns kNegative on violations.
int load_valid_pair(const std::string& path, HyperCharPair& out) {
    LoadedPair loaded = load_pair_file(path);
    if (!loaded.ok()) {
        std::cerr << "input pair '" << path << "' is invalid:\n";
        std::cerr << violations_to_text(loaded.complex_violations);
        std::cerr << violations_to_text(loaded.pair_violations);
        return kNegative;
    }
    out = std::move(loaded.pair);
    return kOk;
}

int cmd_validate(const std::string& path, bool as_json) {
    const LoadedPair loaded = load_pair_file(path);
    std::vector<Violation> all = loaded.complex_violations;
    all.insert(all.end(), loaded.pair_violations.begin(), loaded.pair_violations.end());
    Json j;
    j["ok"] = all.empty();
    j["violations"] = violations_to_json(all);
    emit(j, as_json, std::cout,
         all.empty() ? "ok\n" : violations_to_text(all));
    return all.empty() ? kOk : kNegative;
}

int cmd_info(const std::string& path, bool as_json) {
    HyperCharPair p;
    if (int rc = load_valid_pair(path, p)) return rc;
    const Fingerprint fp = quick_invariants(p);
    const AbelianGroup pi1 = pi1_quotient_bound(p);
    const bool summand = is_direct_summand_image(p);

    Json j;
    if (!p.name.empty()) j["name"] = p.name;
    j["dim"] = p.dim();
    j["m"] = p.facet_count();
    j["torus_rank"] = p.torus_rank;
    j["k"] = p.k();
    j["rank"] = fp.rank;
    j["f_vector"] = fp.f_vec;
    j["direct_summand_image"] = summand;
    j["combinatorial_only"] = p.geometric_origin == nullptr;
    Json pi;
    pi["free_rank"] = pi1.free_rank;
    Json tor = Json::array();
    for (const Int& t : pi1.torsion) tor.push_back(int_to_json(t));
    pi["torsion"] = std::move(tor);
    j["pi1_quotient_bound"] = std::move(pi);
    Json fpj;
    fpj["dim"] = fp.dim;
    fpj["k"] = fp.k;
    fpj["rank"] = fp.rank;
    fpj["f_vector"] = fp.f_vec;
    Json mult = Json::array();
    for (const Int& d : fp.vertex_index_multiset) mult.push_back(int_to_json(d));
    fpj["vertex_index_multiset"] = std::move(mult);
    j["fingerprint"] = std::move(fpj);

    std::string text;
    text += "dim n        = " + std::to_string(p.dim()) + "\n";
    text += "facets m     = " + std::to_string(p.facet_count()) + "\n";
    text += "torus rank   = " + std::to_string(p.torus_rank) + " (k = " +
            std::to_string(p.k()) + ")\n";
    text += "rank(xi)     = " + std::to_string(fp.rank) + "\n";
    text += "f-vector     = (";
    for (std::size_t i = 0; i < fp.f_vec.size(); ++i)
        text += (i ? "," : "") + std::to_string(fp.f_vec[i]);
    text += ")\n";
    text += std::string("image        = ") +
            (summand ? "direct summand" : "not a direct summand") + "\n";
    text += "pi1 bound    = Z^" + std::to_string(pi1.free_rank);
    for (const Int& t : pi1.torsion) text += " x Z/" + t.str();
    text += pi1.trivial() ? " (trivial)\n" : "\n";
    text += std::string("origin       = ") +
            (p.geometric_origin ? "geometric" : "combinatorial-only") + "\n";
    text += "fingerprint  = vertex index multiset {";
    for (std::size_t i = 0; i < fp.vertex_index_multiset.size(); ++i)
        text += (i ? "," : "") + fp.vertex_index_multiset[i].str();
    text += "}\n";
    emit(j, as_json, std::cout, text);
    return kOk;
}

int cmd_sr(const std::string& path, int hilbert, bool as_json) {
    HyperCharPair p;
    if (int rc = load_valid_pair(path, p)) return rc;
    const SRPresentation sr = sr_presentation(p);

    Json j;
    j["generators"] = sr.generator_count;
    Json rel = Json::array();
    for (const auto& r : sr.relations) rel.push_back(r);
    j["relations"] = std::move(rel);
    Json rows = Json::array();
    for (std::size_t i = 0; i < sr.algebra_map_matrix.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < sr.algebra_map_matrix.cols; ++c)
            row.push_back(int_to_json(sr.algebra_map_matrix(i, c)));
        rows.push_back(std::move(row));
    }
    j["algebra_map"] = std::move(rows);
    j["torus_factor"] = sr.torus_factor;
    j["image_saturated"] = sr.image_saturated;

    std::string text;
    text += "generators: tau_1 .. tau_" + std::to_string(sr.generator_count) + " (degree 2)\n";
    text += "relations:\n";
    for (const auto& r : sr.relations) {
        text += "  ";
        for (int jdx : r) text += "tau_" + std::to_string(jdx + 1) + " ";
        text += "= 0\n";
    }
    text += "algebra map (row s = coefficients of pi*(e_s*)):\n";
    for (std::size_t i = 0; i < sr.algebra_map_matrix.rows; ++i) {
        text += "  " + int_vec_text(sr.algebra_map_matrix.row(i)) + "\n";
    }
    if (sr.torus_factor > 0)
        text += "presented for the split reduction; torus factor " +
                std::to_string(sr.torus_factor) + "\n";
    if (!sr.image_saturated) text += "warning: image is not saturated\n";

    if (hilbert >= 0) {
        const auto ranks = hilbert_coefficients(p, static_cast<std::size_t>(hilbert));
        j["hilbert"] = ranks;
        text += "graded ranks (degrees 0,2,...): ";
        for (std::size_t i = 0; i < ranks.size(); ++i)
            text += (i ? "," : "") + std::to_string(ranks[i]);
        text += "\n";
    }
    emit(j, as_json, std::cout, text);
    return kOk;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    switch (v.kind) {
        case VerdictKind::Equivalent: j["verdict"] = "equivalent"; break;
        case VerdictKind::Inequivalent: j["verdict"] = "inequivalent"; break;
        case VerdictKind::NotSupported: j["verdict"] = "not_supported"; break;
    }
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    if (v.kind == VerdictKind::Inequivalent) {
        j["reason"] = v.reason == InequivalenceReason::FingerprintMismatch
                          ? "fingerprint_mismatch"
                          : "search_exhausted";
        j["certified_by_rigidity"] = v.certified_by_rigidity;
    }
    j["stats"] = {{"isomorphisms", v.stats.isomorphisms},
                  {"sign_branches", v.stats.sign_branches}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

std::string certificate_text(const EquivalenceCertificate& cert) {
    std::string text = "phi (1-based): ";
    for (std::size_t j = 0; j < cert.phi.size(); ++j)
        text += (j ? " " : "") + std::to_string(j + 1) + "->" +
                std::to_string(cert.phi[j] + 1);
    text += "\neps: ";
    for (std::size_t j = 0; j < cert.eps.size(); ++j)
        text += (j ? "," : "") + std::string(cert.eps[j] > 0 ? "+1" : "-1");
    text += "\nA:\n";
    for (std::size_t i = 0; i < cert.a.rows; ++i)
        text += "  " + int_vec_text(cert.a.row(i)) + "\n";
    return text;
}

int cmd_equiv(const std::string& path1, const std::string& path2, const std::string& verify_path,
              const std::string& cert_out, bool as_json, long long branch_cap) {
    HyperCharPair p, q;
    {
        LoadedPair l1 = load_pair_file(path1), l2 = load_pair_file(path2);
        if (!l1.ok() || !l2.ok())
            throw TorigidError(ErrorCode::InvalidInput,
                               "equiv requires two valid pairs (run `torigid validate`)");
        p = std::move(l1.pair);
        q = std::move(l2.pair);
    }

    if (!verify_path.empty()) {
        const EquivalenceCertificate cert = certificate_from_json(read_json_file(verify_path));
        const bool ok = verify_certificate(p, q, cert);
        Json j;
        j["certificate_valid"] = ok;
        emit(j, as_json, std::cout,
             ok ? "certificate verifies\n" : "certificate REJECTED\n");
        return ok ? kOk : kNegative;
    }

    std::optional<std::size_t> cap;
    if (branch_cap >= 0) cap = static_cast<std::size_t>(branch_cap);
    const Verdict verdict = decide_weak_equivalence(p, q, cap);
    const Json j = verdict_to_json(verdict);

    std::string text;
    switch (verdict.kind) {
        case VerdictKind::Equivalent:
            text = "Equivalent\n" + certificate_text(*verdict.certificate);
            break;
        case VerdictKind::Inequivalent:
            text = "Inequivalent (" + verdict.note + ")\n";
            break;
        case VerdictKind::NotSupported:
            text = "NotSupported: " + verdict.note + "\n";
            break;
    }
    emit(j, as_json, std::cout, text);

    if (verdict.certificate && !cert_out.empty())
        write_or_print(certificate_to_json(*verdict.certificate), cert_out);
    if (verdict.kind == VerdictKind::NotSupported)
        throw TorigidError(ErrorCode::BudgetExceeded, verdict.note);
    return verdict.kind == VerdictKind::Equivalent ? kOk : kNegative;
}

// "--plane c1,...,cn;d"
void parse_plane(const std::string& text, RatVector& c, Rat& d) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw TorigidError(ErrorCode::ParseError, "--plane needs \"c1,...,cn;d\"");
    std::string coords = text.substr(0, semi);
    std::size_t pos = 0;
    while (pos <= coords.size()) {
        const auto comma = coords.find(',', pos);
        const std::string tok =
            coords.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        c.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    d = parse_rational(text.substr(semi + 1));
}

int cmd_cut(const std::string& path, const std::string& plane, const std::string& out_path,
            const std::string& name) {
    const LoadedGeometry geom = geometry_from_json(read_json_file(path));
    RatVector c;
    Rat d;
    parse_plane(plane, c, d);
    HyperCharPair cut = hyperplane_cut(geom.polytope, geom.xi, c, d);
    cut.name = !name.empty() ? name : (geom.name.empty() ? "" : geom.name + ".cut");
    write_or_print(pair_to_json(cut), out_path);
    return kOk;
}

int cmd_moment_angle(const std::string& path, const std::string& out_path) {
    const LoadedPair loaded = load_pair_file(path);
    if (!loaded.complex_violations.empty())
        throw TorigidError(ErrorCode::InvalidInput, "input combinatorics is invalid");
    HyperCharPair ma = moment_angle_pair(loaded.pair.combinatorics);
    ma.name = loaded.pair.name.empty() ? "" : loaded.pair.name + ".moment-angle";
    write_or_print(pair_to_json(ma), out_path);
    return kOk;
}

int cmd_contact(const std::string& path, const std::string& out_path) {
    const LatticePolytopeV cone = cone_from_json(read_json_file(path));
    HyperCharPair pair = good_contact_pair(cone);
    write_or_print(pair_to_json(pair), out_path);
    return kOk;
}

int cmd_split(const std::string& path, const std::string& out_path, bool as_json) {
    HyperCharPair p;
    if (int rc = load_valid_pair(path, p)) return rc;
    const SplitResult s = split(p);
    Json j;
    j["reduced"] = pair_to_json(s.reduced);
    j["torus_factor"] = s.torus_factor;
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.change_of_basis.rows; ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < s.change_of_basis.cols; ++c)
            row.push_back(int_to_json(s.change_of_basis(i, c)));
        rows.push_back(std::move(row));
    }
    j["change_of_basis"] = std::move(rows);
    Json tor = Json::array();
    for (const Int& t : s.residual_torsion) tor.push_back(int_to_json(t));
    j["residual_torsion"] = std::move(tor);

    if (!out_path.empty()) {
        write_or_print(j, out_path);
        return kOk;
    }
    std::string text = "torus factor: " + std::to_string(s.torus_factor) + "\n";
    text += "reduced pair:\n" + pair_to_json(s.reduced).dump(2) + "\n";
    emit(j, as_json, std::cout, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for hyper characteristic pairs of locally k-standard T-manifolds"};
    app.require_subcommand(1);
    (void)worker_cap();

    std::string output_mode = "text";
    app.add_option("--output", output_mode, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string file1, file2, plane, verify_path, cert_out, out_path, name;
    int hilbert = -1;
    long long branch_cap = -1;

    auto* validate = app.add_subcommand("validate", "check a PairDocument");
    validate->add_option("file", file1)->required();

    auto* info = app.add_subcommand("info", "invariants of a pair");
    info->add_option("file", file1)->required();

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner presentation");
    sr->add_option("file", file1)->required();
    sr->add_option("--hilbert", hilbert, "append graded ranks up to this degree");

    auto* equiv = app.add_subcommand("equiv", "decide weak equivalence of two pairs");
    equiv->add_option("file1", file1)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_option("--verify", verify_path, "recheck a stored certificate instead");
    equiv->add_option("--cert-out", cert_out, "write the certificate to this file");
    equiv->add_option("--branch-cap", branch_cap, "abort the search after this many branches");

    auto* cut = app.add_subcommand("cut", "hyperplane cut of a GeometryDocument");
    cut->add_option("file", file1)->required();
    cut->add_option("--plane", plane, "\"c1,...,cn;d\" meaning c.x = d")->required();
    cut->add_option("--out", out_path, "write the PairDocument here (default stdout)");
    cut->add_option("--name", name, "name for the produced pair");

    auto* ma = app.add_subcommand("moment-angle", "moment-angle pair over the input combinatorics");
    ma->add_option("file", file1)->required();
    ma->add_option("--out", out_path);

    auto* contact = app.add_subcommand("contact", "good-contact pair from a ConeDocument");
    contact->add_option("file", file1)->required();
    contact->add_option("--out", out_path);

    auto* split_cmd = app.add_subcommand("split", "factor off the free torus part");
    split_cmd->add_option("file", file1)->required();
    split_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
        const bool as_json = output_mode == "json";
        if (*validate) return cmd_validate(file1, as_json);
        if (*info) return cmd_info(file1, as_json);
        if (*sr) return cmd_sr(file1, hilbert, as_json);
        if (*equiv) return cmd_equiv(file1, file2, verify_path, cert_out, as_json, branch_cap);
        if (*cut) return cmd_cut(file1, plane, out_path, name);
        if (*ma) return cmd_moment_angle(file1, out_path);
        if (*contact) return cmd_contact(file1, out_path);
        if (*split_cmd) return cmd_split(file1, out_path, as_json);
        return kError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kError;
    } catch (const torigid::TorigidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return kError;
    }
}
