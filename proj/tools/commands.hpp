#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <signlab/signlab.hpp>

#include "reproduce.hpp"

#ifndef SIGNLAB_REFERENCE_DIR
#define SIGNLAB_REFERENCE_DIR "data/reference"
#endif

namespace signlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kCheckedFalse = 1, kUsageError = 2 };

/// Result of one command: text for stdout and the exit code.
struct Outcome {
    std::string text;
    int code = kOk;
};

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline SignedGraph load_signed(const std::string& path) { return signed_graph_from_json(parse_json_file(path), true); }

/// Builds the command tree and runs it. `argv[0]` is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-signing constructions and spectral verification for signed graphs", "signlab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string output_path;
    app.add_option("-o,--output", output_path, "Write output to this file and a .manifest.json beside it");

    RunManifest manifest;
    manifest.tool_version = kToolVersion;
    manifest.tolerances = {{"verdict", kVerdictTolerance}, {"jacobi_relative", kJacobiRelativeTolerance}};
    std::function<Outcome()> action;

    // conference
    int conf_q = 5;
    bool conf_raw = false;
    auto* conf = app.add_subcommand("conference", "Paley conference matrix of order q+1 (q prime, q = 1 mod 4)");
    conf->add_option("--q", conf_q, "Prime q = 1 (mod 4)")->required();
    auto* raw_flag = conf->add_flag("--raw", conf_raw, "Print the order-q Jacobsthal matrix instead");
    conf->add_flag("--normalized", "Print the normalized conference matrix (default)")->excludes(raw_flag);
    conf->callback([&] {
        manifest.parameters = {{"q", conf_q}, {"raw", conf_raw}};
        action = [&] {
            if (conf_raw) return Outcome{format_matrix(jacobsthal_matrix(conf_q))};
            return Outcome{format_matrix(normalize(paley_conference(conf_q)).matrix())};
        };
    });

    // sign-complete
    int sc_q = 5, sc_case = 1;
    std::string sc_format = "matrix";
    auto* sc = app.add_subcommand("sign-complete", "Signed K_{n+case} from the Paley conference matrix of order n = q+1");
    sc->add_option("--q", sc_q, "Prime q = 1 (mod 4)")->required();
    sc->add_option("--case", sc_case, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    sc->add_option("--format", sc_format, "matrix or json")->check(CLI::IsMember({"matrix", "json"}));
    sc->callback([&] {
        manifest.parameters = {{"q", sc_q}, {"case", sc_case}, {"format", sc_format}};
        action = [&] {
            const auto sg = sign_complete_from_conference(paley_conference(sc_q), parse_complete_case(sc_case));
            return Outcome{sc_format == "json" ? dump(to_json(sg)) : format_matrix(signed_adjacency(sg))};
        };
    });

    // lex-k2
    std::string lk2_graph, lk2_h1, lk2_h2;
    auto* lk2 = app.add_subcommand("lex-k2", "Signed G o K2-bar from a signed decomposition H1 + H2 of G");
    lk2->add_option("--graph", lk2_graph, "Base graph JSON")->required();
    lk2->add_option("--h1", lk2_h1, "Signed H1 JSON (constant C4 blocks)")->required();
    lk2->add_option("--h2", lk2_h2, "Signed H2 JSON (alternating C4 blocks)")->required();
    lk2->callback([&] {
        manifest.inputs = {lk2_graph, lk2_h1, lk2_h2};
        action = [&] {
            const auto g = graph_from_json(parse_json_file(lk2_graph));
            return Outcome{dump(to_json(lex_k2_signing(g, load_signed(lk2_h1), load_signed(lk2_h2))))};
        };
    });

    // lex-k4
    std::string lk4_sigma;
    auto* lk4 = app.add_subcommand("lex-k4", "Signed G o K4-bar from a signing of G");
    lk4->add_option("--sigma", lk4_sigma, "Signed graph JSON")->required();
    lk4->callback([&] {
        manifest.inputs = {lk4_sigma};
        action = [&] { return Outcome{dump(to_json(lex_k4_signing(load_signed(lk4_sigma))))}; };
    });

    // lift2
    std::string lift_sigma, lift_sigma_p;
    auto* lift = app.add_subcommand("lift2", "2-lift along --sigma, or the signed lift of (sigma, sigma')");
    lift->add_option("--sigma", lift_sigma, "Signed graph JSON")->required();
    lift->add_option("--sigma-prime", lift_sigma_p, "Second signing; lifts along sigma*sigma' and signs by sigma'");
    lift->callback([&] {
        manifest.inputs = {lift_sigma};
        if (!lift_sigma_p.empty()) manifest.inputs.push_back(lift_sigma_p);
        action = [&] {
            const auto sigma = load_signed(lift_sigma);
            if (lift_sigma_p.empty()) return Outcome{dump(to_json(two_lift(sigma)))};
            return Outcome{dump(to_json(two_lift_signed(sigma, load_signed(lift_sigma_p))))};
        };
    });

    // equiv
    std::string eq_a, eq_b;
    auto* eq = app.add_subcommand("equiv", "Switching equivalence D A D = A' of two signings");
    eq->add_option("--sigma", eq_a, "Signed graph JSON")->required();
    eq->add_option("--sigma-prime", eq_b, "Signed graph JSON")->required();
    eq->callback([&] {
        manifest.inputs = {eq_a, eq_b};
        action = [&] {
            const auto r = signing_equivalence(load_signed(eq_a), load_signed(eq_b));
            json j = {{"equivalent", r.equivalent()}};
            if (r.switching) j["switching"] = *r.switching;
            else j["witness_cycle"] = r.witness_cycle;
            return Outcome{dump(j), r.equivalent() ? kOk : kCheckedFalse};
        };
    });

    // verify
    std::string ver_graph, ver_signing, ver_mode = "regular";
    auto* ver = app.add_subcommand("verify", "Spectral radius of a signing against 2 sqrt(d-1)");
    ver->add_option("--graph", ver_graph, "Graph JSON; signed edges are used as the signing")->required();
    ver->add_option("--signing", ver_signing, "Signed graph JSON on the same graph");
    ver->add_option("--mode", ver_mode, "regular or maxdeg")->check(CLI::IsMember({"regular", "maxdeg"}));
    ver->callback([&] {
        manifest.inputs = {ver_graph};
        if (!ver_signing.empty()) manifest.inputs.push_back(ver_signing);
        manifest.parameters = {{"mode", ver_mode}};
        action = [&] {
            SignedGraph sg = load_signed(ver_graph);
            if (!ver_signing.empty()) {
                SignedGraph s = load_signed(ver_signing);
                if (!(s.graph() == sg.graph())) throw FormatError("signing is not on the given graph");
                sg = std::move(s);
            }
            const auto report = check_good_signing(sg, parse_bound_mode(ver_mode));
            return Outcome{dump(to_json(report)), report.verdict == Verdict::good ? kOk : kCheckedFalse};
        };
    });

    // spectrum
    std::string sp_matrix, sp_graph;
    auto* sp = app.add_subcommand("spectrum", "Eigenvalues of a symmetric matrix or a (signed) graph");
    auto* sp_m = sp->add_option("--matrix", sp_matrix, "Integer matrix text file");
    sp->add_option("--graph", sp_graph, "Graph JSON (signed or unsigned)")->excludes(sp_m);
    sp->callback([&] {
        manifest.inputs = {sp_matrix.empty() ? sp_graph : sp_matrix};
        action = [&] {
            if (sp_matrix.empty() && sp_graph.empty()) throw FormatError("one of --matrix or --graph is required");
            const IntMatrix a =
                sp_matrix.empty() ? signed_adjacency(load_signed(sp_graph)) : read_int_matrix_file(sp_matrix);
            const auto eig = eigenvalues_symmetric(a);
            return Outcome{dump({{"eigenvalues", eigenvalues_json(eig)}, {"rho", display_value(spectral_radius(eig))}})};
        };
    });

    // ramanujan
    std::string ram_graph;
    auto* ram = app.add_subcommand("ramanujan", "Nontrivial spectrum of a connected regular graph");
    ram->add_option("--graph", ram_graph, "Graph JSON")->required();
    ram->callback([&] {
        manifest.inputs = {ram_graph};
        action = [&] {
            const auto r = check_ramanujan(graph_from_json(parse_json_file(ram_graph)));
            return Outcome{dump(to_json(r)), r.ramanujan ? kOk : kCheckedFalse};
        };
    });

    // partition-check
    std::string pc_graph, pc_partition;
    auto* pc = app.add_subcommand("partition-check", "Equitability, quotient B and the identity A P = P B");
    pc->add_option("--graph", pc_graph, "Signed graph JSON")->required();
    pc->add_option("--partition", pc_partition, "Partition JSON")->required();
    pc->callback([&] {
        manifest.inputs = {pc_graph, pc_partition};
        action = [&] {
            const auto sg = load_signed(pc_graph);
            const auto p = partition_from_json(parse_json_file(pc_partition), sg.order());
            const auto eq = is_equitable(sg, p);
            json j = {{"equitable", eq.equitable}};
            if (!eq) {
                const auto& w = *eq.witness;
                j["witness"] = {{"cell_i", w.cell_i}, {"cell_j", w.cell_j}, {"u", w.u},
                                {"u_prime", w.u_prime}, {"d_u", w.degree_u}, {"d_u_prime", w.degree_u_prime}};
                return Outcome{dump(j), kCheckedFalse};
            }
            const auto q = quotient_matrix(sg, p);
            std::vector<std::vector<std::int64_t>> rows;
            for (std::size_t i = 0; i < q.b.rows(); ++i)
                rows.emplace_back(q.b.data().begin() + static_cast<std::ptrdiff_t>(i * q.b.cols()),
                                  q.b.data().begin() + static_cast<std::ptrdiff_t>((i + 1) * q.b.cols()));
            const bool identity = verify_quotient_identity(sg, p, q.b);
            j["quotient"] = rows;
            j["quotient_eigenvalues"] = eigenvalues_json(quotient_spectrum(q));
            j["identity_holds"] = identity;
            return Outcome{dump(j), identity ? kOk : kCheckedFalse};
        };
    });

    // search
    std::string se_graph, se_mode = "maxdeg";
    int se_max_free = kDefaultMaxFreeEdges;
    unsigned se_jobs = 1;
    bool se_first = false;
    auto* se = app.add_subcommand("search", "Exhaustive search over switching classes");
    se->add_option("--graph", se_graph, "Graph JSON")->required();
    se->add_option("--mode", se_mode, "regular or maxdeg")->check(CLI::IsMember({"regular", "maxdeg"}));
    se->add_option("--max-free-edges", se_max_free, "Refuse graphs with more free (non-tree) edges");
    se->add_option("--jobs", se_jobs, "Worker threads")->check(CLI::PositiveNumber);
    se->add_flag("--first-good", se_first, "Stop at the first class meeting the bound");
    se->callback([&] {
        manifest.inputs = {se_graph};
        manifest.parameters = {{"mode", se_mode}, {"max_free_edges", se_max_free}, {"first_good", se_first}};
        action = [&] {
            const auto g = graph_from_json(parse_json_file(se_graph));
            const auto mode = parse_bound_mode(se_mode);
            if (se_first) {
                const auto found = find_good_signing(g, mode, se_max_free);
                json j = {{"good_found", found.has_value()}};
                if (found) j["signing"] = to_json(*found);
                return Outcome{dump(j), found ? kOk : kCheckedFalse};
            }
            const auto r = min_rho(g, {mode, se_max_free, se_jobs});
            return Outcome{dump(to_json(r)), r.good_found ? kOk : kCheckedFalse};
        };
    });

    // reproduce
    std::string rep_id, rep_dir = SIGNLAB_REFERENCE_DIR;
    auto* rep = app.add_subcommand("reproduce", "Rebuild a worked example and diff it against the reference data");
    rep->add_option("id", rep_id, "Example id, or 'all'")->required();
    rep->add_option("--fixtures", rep_dir, "Reference matrix directory");
    rep->callback([&] {
        manifest.parameters = {{"id", rep_id}, {"fixtures", rep_dir}};
        action = [&] {
            std::ostringstream text;
            Reproducer r(rep_dir, text);
            if (rep_id == "all") {
                for (const auto& id : Reproducer::ids()) r.run(id);
            } else if (!r.run(rep_id)) {
                std::string known;
                for (const auto& id : Reproducer::ids()) known += " " + id;
                throw CLI::ValidationError("unknown example id '" + rep_id + "'; known:" + known + " all");
            }
            return Outcome{text.str(), r.failures() == 0 ? kOk : kCheckedFalse};
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        const Outcome outcome = action();
        if (output_path.empty()) {
            out << outcome.text;
        } else {
            std::ofstream f(output_path);
            if (!f) throw FormatError("cannot write " + output_path);
            f << outcome.text;
            manifest.command = app.get_subcommands().front()->get_name();
            manifest.output = output_path;
            std::ofstream(output_path + ".manifest.json") << dump(to_json(manifest));
        }
        return outcome.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace signlab::cli
