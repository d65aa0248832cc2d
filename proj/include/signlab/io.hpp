#pragma once

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "search.hpp"
#include "spectra.hpp"

namespace signlab {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Graph JSON: {"n": int, "edges": [[u, v], ...]} or, signed, [[u, v, s], ...].

namespace detail {

struct RawEdges {
    int n = 0;
    std::vector<std::tuple<int, int, int>> triples;
    bool has_signs = false;
};

inline RawEdges read_edges(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw FormatError("graph JSON needs an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw FormatError("\"n\" must be a non-negative integer");
    if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
    RawEdges raw;
    raw.n = j["n"].get<int>();
    bool any_signed = false, any_unsigned = false;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw FormatError("each edge must be [u, v] or [u, v, s], got " + e.dump());
        for (const auto& x : e)
            if (!x.is_number_integer()) throw FormatError("edge entries must be integers, got " + e.dump());
        int s = 1;
        if (e.size() == 3) {
            s = e[2].get<int>();
            if (s != 1 && s != -1) throw FormatError("edge sign must be -1 or 1, got " + e.dump());
            any_signed = true;
        } else {
            any_unsigned = true;
        }
        raw.triples.emplace_back(e[0].get<int>(), e[1].get<int>(), s);
    }
    if (any_signed && any_unsigned) throw FormatError("edges mix signed and unsigned entries");
    raw.has_signs = any_signed;
    return raw;
}

template <typename F>
auto rethrow_as_format_error(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace detail

/// Underlying graph; signs, if any, are ignored.
inline Graph graph_from_json(const json& j) {
    return detail::rethrow_as_format_error([&] {
        const auto raw = detail::read_edges(j);
        std::vector<Edge> edges;
        for (const auto& [u, v, s] : raw.triples) edges.emplace_back(u, v);
        return Graph(raw.n, std::move(edges));
    });
}

/// Signed graph. Unsigned edge lists are accepted only when
/// `unsigned_as_positive` is set, and then read as all +1.
inline SignedGraph signed_graph_from_json(const json& j, bool unsigned_as_positive = false) {
    return detail::rethrow_as_format_error([&] {
        const auto raw = detail::read_edges(j);
        if (!raw.has_signs && !raw.triples.empty() && !unsigned_as_positive)
            throw FormatError("expected signed edges [u, v, s]");
        return SignedGraph::from_triples(raw.n, raw.triples);
    });
}

inline json to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline json to_json(const SignedGraph& sg) {
    json edges = json::array();
    const auto& es = sg.graph().edges();
    for (std::size_t i = 0; i < es.size(); ++i) edges.push_back({es[i].u, es[i].v, sg.signs()[i]});
    return {{"n", sg.order()}, {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------
// Partition JSON: {"cells": [[v, ...], ...]}

inline Partition partition_from_json(const json& j, int n) {
    return detail::rethrow_as_format_error([&] {
        if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
            throw FormatError("partition JSON needs an object with a \"cells\" array");
        return Partition(n, j["cells"].get<std::vector<std::vector<int>>>());
    });
}

inline json to_json(const Partition& p) { return {{"cells", p.cells()}}; }

inline json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Matrix text: rows separated by newlines, entries by single spaces.

template <typename T>
std::string format_matrix(const Matrix<T>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

inline IntMatrix parse_int_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::int64_t> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            std::int64_t x = 0;
            try {
                x = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw FormatError("matrix entry '" + tok + "' is not an integer");
            row.push_back(x);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw FormatError("matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(m.cols()));
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline IntMatrix read_int_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_int_matrix(ss.str());
}

// ---------------------------------------------------------------------------
// Reports

/// Rounds to 12 significant digits; values below 1e-12 * scale print as 0.
inline double display_value(double x, double scale = 1.0) {
    if (std::abs(x) < 1e-12 * std::max(1.0, scale)) return 0.0;
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return std::stod(s.str());
}

inline json eigenvalues_json(const std::vector<double>& eig) {
    const double scale = spectral_radius(eig);
    json out = json::array();
    for (double x : eig) out.push_back(display_value(x, scale));
    return out;
}

inline json to_json(const SpectralReport& r) {
    return {{"eigenvalues", eigenvalues_json(r.eigenvalues)},
            {"rho", display_value(r.rho)},
            {"bound", display_value(r.bound)},
            {"degree", r.degree},
            {"mode", to_string(r.mode)},
            {"verdict", to_string(r.verdict)},
            {"tolerance", r.tolerance}};
}

inline json to_json(const RamanujanReport& r) {
    return {{"eigenvalues", eigenvalues_json(r.eigenvalues)},
            {"nontrivial", eigenvalues_json(r.nontrivial)},
            {"degree", r.degree},
            {"bipartite", r.bipartite},
            {"bound", display_value(r.bound)},
            {"ramanujan", r.ramanujan}};
}

inline json to_json(const SearchResult& r) {
    return {{"best_rho", display_value(r.best_rho)},
            {"best_class", r.best_class},
            {"classes_examined", r.classes_examined},
            {"good_found", r.good_found},
            {"bound_used", display_value(r.bound_used)},
            {"best_signing", to_json(r.best_signing)}};
}

/// Provenance record written next to command output.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    json parameters = json::object();
    std::string output;
    std::string tool_version;
    json tolerances = json::object();
};

inline json to_json(const RunManifest& m) {
    return {{"command", m.command},   {"inputs", m.inputs},
            {"parameters", m.parameters}, {"output", m.output},
            {"tool_version", m.tool_version}, {"tolerances", m.tolerances}};
}

}  // namespace signlab
