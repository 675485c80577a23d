#include "infrank/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "infrank/errors.hpp"

namespace infrank {

namespace {

constexpr std::string_view kWhitespace = " \t\r\v\f";

std::string_view next_token(std::string_view& rest) {
    const auto start = rest.find_first_not_of(kWhitespace);
    if (start == std::string_view::npos) {
        rest = {};
        return {};
    }
    rest.remove_prefix(start);
    const auto end = rest.find_first_of(kWhitespace);
    std::string_view token = rest.substr(0, end);
    rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
    return token;
}

OriginalId parse_endpoint(std::string_view token, std::size_t line, const char* which) {
    if (token.empty()) throw ParseError(std::string("missing ") + which + " endpoint", line);
    OriginalId value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(std::string("non-integer ") + which + " endpoint '" + std::string(token) + "'",
                         line);
    }
    return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, LoadOptions options) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest = line;
        const auto first = rest.find_first_not_of(kWhitespace);
        if (first == std::string_view::npos || rest[first] == '#') continue;

        Edge e;
        e.source = parse_endpoint(next_token(rest), line_no, "source");
        e.target = parse_endpoint(next_token(rest), line_no, "target");
        if (options.weighted) {
            const std::string_view token = next_token(rest);
            if (!token.empty()) {
                const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), e.weight);
                if (ec != std::errc{} || ptr != token.data() + token.size()) {
                    throw ParseError("non-numeric weight '" + std::string(token) + "'", line_no);
                }
                if (e.weight < 0.0) {
                    throw ValidationError("line " + std::to_string(line_no) + ": negative weight " +
                                          std::string(token));
                }
            }
        }
        edges.push_back(e);
    }
    if (in.bad()) throw DataError("read failure after line " + std::to_string(line_no));
    return Graph::from_edges(edges, options);
}

Graph load_edge_list_file(const std::filesystem::path& path, LoadOptions options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file '" + path.string() + "'");
    try {
        return load_edge_list(in, options);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# " << (g.directed() ? "directed" : "undirected") << " nodes: " << g.node_count()
        << " edges: " << g.edge_count() << '\n';
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) {
            // Keeps the node alive on reload.
            out << g.original_id(i) << '\t' << g.original_id(i) << '\n';
            continue;
        }
        const auto targets = g.out_neighbors(i);
        const auto weights = g.out_weights(i);
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (!g.directed() && targets[k] < i) continue;
            out << g.original_id(i) << '\t' << g.original_id(targets[k]);
            if (g.weighted()) {
                char buf[32];
                const auto res = std::to_chars(buf, buf + sizeof buf, weights[k]);
                out << '\t' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
            }
            out << '\n';
        }
    }
}

}  // namespace infrank
