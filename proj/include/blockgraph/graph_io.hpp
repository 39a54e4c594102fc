#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/weighted_graph.hpp"

namespace blockgraph {

// Error raised for malformed graph files; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Text graph format:
//   n <vertex_count>
//   w <r_0> ... <r_{n-1}>      (optional; absent means all-zero weights)
//   e <u> <v>                  (one edge per line, 0-based ids)
// Lines starting with '#' are comments. Tokens are whitespace-separated.
inline WeightedGraph read_graph(std::istream& in) {
    int line_no = 0;
    std::optional<int> n;
    bool saw_weights = false;
    std::vector<Rational> weights;
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive))
            continue;
        if (directive[0] == '#')
            continue;
        if (directive == "n") {
            if (n)
                throw ParseError(line_no, "duplicate vertex-count line");
            int value;
            if (!(ls >> value) || value < 0)
                throw ParseError(line_no, "expected nonnegative vertex count");
            n = value;
        } else if (directive == "w") {
            if (!n)
                throw ParseError(line_no, "weights before vertex count");
            if (saw_weights)
                throw ParseError(line_no, "duplicate weights line");
            saw_weights = true;
            std::string token;
            while (ls >> token) {
                auto r = Rational::parse(token);
                if (!r)
                    throw ParseError(line_no, "bad rational '" + token + "'");
                weights.push_back(*r);
            }
            if (static_cast<int>(weights.size()) != *n)
                throw ParseError(line_no, "expected " + std::to_string(*n) + " weights");
        } else if (directive == "e") {
            if (!n)
                throw ParseError(line_no, "edge before vertex count");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError(line_no, "expected two vertex ids");
            if (u < 0 || u >= *n || v < 0 || v >= *n)
                throw ParseError(line_no, "edge endpoint out of range");
            if (u == v)
                throw ParseError(line_no, "self-loop");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
        std::string trailing;
        if (ls >> trailing && trailing[0] != '#')
            throw ParseError(line_no, "trailing tokens");
    }
    if (!n)
        throw ParseError(line_no, "missing vertex-count line");
    if (*n == 0)
        return WeightedGraph();
    if (weights.empty())
        weights.assign(*n, Rational());
    return WeightedGraph(*n, edges, std::move(weights));
}

inline WeightedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
    out << "n " << g.vertex_count() << "\n";
    bool any_weight = false;
    for (const auto& w : g.weights())
        if (!w.is_zero())
            any_weight = true;
    if (any_weight) {
        out << "w";
        for (const auto& w : g.weights())
            out << " " << w.str();
        out << "\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "e " << u << " " << v << "\n";
}

inline std::string format_graph(const WeightedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace blockgraph
