#include <loopcut/io.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace loopcut {

parse_error::parse_error(const std::string& message, std::size_t line)
    : std::runtime_error(message), line_(line) {}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_weight(Weight w) {
    return w.is_infinite() ? "inf" : format_double(w.finite_value());
}

namespace {

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : line) {
        if (ch == '#') {
            break;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

VertexId parse_vertex_id(const std::string& token, std::size_t line) {
    try {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(token, &pos);
        if (pos != token.size() || value > std::numeric_limits<VertexId>::max()) {
            throw std::invalid_argument(token);
        }
        return static_cast<VertexId>(value);
    } catch (const std::exception&) {
        throw parse_error("invalid vertex id: " + token, line);
    }
}

long long parse_integer(const std::string& token, std::size_t line, const char* what) {
    try {
        std::size_t pos = 0;
        const long long value = std::stoll(token, &pos);
        if (pos != token.size()) {
            throw std::invalid_argument(token);
        }
        return value;
    } catch (const std::exception&) {
        throw parse_error(std::string("invalid ") + what + ": " + token, line);
    }
}

Weight parse_weight(const std::string& token, std::size_t line) {
    if (token == "inf") {
        return Weight::infinite();
    }
    double value = 0.0;
    try {
        std::size_t pos = 0;
        value = std::stod(token, &pos);
        if (pos != token.size()) {
            throw std::invalid_argument(token);
        }
    } catch (const std::exception&) {
        throw parse_error("invalid weight: " + token, line);
    }
    if (!(value > 0.0) || value == std::numeric_limits<double>::infinity()) {
        throw parse_error("weight must be positive: " + token, line);
    }
    return Weight::finite(value);
}

void expect_tokens(const std::vector<std::string>& tokens, std::size_t count, std::size_t line) {
    if (tokens.size() != count) {
        throw parse_error("directive '" + tokens[0] + "' expects " + std::to_string(count - 1) +
                              " arguments",
                          line);
    }
}

template <typename T>
T read_file_as(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open file: " + path, 0);
    }
    return reader(in);
}

}  // namespace

MultiGraph read_ugraph(std::istream& in) {
    MultiGraph g;
    bool header_seen = false;
    std::size_t declared = 0;
    std::size_t nodes = 0;
    std::set<std::pair<VertexId, VertexId>> edge_pairs;
    std::set<VertexId> selfloop_seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string& directive = tokens[0];
        if (directive == "graph") {
            expect_tokens(tokens, 2, line_no);
            if (header_seen) {
                throw parse_error("duplicate graph header", line_no);
            }
            const long long n = parse_integer(tokens[1], line_no, "vertex count");
            if (n < 0) {
                throw parse_error("vertex count must be >= 0", line_no);
            }
            declared = static_cast<std::size_t>(n);
            header_seen = true;
            continue;
        }
        if (!header_seen) {
            throw parse_error("expected 'graph <n>' header before '" + directive + "'", line_no);
        }
        if (directive == "node") {
            expect_tokens(tokens, 3, line_no);
            const VertexId v = parse_vertex_id(tokens[1], line_no);
            if (g.contains(v)) {
                throw parse_error("duplicate node: " + tokens[1], line_no);
            }
            g.add_vertex(v, parse_weight(tokens[2], line_no));
            ++nodes;
        } else if (directive == "edge") {
            expect_tokens(tokens, 4, line_no);
            const VertexId u = parse_vertex_id(tokens[1], line_no);
            const VertexId v = parse_vertex_id(tokens[2], line_no);
            if (u == v) {
                throw parse_error("edge endpoints must differ (use selfloop)", line_no);
            }
            if (!g.contains(u) || !g.contains(v)) {
                throw parse_error("edge references unknown vertex", line_no);
            }
            const auto pair = std::minmax(u, v);
            if (!edge_pairs.emplace(pair.first, pair.second).second) {
                throw parse_error("duplicate edge pair: " + tokens[1] + " " + tokens[2], line_no);
            }
            const long long mult = parse_integer(tokens[3], line_no, "multiplicity");
            if (mult < 1 || mult > std::numeric_limits<int>::max()) {
                throw parse_error("multiplicity must be >= 1", line_no);
            }
            g.add_edge(u, v, static_cast<int>(mult));
        } else if (directive == "selfloop") {
            expect_tokens(tokens, 3, line_no);
            const VertexId v = parse_vertex_id(tokens[1], line_no);
            if (!g.contains(v)) {
                throw parse_error("selfloop references unknown vertex", line_no);
            }
            if (!selfloop_seen.insert(v).second) {
                throw parse_error("duplicate selfloop directive for vertex " + tokens[1], line_no);
            }
            const long long count = parse_integer(tokens[2], line_no, "selfloop count");
            if (count < 0 || count > std::numeric_limits<int>::max()) {
                throw parse_error("selfloop count must be >= 0", line_no);
            }
            if (count > 0) {
                g.add_edge(v, v, static_cast<int>(count));
            }
        } else {
            throw parse_error("unknown directive: " + directive, line_no);
        }
    }
    if (!header_seen) {
        throw parse_error("missing 'graph <n>' header", 0);
    }
    if (nodes != declared) {
        throw parse_error("node count mismatch: header says " + std::to_string(declared) +
                              ", found " + std::to_string(nodes),
                          0);
    }
    return g;
}

MultiGraph read_ugraph_file(const std::string& path) { return read_file_as(path, read_ugraph); }

void write_ugraph(std::ostream& out, const MultiGraph& g) {
    out << "graph " << g.vertex_count() << "\n";
    for (VertexId v : g.vertex_ids()) {
        out << "node " << v << " " << format_weight(g.weight(v)) << "\n";
    }
    for (VertexId v : g.vertex_ids()) {
        for (const auto& [u, mult] : g.neighbors(v)) {
            if (v < u) {
                out << "edge " << v << " " << u << " " << mult << "\n";
            }
        }
    }
    for (VertexId v : g.vertex_ids()) {
        if (g.self_loop_count(v) > 0) {
            out << "selfloop " << v << " " << g.self_loop_count(v) << "\n";
        }
    }
}

Dag read_bndag(std::istream& in) {
    Dag d;
    bool header_seen = false;
    std::size_t declared = 0;
    std::size_t nodes = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string& directive = tokens[0];
        if (directive == "dag") {
            expect_tokens(tokens, 2, line_no);
            if (header_seen) {
                throw parse_error("duplicate dag header", line_no);
            }
            const long long n = parse_integer(tokens[1], line_no, "vertex count");
            if (n < 0) {
                throw parse_error("vertex count must be >= 0", line_no);
            }
            declared = static_cast<std::size_t>(n);
            header_seen = true;
            continue;
        }
        if (!header_seen) {
            throw parse_error("expected 'dag <n>' header before '" + directive + "'", line_no);
        }
        if (directive == "node") {
            expect_tokens(tokens, 3, line_no);
            const VertexId v = parse_vertex_id(tokens[1], line_no);
            const long long dom = parse_integer(tokens[2], line_no, "domain size");
            if (dom < 2 || dom > std::numeric_limits<int>::max()) {
                throw parse_error("domain size must be >= 2", line_no);
            }
            try {
                d.add_vertex(v, static_cast<int>(dom));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what(), line_no);
            }
            ++nodes;
        } else if (directive == "arc") {
            expect_tokens(tokens, 3, line_no);
            const VertexId p = parse_vertex_id(tokens[1], line_no);
            const VertexId c = parse_vertex_id(tokens[2], line_no);
            try {
                d.add_arc(p, c);
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what(), line_no);
            }
        } else {
            throw parse_error("unknown directive: " + directive, line_no);
        }
    }
    if (!header_seen) {
        throw parse_error("missing 'dag <n>' header", 0);
    }
    if (nodes != declared) {
        throw parse_error("node count mismatch: header says " + std::to_string(declared) +
                              ", found " + std::to_string(nodes),
                          0);
    }
    if (!d.is_acyclic()) {
        throw parse_error("input is not a DAG", 0);
    }
    return d;
}

Dag read_bndag_file(const std::string& path) { return read_file_as(path, read_bndag); }

void write_bndag(std::ostream& out, const Dag& d) {
    out << "dag " << d.vertex_count() << "\n";
    for (VertexId v : d.vertex_ids()) {
        out << "node " << v << " " << d.domain_size(v) << "\n";
    }
    for (const auto& [p, c] : d.arcs()) {
        out << "arc " << p << " " << c << "\n";
    }
}

}  // namespace loopcut
