#include "wellcov/io.hpp"

#include <cctype>
#include <sstream>

namespace wellcov {

namespace {

// graph6 stores the upper triangle column-major, 6 bits per byte, each
// byte offset by 63.
Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (!s.empty() && s.compare(0, 10, ">>graph6<<") == 0) s.erase(0, 10);
    if (s.empty()) throw MalformedInput("empty graph6 string");

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw MalformedInput("graph6 vertex count exceeds the 64-vertex cap");
        if (s.size() < 4) throw MalformedInput("truncated graph6 header");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = static_cast<unsigned char>(s[i]) - 63;
            if (c < 0 || c > 63) throw MalformedInput("bad graph6 header byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s[0]) - 63;
        if (n < 0 || n > 62) throw MalformedInput("bad graph6 header byte");
        pos = 1;
    }
    if (n > Graph::kMaxVertices)
        throw MalformedInput("graph6 vertex count exceeds the 64-vertex cap");

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) != nbytes)
        throw MalformedInput("graph6 body has wrong length");

    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(s[pos + bit / 6]) - 63;
            if (c < 0 || c > 63) throw MalformedInput("bad graph6 body byte");
            if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long n;
    if (!(in >> n)) throw MalformedInput("edge list: missing vertex count");
    if (n < 0 || n > Graph::kMaxVertices)
        throw MalformedInput("edge list: vertex count out of range");
    Graph g(static_cast<int>(n));
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw MalformedInput("edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw MalformedInput("edge list: vertex index out of range");
        if (u == v) throw MalformedInput("edge list: loop edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw MalformedInput("edge list: non-numeric token");
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? emit_graph6(g) : emit_edgelist(g);
}

Graph parse_graph_auto(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    bool numeric_first_line = j > i && (j == text.size() || text[j] == '\n' ||
                                        text[j] == '\r' || text[j] == ' ');
    return numeric_first_line ? parse_graph(text, GraphFormat::EdgeList)
                              : parse_graph(text, GraphFormat::Graph6);
}

}  // namespace wellcov
