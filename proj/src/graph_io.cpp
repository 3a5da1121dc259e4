#include "unidom/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace unidom {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t payload_chars(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
        }
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < kBias || c > 126) {
            throw ParseError(std::string("graph6: byte '") + c + "' outside the printable range");
        }
    }

    int n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = text[0] - kBias;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: order too large");
        if (text.size() < 4) throw ParseError("graph6: truncated order header");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kBias);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds the vertex cap");
    }

    const std::string_view payload = text.substr(pos);
    if (payload.size() != payload_chars(n)) {
        throw ParseError("graph6: payload has " + std::to_string(payload.size()) +
                         " bytes, expected " + std::to_string(payload_chars(n)));
    }

    std::vector<std::uint64_t> rows(n, 0);
    std::size_t bit = 0;
    auto next_bit = [&] {
        const int byte = payload[bit / 6] - kBias;
        const int value = (byte >> (5 - bit % 6)) & 1;
        ++bit;
        return value;
    };
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (next_bit()) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    while (bit < payload.size() * 6) {
        if (next_bit()) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_rows(std::move(rows));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::vector<long>> lines;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::vector<long> fields;
        while (!line.empty()) {
            long value = 0;
            auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
            if (ec != std::errc{}) {
                throw ParseError("edge list line " + std::to_string(line_no) +
                                 ": expected an integer");
            }
            fields.push_back(value);
            line = trim(line.substr(end - line.data()));
        }
        if (fields.size() != 2) {
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected exactly two integers");
        }
        lines.push_back(std::move(fields));
    }
    if (lines.empty()) throw ParseError("edge list: missing \"n m\" header");

    const long n = lines[0][0];
    const long m = lines[0][1];
    if (n < 0 || n > kMaxVertices) throw ParseError("edge list: bad vertex count");
    if (m < 0 || static_cast<std::size_t>(m) != lines.size() - 1) {
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        edges.emplace_back(static_cast<Vertex>(lines[k][0]), static_cast<Vertex>(lines[k][1]));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string emit_dot(const Graph& g, const std::vector<std::string>& labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.order()) {
        throw std::invalid_argument("emit_dot: label count does not match graph order");
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

GraphFormat detect_format(std::string_view text) {
    text = trim(text);
    while (!text.empty() && text.front() == '#') {
        const auto nl = text.find('\n');
        text = nl == std::string_view::npos ? std::string_view{} : trim(text.substr(nl + 1));
    }
    if (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) {
        return GraphFormat::edge_list;
    }
    return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text) {
    return detect_format(text) == GraphFormat::edge_list ? parse_edge_list(text)
                                                         : parse_graph6(text);
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    if (detect_format(text) == GraphFormat::edge_list) return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (!trim(line).empty()) out.push_back(parse_graph6(line));
    }
    if (out.empty()) throw ParseError(path + ": no graphs found");
    return out;
}

}  // namespace unidom
