#include "reklab/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace reklab {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw input_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ss(body);
        if (n < 0) {
            std::string tag;
            ss >> tag >> n;
            if (tag != "n" || ss.fail() || n < 0)
                parse_fail(line_no, "expected header `n <count>`, got `" + body + "`");
        } else {
            long long u, v;
            ss >> u >> v;
            if (ss.fail()) parse_fail(line_no, "expected `u v`, got `" + body + "`");
            std::string rest;
            if (ss >> rest) parse_fail(line_no, "trailing tokens after edge: `" + rest + "`");
            if (u < 0 || u >= n || v < 0 || v >= n)
                parse_fail(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (n < 0) throw input_error("edge-list input has no `n <count>` header");
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const input_error& e) {
        throw input_error(std::string("invalid edge list: ") + e.what());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.to_edge_list()) out << u << " " << v << "\n";
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(g, ss);
    return ss.str();
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kG6Lo = 63;  // bias added to every 6-bit group
constexpr int kG6Hi = 126; // '~', the long-form marker

int g6_byte(const std::string& s, std::size_t i) {
    if (i >= s.size()) throw input_error("graph6: truncated input");
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < kG6Lo || c > kG6Hi)
        throw input_error("graph6: byte " + std::to_string(i) + " out of printable range");
    return c - kG6Lo;
}

} // namespace

Graph read_graph6(const std::string& input) {
    std::string s = input;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw input_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (g6_byte(s, 0) != kG6Hi - kG6Lo) {
        n = g6_byte(s, 0);
        pos = 1;
    } else if (s.size() >= 2 && g6_byte(s, 1) != kG6Hi - kG6Lo) {
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | g6_byte(s, pos);
    } else {
        n = 0;
        for (pos = 2; pos <= 7; ++pos) n = (n << 6) | g6_byte(s, pos);
    }
    if (n > 1'000'000) throw input_error("graph6: order " + std::to_string(n) + " too large");

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw input_error("graph6: expected " + std::to_string(need) + " data bytes, got " +
                          std::to_string(s.size() - pos));

    std::vector<Edge> edges;
    long long bit = 0;
    int group = 0, remaining = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (remaining == 0) {
                group = g6_byte(s, pos++);
                remaining = 6;
            }
            if (group & (1 << (remaining - 1))) edges.emplace_back(i, j);
            --remaining;
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Hi));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Lo));
    } else {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(kG6Hi));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Lo));
    }

    int group = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(group + kG6Lo));
                group = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((group << (6 - used)) + kG6Lo));
    return out;
}

// ---------------------------------------------------------------------------
// files

GraphFormat format_from_extension(const std::string& path) {
    auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".el" || ext == ".txt") return GraphFormat::edge_list;
    if (ext == ".g6") return GraphFormat::graph6;
    throw input_error("cannot infer graph format from `" + path +
                      "` (expected .el, .txt or .g6; use an explicit format override)");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open `" + path + "` for reading");
    if (format == GraphFormat::edge_list) return read_edge_list(in);
    std::string line;
    while (std::getline(in, line))
        if (!blank(line)) return read_graph6(line);
    throw input_error("graph6 file `" + path + "` contains no graph");
}

Graph read_graph_file(const std::string& path) {
    return read_graph_file(path, format_from_extension(path));
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open `" + path + "` for writing");
    if (format == GraphFormat::edge_list)
        write_edge_list(g, out);
    else
        out << write_graph6(g) << "\n";
}

} // namespace reklab
