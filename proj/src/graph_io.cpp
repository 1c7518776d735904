#include "asr/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace asr {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(std::string_view s, std::size_t pos, std::size_t offset) {
    if (pos >= s.size()) throw ParseError("graph6: truncated input", pos + offset);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", pos + offset);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        offset = header.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input", offset);

    std::size_t pos = 0;
    long long n = 0;
    int first = sextet(text, pos, offset);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        int second = sextet(text, 1, offset);
        if (second < 63) {
            for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i, offset);
            if (n < 63) throw ParseError("graph6: non-canonical length header", offset);
            pos = 4;
        } else {
            for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i, offset);
            if (n < 258048) throw ParseError("graph6: non-canonical length header", offset);
            pos = 8;
        }
    }
    if (n > 100000) throw ParseError("graph6: vertex count too large", offset);

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < need) throw ParseError("graph6: truncated adjacency data", text.size() + offset);
    if (text.size() - pos > need) throw ParseError("graph6: trailing bytes", pos + need + offset);

    std::vector<Edge> es;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(text, pos + static_cast<std::size_t>(k / 6), offset);
            if ((byte >> (5 - k % 6)) & 1) es.push_back({i, j});
        }
    }
    if (bits % 6 != 0) {
        int last = sextet(text, pos + need - 1, offset);
        int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", pos + need - 1 + offset);
    }
    return Graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> es;
    int n = -1;
    int max_v = -1;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(line_start, nl - line_start);
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        line = trim(line);
        if (!line.empty()) {
            std::istringstream is{std::string(line)};
            std::string a, b, extra;
            is >> a >> b;
            if (is >> extra) throw ParseError("edge list: too many fields", line_start);
            if (a == "n") {
                int v = 0;
                auto r = std::from_chars(b.data(), b.data() + b.size(), v);
                if (r.ec != std::errc() || r.ptr != b.data() + b.size() || v < 0)
                    throw ParseError("edge list: bad vertex count", line_start);
                n = v;
            } else {
                int u = 0, w = 0;
                auto r1 = std::from_chars(a.data(), a.data() + a.size(), u);
                auto r2 = std::from_chars(b.data(), b.data() + b.size(), w);
                if (a.empty() || b.empty() || r1.ec != std::errc() || r2.ec != std::errc() ||
                    r1.ptr != a.data() + a.size() || r2.ptr != b.data() + b.size() || u < 0 || w < 0)
                    throw ParseError("edge list: expected two vertex ids", line_start);
                es.push_back(make_edge(u, w));
                max_v = std::max({max_v, u, w});
            }
        }
        line_start = nl + 1;
    }
    if (n < 0) n = max_v + 1;
    if (max_v >= n) throw ParseError("edge list: endpoint exceeds declared vertex count", 0);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n, es);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph load_graph(const std::string& arg) {
    std::string content = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    std::string_view t = trim(content);
    bool edge_list = false;
    for (char c : t)
        if (std::isspace(static_cast<unsigned char>(c))) edge_list = true;
    if (edge_list) return parse_edge_list(t);
    return parse_graph6(t);
}

}  // namespace asr
