#include "indturan/graph6.hpp"

#include <fstream>
#include <sstream>

#include "indturan/error.hpp"

namespace indturan {

namespace {

void put_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

int sextet(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) throw Error(ErrorCode::MalformedGraph6, "byte outside printable graph6 range");
    return u - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    put_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty input");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw Error(ErrorCode::MalformedGraph6, "truncated 18-bit size header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
        if (n <= 62) throw Error(ErrorCode::MalformedGraph6, "non-canonical long header for small n");
        pos = 4;
    } else {
        if (text.size() < 8) throw Error(ErrorCode::MalformedGraph6, "truncated 36-bit size header");
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i]));
        if (n <= 258047) throw Error(ErrorCode::MalformedGraph6, "non-canonical long header for small n");
        pos = 8;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(bytes) + " body bytes, got " +
                                                    std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    Vertex i = 0, j = 1;
    for (std::size_t b = 0; b < bytes; ++b) {
        int value = sextet(text[pos + b]);
        for (int bit = 5; bit >= 0; --bit, ++k) {
            bool set = (value >> bit) & 1;
            if (k >= bits) {
                if (set) throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
                continue;
            }
            if (set) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

Graph read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::string line;
    std::getline(in, line);
    return decode_graph6(line);
}

void write_graph6_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << encode_graph6(g) << '\n';
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace indturan
