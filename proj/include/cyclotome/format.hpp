#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclotome/graph.hpp"
#include "cyclotome/intpoly.hpp"
#include "cyclotome/intsym_matrix.hpp"

namespace cyclotome {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

// ---- CSG v1 ----
// csg <n>
// charge <i> <c>        nonzero charges, c in {1,-1}
// edge <i> <j> <s>      i<j, s in {1,-1}
// Input is order-insensitive; output is emitted sorted.

inline void write_csg(std::ostream& os, const ChargedSignedGraph& g) {
    os << "csg " << g.n << "\n";
    for (int i = 0; i < g.n; ++i)
        if (g.charge[i] != 0) os << "charge " << i << " " << int(g.charge[i]) << "\n";
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.sign(i, j) != 0) os << "edge " << i << " " << j << " " << g.sign(i, j) << "\n";
}

inline std::string to_csg(const ChargedSignedGraph& g) {
    std::ostringstream os;
    write_csg(os, g);
    return os.str();
}

namespace detail {
inline bool next_content_line(std::istream& is, std::string& line, int& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        return true;
    }
    return false;
}
}  // namespace detail

inline ChargedSignedGraph read_csg(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!detail::next_content_line(is, line, lineno)) throw ParseError(lineno, "empty input");
    std::istringstream head(line);
    std::string kw;
    int n = -1;
    head >> kw >> n;
    if (kw != "csg" || head.fail() || n < 0)
        throw ParseError(lineno, "expected header 'csg <n>'");
    ChargedSignedGraph g(n);
    while (detail::next_content_line(is, line, lineno)) {
        std::istringstream ls(line);
        ls >> kw;
        if (kw == "charge") {
            int i, c;
            ls >> i >> c;
            if (ls.fail() || i < 0 || i >= n || (c != 1 && c != -1))
                throw ParseError(lineno, "bad charge record");
            g.set_charge(i, c);
        } else if (kw == "edge") {
            int i, j, s;
            ls >> i >> j >> s;
            if (ls.fail() || i < 0 || j < 0 || i >= n || j >= n || i == j ||
                (s != 1 && s != -1))
                throw ParseError(lineno, "bad edge record");
            g.set_edge(i, j, s);
        } else {
            throw ParseError(lineno, "unknown record '" + kw + "'");
        }
    }
    return g;
}

inline ChargedSignedGraph csg_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_csg(is);
}

// ---- ISM: general integer symmetric matrix ----
// ism <n> followed by the upper triangle, row by row, whitespace separated.

inline void write_ism(std::ostream& os, const IntSymMatrix& A) {
    os << "ism " << A.n << "\n";
    for (int i = 0; i < A.n; ++i) {
        for (int j = i; j < A.n; ++j) os << (j > i ? " " : "") << A.at(i, j).get_str();
        os << "\n";
    }
}

inline IntSymMatrix read_ism(std::istream& is) {
    std::string kw;
    int n = -1;
    is >> kw >> n;
    if (kw != "ism" || is.fail() || n < 0)
        throw ParseError(1, "expected header 'ism <n>'");
    IntSymMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::string tok;
            is >> tok;
            if (is.fail()) throw ParseError(0, "truncated ism matrix");
            try {
                A.set(i, j, Int(tok));
            } catch (const std::invalid_argument&) {
                throw ParseError(0, "bad integer '" + tok + "'");
            }
        }
    return A;
}

/// Sniff the header keyword and parse either format into a matrix.
inline IntSymMatrix read_matrix_any(std::istream& is) {
    std::streampos pos = is.tellg();
    std::string kw;
    is >> kw;
    is.seekg(pos);
    if (kw == "csg") return read_csg(is).adjacency_matrix();
    if (kw == "ism") return read_ism(is);
    throw ParseError(1, "expected 'csg' or 'ism' input");
}

// ---- poly <d> c0 c1 ... cd (lowest degree first) ----

inline void write_poly(std::ostream& os, const IntPoly& p) {
    os << "poly " << p.degree();
    for (const auto& c : p.c) os << " " << c.get_str();
    if (p.is_zero()) os << " 0";
    os << "\n";
}

inline IntPoly read_poly(std::istream& is) {
    std::string kw;
    long d;
    is >> kw >> d;
    if (kw != "poly" || is.fail()) throw ParseError(1, "expected 'poly <d> c0 ... cd'");
    std::vector<Int> c;
    for (long i = 0; i <= std::max(d, 0L); ++i) {
        std::string tok;
        is >> tok;
        if (is.fail()) throw ParseError(1, "truncated polynomial");
        c.emplace_back(tok);
    }
    return IntPoly(std::move(c));
}

}  // namespace cyclotome
