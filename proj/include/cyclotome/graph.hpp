#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotome/intsym_matrix.hpp"

namespace cyclotome {

/// Charged signed graph: vertex charges in {-1,0,+1}, symmetric edge signs in
/// {-1,0,+1} with zero diagonal. Charges live beside the edges, not on them;
/// adjacency_matrix() puts them back on the diagonal.
struct ChargedSignedGraph {
    int n = 0;
    std::vector<int8_t> charge;  // length n
    std::vector<int8_t> edge;    // n*n symmetric, zero diagonal

    ChargedSignedGraph() = default;
    explicit ChargedSignedGraph(int size)
        : n(size), charge(size, 0), edge(static_cast<size_t>(size) * size, 0) {
        if (size < 0) throw std::invalid_argument("ChargedSignedGraph: negative size");
    }

    int sign(int i, int j) const { return edge[static_cast<size_t>(i) * n + j]; }
    void set_edge(int i, int j, int s) {
        if (i == j) throw std::invalid_argument("set_edge: no loops");
        if (s < -1 || s > 1) throw std::invalid_argument("set_edge: sign out of range");
        edge[static_cast<size_t>(i) * n + j] = static_cast<int8_t>(s);
        edge[static_cast<size_t>(j) * n + i] = static_cast<int8_t>(s);
    }
    void set_charge(int i, int c) {
        if (c < -1 || c > 1) throw std::invalid_argument("set_charge: charge out of range");
        charge[i] = static_cast<int8_t>(c);
    }

    bool operator==(const ChargedSignedGraph& o) const {
        return n == o.n && charge == o.charge && edge == o.edge;
    }

    int degree(int v) const {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (sign(v, j) != 0) ++d;
        return d;
    }

    bool has_charge() const {
        for (int8_t c : charge)
            if (c != 0) return true;
        return false;
    }
    bool all_edges_positive() const {
        for (int8_t e : edge)
            if (e < 0) return false;
        return true;
    }

    IntSymMatrix adjacency_matrix() const {
        IntSymMatrix A(n);
        for (int i = 0; i < n; ++i) {
            A.set(i, i, Int{static_cast<long>(charge[i])});
            for (int j = i + 1; j < n; ++j)
                if (sign(i, j) != 0) A.set(i, j, Int{static_cast<long>(sign(i, j))});
        }
        return A;
    }

    /// Round-trip from a {-1,0,1} symmetric matrix: diagonal becomes charges.
    static ChargedSignedGraph from_matrix(const IntSymMatrix& A) {
        ChargedSignedGraph g(A.n);
        for (int i = 0; i < A.n; ++i) {
            Int d = A.at(i, i);
            if (d < -1 || d > 1) throw std::invalid_argument("from_matrix: diagonal out of range");
            g.charge[i] = static_cast<int8_t>(d.get_si());
            for (int j = i + 1; j < A.n; ++j) {
                Int e = A.at(i, j);
                if (e < -1 || e > 1)
                    throw std::invalid_argument("from_matrix: entry out of range");
                if (e != 0) g.set_edge(i, j, static_cast<int>(e.get_si()));
            }
        }
        return g;
    }

    ChargedSignedGraph negated() const {
        ChargedSignedGraph g = *this;
        for (auto& c : g.charge) c = static_cast<int8_t>(-c);
        for (auto& e : g.edge) e = static_cast<int8_t>(-e);
        return g;
    }
};

/// Flip the signs of all edges incident at v. An involution; the result is
/// strongly equivalent to g.
inline ChargedSignedGraph switch_vertex(const ChargedSignedGraph& g, int v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("switch_vertex: index out of range");
    ChargedSignedGraph r = g;
    for (int j = 0; j < g.n; ++j) {
        if (j == v) continue;
        int s = g.sign(v, j);
        if (s != 0) r.set_edge(v, j, -s);
    }
    return r;
}

/// Induced subgraph on the given vertices, order preserved.
inline ChargedSignedGraph induced_subgraph(const ChargedSignedGraph& g,
                                           const std::vector<int>& vertices) {
    ChargedSignedGraph r(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        int vi = vertices[i];
        if (vi < 0 || vi >= g.n) throw std::out_of_range("induced_subgraph: vertex out of range");
        r.charge[i] = g.charge[vi];
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            int s = g.sign(vi, vertices[j]);
            if (s != 0) r.set_edge(static_cast<int>(i), static_cast<int>(j), s);
        }
    }
    return r;
}

/// Connected components of the underlying graph, each sorted, ordered by least vertex.
inline std::vector<std::vector<int>> components(const ChargedSignedGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v = 0; v < g.n; ++v)
                if (!seen[v] && g.sign(u, v) != 0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const ChargedSignedGraph& g) {
    return g.n == 0 || components(g).size() == 1;
}

/// No three mutually adjacent vertices (edge signs irrelevant).
inline bool triangle_free(const ChargedSignedGraph& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            if (g.sign(i, j) == 0) continue;
            for (int k = j + 1; k < g.n; ++k)
                if (g.sign(i, k) != 0 && g.sign(j, k) != 0) return false;
        }
    return true;
}

}  // namespace cyclotome
