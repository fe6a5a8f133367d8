#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggr/det.hpp"
#include "ggr/rational.hpp"

namespace ggr {

using VertexId = std::int64_t;

// Finite graph with a stabilizer function on vertices and edges. Loops and
// parallel edges are allowed; each undirected edge is listed once with
// u <= v.
struct StabilizerGraph {
    struct Vertex {
        VertexId id = 0;
        Rat stab = 1;
    };
    struct Edge {
        VertexId u = 0;
        VertexId v = 0;
        Rat stab = 1;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::optional<std::size_t> index_of(VertexId id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return i;
        return std::nullopt;
    }
    const Vertex* find(VertexId id) const {
        auto i = index_of(id);
        return i ? &vertices[*i] : nullptr;
    }
    void add_vertex(VertexId id, Rat stab = 1) { vertices.push_back({id, std::move(stab)}); }
    void add_edge(VertexId u, VertexId v, Rat stab = 1) {
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, std::move(stab)});
    }
};

// Geometrically finite (q+1)-regular graph: compact core plus, per vertex,
// the total adjacency weight of cusp and funnel attachments.
struct GeomFiniteGraph {
    int q = 2;
    StabilizerGraph core;
    std::map<VertexId, Rat> cusp_weight;
    std::map<VertexId, Rat> funnel_weight;

    Rat cusp_at(VertexId v) const {
        auto it = cusp_weight.find(v);
        return it == cusp_weight.end() ? Rat(0) : it->second;
    }
    Rat funnel_at(VertexId v) const {
        auto it = funnel_weight.find(v);
        return it == funnel_weight.end() ? Rat(0) : it->second;
    }
};

struct Violation {
    std::string where;
    std::string message;
};

// Every violation of the geometrically finite model: bad stabilizers,
// dangling edge or attachment references, divisibility failures, and any
// vertex whose total degree differs from q+1 (exact rational comparison).
// Empty result means valid.
std::vector<Violation> validate(const GeomFiniteGraph& g);

// Total degree of v: sum of stab(v)/stab(e) over incident core edges (loops
// twice) plus cusp and funnel weights. Throws on unknown vertex.
Rat degree(const GeomFiniteGraph& g, VertexId v);

// Adjacency operator matrix over exact rationals, rows/columns in the order
// of core.vertices: M[v][w] = sum over edges {v,w} of stab(v)/stab(e), loops
// contributing twice on the diagonal.
Matrix<Rat> operator_matrix(const GeomFiniteGraph& g);

// nu-symmetry of the operator matrix: M[v][w]*stab(w) == M[w][v]*stab(v).
bool nu_symmetric(const Matrix<Rat>& m, const StabilizerGraph& core);

// Spectral radius estimate of D^{1/2} M D^{-1/2} (D = diag(1/stab)) by power
// iteration on the symmetrized matrix.
double symmetrized_spectral_radius(const Matrix<Rat>& m, const StabilizerGraph& core);

}  // namespace ggr
