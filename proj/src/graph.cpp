#include "ggr/graph.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace ggr {

namespace {

std::string vid(VertexId v) { return std::to_string(v); }

}  // namespace

std::vector<Violation> validate(const GeomFiniteGraph& g) {
    std::vector<Violation> out;
    if (g.q < 1) out.push_back({"q", "q must be >= 1"});

    std::set<VertexId> ids;
    for (const auto& v : g.core.vertices) {
        if (!ids.insert(v.id).second)
            out.push_back({"vertex " + vid(v.id), "duplicate vertex id"});
        if (v.stab <= 0)
            out.push_back({"vertex " + vid(v.id), "stabilizer must be positive"});
    }

    for (std::size_t i = 0; i < g.core.edges.size(); ++i) {
        const auto& e = g.core.edges[i];
        const std::string where = "edge " + vid(e.u) + "-" + vid(e.v);
        if (e.stab <= 0) out.push_back({where, "stabilizer must be positive"});
        for (VertexId end : {e.u, e.v}) {
            const auto* v = g.core.find(end);
            if (!v) {
                out.push_back({where, "endpoint " + vid(end) + " is not a vertex"});
                continue;
            }
            if (e.stab <= 0 || v->stab <= 0) continue;
            // stab(e) divides stab(v): integral quotient when both are integral.
            Rat quot = v->stab / e.stab;
            if (is_integer(v->stab) && is_integer(e.stab) && !is_integer(quot))
                out.push_back({where, "stab(" + vid(end) + ")/stab(e) = " +
                                          format_rational(quot) + " is not an integer"});
        }
    }

    auto check_weights = [&](const std::map<VertexId, Rat>& w, const char* kind) {
        for (const auto& [v, c] : w) {
            if (!g.core.find(v))
                out.push_back({std::string(kind) + " at " + vid(v), "unknown vertex"});
            if (c < 0)
                out.push_back({std::string(kind) + " at " + vid(v), "negative weight"});
        }
    };
    check_weights(g.cusp_weight, "cusp");
    check_weights(g.funnel_weight, "funnel");

    if (!out.empty()) return out;  // degree checks need a well-formed graph

    const Rat target(g.q + 1);
    for (const auto& v : g.core.vertices) {
        Rat d = degree(g, v.id);
        if (d != target)
            out.push_back({"vertex " + vid(v.id),
                           "degree " + format_rational(d) + " != " + format_rational(target)});
    }
    return out;
}

Rat degree(const GeomFiniteGraph& g, VertexId v) {
    const auto* vert = g.core.find(v);
    if (!vert) throw std::invalid_argument("degree: unknown vertex id " + vid(v));
    Rat d = g.cusp_at(v) + g.funnel_at(v);
    for (const auto& e : g.core.edges) {
        if (e.u != v && e.v != v) continue;
        Rat contrib = vert->stab / e.stab;
        d += (e.u == e.v) ? contrib * 2 : contrib;
    }
    return d;
}

Matrix<Rat> operator_matrix(const GeomFiniteGraph& g) {
    const std::size_t n = g.core.vertices.size();
    Matrix<Rat> m(n, std::vector<Rat>(n, Rat(0)));
    for (const auto& e : g.core.edges) {
        auto iu = g.core.index_of(e.u), iv = g.core.index_of(e.v);
        if (!iu || !iv) throw std::invalid_argument("operator_matrix: dangling edge");
        if (e.u == e.v) {
            m[*iu][*iu] += Rat(2) * g.core.vertices[*iu].stab / e.stab;
        } else {
            m[*iu][*iv] += g.core.vertices[*iu].stab / e.stab;
            m[*iv][*iu] += g.core.vertices[*iv].stab / e.stab;
        }
    }
    return m;
}

bool nu_symmetric(const Matrix<Rat>& m, const StabilizerGraph& core) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] * core.vertices[j].stab != m[j][i] * core.vertices[i].stab)
                return false;
    return true;
}

double symmetrized_spectral_radius(const Matrix<Rat>& m, const StabilizerGraph& core) {
    const std::size_t n = m.size();
    if (n == 0) return 0.0;
    // S[i][j] = M[i][j] * sqrt(stab(j)/stab(i)) is symmetric.
    std::vector<std::vector<double>> s(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s[i][j] = to_double(m[i][j]) *
                      std::sqrt(to_double(core.vertices[j].stab) /
                                to_double(core.vertices[i].stab));
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::cos(double(i) + 1.0);
    double lambda = 0;
    for (int it = 0; it < 2000; ++it) {
        double norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = 0;
            for (std::size_t j = 0; j < n; ++j) y[i] += s[i][j] * x[j];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0) return 0.0;
        double prev = lambda;
        lambda = norm;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (it > 10 && std::abs(lambda - prev) < 1e-13 * std::max(1.0, lambda)) break;
    }
    return lambda;
}

}  // namespace ggr
