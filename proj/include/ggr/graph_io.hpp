#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ggr/graph.hpp"

namespace ggr {

// Document-level failure: malformed JSON, schema violation, unknown key,
// bad rational literal, duplicate or missing ids, empty vertex list.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadResult {
    GeomFiniteGraph graph;
    std::vector<Violation> warnings;  // validate() findings; load still succeeds
};

// Parses the graph document schema:
//   { "q": int,
//     "vertices": [{"id": int, "stab": "num/den"}, ...],
//     "edges":    [{"u": int, "v": int, "stab": "num/den"}, ...],
//     "cusps":    [{"vertex": int, "weight": "num/den"}, ...],
//     "funnels":  [{"vertex": int, "weight": "num/den"}, ...] }
// Rationals are "num/den" strings in lowest terms with den >= 1 (a bare
// integer string is also accepted). Unknown keys are rejected with the JSON
// path in the message.
LoadResult load_graph(const std::string& text);
LoadResult load_graph_file(const std::string& path);

// Canonical serialization; save(load(d)) == d up to key ordering for
// canonical documents.
std::string save_graph(const GeomFiniteGraph& g);
void save_graph_file(const GeomFiniteGraph& g, const std::string& path);

}  // namespace ggr
