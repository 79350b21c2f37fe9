#pragma once

#include <optional>
#include <vector>

#include "adf/digraph.hpp"
#include "adf/solver.hpp"

namespace adf {

// colors[i] in {0,1,2} is the colour of edges[i].
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> colors;
};

// Both arcs (u,v) and (v,u) for every edge. Throws PreconditionError unless
// g is 3-regular.
Digraph cubic_to_digraph(const SimpleGraph& g);

struct ReductionOutcome {
  Decision decision = Decision::unknown;
  Certificate certificate;  // from decide_adf on the doubled digraph
};

// g is 3-edge-colourable iff its doubled digraph has an anti-directed
// 2-factor. unknown is passed through when the search is inconclusive.
ReductionOutcome three_edge_colorable_via_adf(const SimpleGraph& g, const SearchOptions& options = {});

// Exact backtracking colourer, independent of the anti-directed machinery.
std::optional<EdgeColoring> three_edge_color_direct(const SimpleGraph& g);

// Edges match g's edge list and no two incident edges share a colour.
Validation validate_edge_coloring(const SimpleGraph& g, const EdgeColoring& c);

// Colour classes 0 and 1 form even cycles; each is oriented alternately.
// Throws PreconditionError on an invalid colouring.
CycleCover coloring_to_adf(const SimpleGraph& g, const EdgeColoring& c);

// Cover cycles coloured 0/1 alternately, the leftover perfect matching 2.
// Throws PreconditionError if `cover` is not an anti-directed 2-factor of
// cubic_to_digraph(g).
EdgeColoring adf_to_coloring(const SimpleGraph& g, const CycleCover& cover);

}  // namespace adf
