#pragma once

#include <string>

#include "adf/bipartite.hpp"
#include "adf/digraph.hpp"
#include "adf/random.hpp"

namespace adf {

// Every arc present independently with probability p.
Digraph random_digraph(int n, double p, Rng& rng);
// Each vertex gets delta random out-neighbours, then in-degree deficits are
// topped up with random arcs, so min_degree() >= delta.
Digraph random_min_degree_digraph(int n, int delta, Rng& rng);
// d+(v) = d-(v) = delta for every v: a random circulant shuffled by
// degree-preserving arc switches.
Digraph uniform_degree_digraph(int n, int delta, Rng& rng);
// One arc between every pair, random direction.
Digraph random_tournament(int n, Rng& rng);
// Two complete digraphs of odd order (sizes n/2 or n/2-1 and the rest) joined
// by random crossing arcs until min_degree() >= n/2. Near the D(n)
// extremal structure; n even >= 4.
Digraph near_extremal_digraph(int n, Rng& rng);

// X = {0..half-1}, Y = {half..2*half-1}; each X-Y pair is an edge with probability p.
BipartiteInstance random_bipartite(int half, double p, Rng& rng);
// Random bipartite graph with a planted deficient set: `k` vertices of X whose
// neighbourhoods are confined to k-1 vertices of Y. Other pairs appear with probability p.
BipartiteInstance planted_deficient_bipartite(int half, int k, double p, Rng& rng);

SimpleGraph k4_graph();
SimpleGraph k33_graph();
// GP(m, k): outer cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k}. 1 <= k < m/2.
SimpleGraph generalized_petersen(int m, int k);
SimpleGraph petersen_graph();
SimpleGraph prism_graph();
// Configuration (pairing) model with rejection of loops and multi-edges.
SimpleGraph random_cubic_graph(int n, Rng& rng);
// k4, k33, prism, petersen, mobius-kantor, durer, desargues, or gp:<m>:<k>.
SimpleGraph named_cubic_graph(const std::string& name);

}  // namespace adf
