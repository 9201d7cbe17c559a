#pragma once

// Dual graph of the special fiber of X_0(p): two vertices (the two components)
// joined by one edge per supersingular point. Edges at j = 0 and j = 1728 carry
// lengths 3 and 2; Frobenius fixes both vertices and permutes the edges.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "x0p/ff.hpp"
#include "x0p/ssenum.hpp"
#include "x0p/zlinalg.hpp"

namespace x0p {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphEdge {
    std::size_t tail = 0;
    std::size_t head = 1;
    std::uint64_t length = 1;
    Fp2Element label;
};

struct ArithGraph {
    std::uint64_t p = 0;
    std::size_t n_vertices = 2;
    std::vector<GraphEdge> edges;
    std::vector<std::size_t> frobenius;  // edge permutation
};

/// Checks the structural invariants (involution, fixed edges are the F_p labels,
/// lengths, connectivity). Throws GraphError on violation.
void validate(const ArithGraph& g);

ArithGraph build_graph(const SupersingularCensus& census);

/// Vertex-by-edge boundary matrix: column e has -1 at its tail and +1 at its head.
IntMatrix boundary_matrix(const ArithGraph& g);

/// Rows form a Z-basis of H_1(Gamma, Z) inside Z^E.
IntMatrix cycle_lattice(const ArithGraph& g);

/// Gram matrix of the cycle lattice under <e_i, e_j> = delta_ij * length_i.
IntMatrix monodromy_gram(const ArithGraph& g);

/// coker of the monodromy pairing. Throws GraphError if the pairing is degenerate.
AbGroup component_group(const ArithGraph& g);

/// Matrix of Frobenius on the cycle-lattice basis (column k = image of basis vector k).
IntMatrix frobenius_on_cycles(const ArithGraph& g);

/// H_1 / (F - 1) H_1.
AbGroup frobenius_coinvariants(const ArithGraph& g);

/// Critical (sandpile) group of the graph with every edge of length l replaced
/// by a path of l unit edges; computed from the reduced Laplacian.
AbGroup subdivided_critical_group(const ArithGraph& g);

/// Spanning-tree count of the subdivided graph: sum_i prod_{j != i} l_j for two vertices.
BigInt weighted_spanning_trees(const ArithGraph& g);

nlohmann::json graph_to_json(const ArithGraph& g);

}  // namespace x0p
