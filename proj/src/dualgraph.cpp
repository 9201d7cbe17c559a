#include "x0p/dualgraph.hpp"

#include <algorithm>
#include <string>

namespace x0p {

namespace {

std::uint64_t edge_length(const Fp2Element& j) {
    if (j.is_zero()) return 3;
    if (j.in_base_field() && j.a().value() == 1728 % j.modulus()) return 2;
    return 1;
}

void require_connected(const ArithGraph& g) {
    if (g.edges.empty()) throw GraphError("dual graph has no edges (disconnected)");
}

// Coordinates of a lattice vector x in the basis given by columns rank.. of V.
std::vector<BigInt> lattice_coordinates(const IntMatrix& v_inverse, std::size_t rank, const std::vector<BigInt>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k)
        if (x[k] != 0) support.push_back(k);
    std::vector<BigInt> coords;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt y = 0;
        for (std::size_t k : support) y += v_inverse(i, k) * x[k];
        if (i < rank) {
            if (y != 0) throw GraphError("Frobenius does not preserve the cycle lattice");
        } else {
            coords.push_back(y);
        }
    }
    return coords;
}

}  // namespace

void validate(const ArithGraph& g) {
    require_connected(g);
    if (g.n_vertices != 2) throw GraphError("X_0(p) dual graph must have two vertices");
    if (g.frobenius.size() != g.edges.size()) throw GraphError("Frobenius permutation has the wrong size");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const std::size_t f = g.frobenius[i];
        if (f >= g.edges.size() || g.frobenius[f] != i) throw GraphError("Frobenius is not an involution");
        const GraphEdge& e = g.edges[i];
        if ((f == i) != e.label.in_base_field()) throw GraphError("fixed edges must be exactly the F_p-rational points");
        if (e.length != edge_length(e.label)) throw GraphError("edge length does not match its j-invariant");
        if (e.tail >= g.n_vertices || e.head >= g.n_vertices || e.tail == e.head)
            throw GraphError("edge endpoints out of range");
    }
}

ArithGraph build_graph(const SupersingularCensus& census) {
    if (census.total == 0) throw GraphError("census is empty");
    ArithGraph g;
    g.p = census.p;
    for (const auto& j : census.j_values) g.edges.push_back({0, 1, edge_length(j), j});
    for (const auto& e : g.edges) {
        const Fp2Element conj = fp2_frobenius(e.label);
        auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const GraphEdge& o) { return o.label == conj; });
        if (it == g.edges.end()) throw GraphError("conjugate supersingular point missing from census");
        g.frobenius.push_back(static_cast<std::size_t>(it - g.edges.begin()));
    }
    validate(g);
    return g;
}

IntMatrix boundary_matrix(const ArithGraph& g) {
    IntMatrix b(g.n_vertices, g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        b(g.edges[e].tail, e) -= 1;
        b(g.edges[e].head, e) += 1;
    }
    return b;
}

IntMatrix cycle_lattice(const ArithGraph& g) {
    require_connected(g);
    return kernel_basis(boundary_matrix(g));
}

IntMatrix monodromy_gram(const ArithGraph& g) {
    const IntMatrix c = cycle_lattice(g);
    std::vector<BigInt> lengths;
    for (const auto& e : g.edges) lengths.emplace_back(static_cast<unsigned long>(e.length));
    return c * IntMatrix::diagonal(lengths) * c.transpose();
}

AbGroup component_group(const ArithGraph& g) {
    const AbGroup phi = cokernel(monodromy_gram(g));
    if (!phi.is_finite()) throw GraphError("monodromy pairing is degenerate");
    return phi;
}

IntMatrix frobenius_on_cycles(const ArithGraph& g) {
    require_connected(g);
    const IntMatrix b = boundary_matrix(g);
    const SmithForm s = snf(b);
    std::size_t r = 0;
    while (r < std::min(b.rows(), b.cols()) && s.D(r, r) != 0) ++r;
    const IntMatrix& v_inverse = s.V_inverse;
    const std::size_t n_edges = g.edges.size(), genus = n_edges - r;

    IntMatrix f(genus, genus);
    for (std::size_t k = 0; k < genus; ++k) {
        std::vector<BigInt> image(n_edges);
        for (std::size_t i = 0; i < n_edges; ++i) image[g.frobenius[i]] = s.V(i, r + k);
        const std::vector<BigInt> coords = lattice_coordinates(v_inverse, r, image);
        for (std::size_t i = 0; i < genus; ++i) f(i, k) = coords[i];
    }
    return f;
}

AbGroup frobenius_coinvariants(const ArithGraph& g) {
    const IntMatrix f = frobenius_on_cycles(g);
    return cokernel(f - IntMatrix::identity(f.rows()));
}

AbGroup subdivided_critical_group(const ArithGraph& g) {
    require_connected(g);
    std::size_t n = g.n_vertices;
    std::vector<std::pair<std::size_t, std::size_t>> unit_edges;
    for (const auto& e : g.edges) {
        std::size_t prev = e.tail;
        for (std::uint64_t step = 1; step < e.length; ++step) {
            unit_edges.emplace_back(prev, n);
            prev = n++;
        }
        unit_edges.emplace_back(prev, e.head);
    }
    IntMatrix lap(n, n);
    for (auto [a, b] : unit_edges) {
        lap(a, a) += 1;
        lap(b, b) += 1;
        lap(a, b) -= 1;
        lap(b, a) -= 1;
    }
    // Drop vertex 0.
    IntMatrix reduced(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) reduced(i - 1, j - 1) = lap(i, j);
    return cokernel(reduced);
}

BigInt weighted_spanning_trees(const ArithGraph& g) {
    BigInt total = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        BigInt prod = 1;
        for (std::size_t j = 0; j < g.edges.size(); ++j)
            if (j != i) prod *= static_cast<unsigned long>(g.edges[j].length);
        total += prod;
    }
    return total;
}

nlohmann::json graph_to_json(const ArithGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const GraphEdge& e = g.edges[i];
        edges.push_back({{"index", i},
                         {"tail", e.tail},
                         {"head", e.head},
                         {"length", e.length},
                         {"label", {e.label.a().value(), e.label.b().value()}}});
    }
    std::uint64_t nu = g.edges.empty() ? 0 : g.edges.front().label.nu().value();
    return {{"p", g.p}, {"vertices", g.n_vertices}, {"nonresidue", nu}, {"edges", edges}, {"frobenius", g.frobenius}};
}

}  // namespace x0p
