#include "doctest.h"

#include "oracles.hpp"
#include "x0p/dualgraph.hpp"

using namespace x0p;

namespace {

std::vector<std::uint64_t> lengths_of(const ArithGraph& g) {
    std::vector<std::uint64_t> v;
    for (const auto& e : g.edges) v.push_back(e.length);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

bool is_identity_permutation(const std::vector<std::size_t>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != i) return false;
    return true;
}

// Weighted two-vertex tree count from the edge multiset alone: sum_i prod_{j != i} l_j.
BigInt tree_count_from_census(const SupersingularCensus& c) {
    const std::size_t generic = c.total - c.has_j0 - c.has_j1728;
    std::vector<unsigned long> l(generic, 1);
    if (c.has_j0) l.push_back(3);
    if (c.has_j1728) l.push_back(2);
    BigInt sum = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        BigInt prod = 1;
        for (std::size_t j = 0; j < l.size(); ++j)
            if (i != j) prod *= l[j];
        sum += prod;
    }
    return sum;
}

}  // namespace

TEST_CASE("build_graph examples") {
    const ArithGraph g11 = build_graph(census(11));
    CHECK(lengths_of(g11) == std::vector<std::uint64_t>{3, 2});
    CHECK(is_identity_permutation(g11.frobenius));
    CHECK(g11.n_vertices == 2);

    const ArithGraph g23 = build_graph(census(23));
    CHECK(lengths_of(g23) == std::vector<std::uint64_t>{3, 2, 1});

    const ArithGraph g13 = build_graph(census(13));
    CHECK(lengths_of(g13) == std::vector<std::uint64_t>{1});

    const ArithGraph g37 = build_graph(census(37));
    CHECK(lengths_of(g37) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK_FALSE(is_identity_permutation(g37.frobenius));
}

TEST_CASE("cycle lattice has rank |E| - 1 and lies in the kernel of the boundary") {
    for (std::uint64_t p : {11, 13, 23, 37, 101}) {
        const ArithGraph g = build_graph(census(p));
        const IntMatrix c = cycle_lattice(g);
        CHECK(c.rows() == g.edges.size() - 1);
        CHECK(boundary_matrix(g) * c.transpose() == IntMatrix(2, c.rows()));
    }
}

TEST_CASE("component group examples") {
    CHECK(component_group(build_graph(census(11))) == AbGroup{0, {5}});
    CHECK(component_group(build_graph(census(23))) == AbGroup{0, {11}});
    CHECK(component_group(build_graph(census(13))).is_trivial());
    CHECK(component_group(build_graph(census(37))) == AbGroup{0, {3}});
}

TEST_CASE("Frobenius coinvariant examples") {
    CHECK(frobenius_coinvariants(build_graph(census(11))) == AbGroup{1, {}});
    CHECK(frobenius_coinvariants(build_graph(census(23))) == AbGroup{2, {}});
    CHECK(frobenius_coinvariants(build_graph(census(37))) == AbGroup{1, {}});
    CHECK(frobenius_coinvariants(build_graph(census(13))).is_trivial());
}

TEST_CASE("validate rejects malformed graphs") {
    ArithGraph g = build_graph(census(23));
    SUBCASE("empty") {
        g.edges.clear();
        g.frobenius.clear();
        CHECK_THROWS_AS(validate(g), GraphError);
        CHECK_THROWS_AS(cycle_lattice(g), GraphError);
    }
    SUBCASE("wrong length") {
        g.edges[0].length += 1;
        CHECK_THROWS_AS(validate(g), GraphError);
    }
    SUBCASE("not an involution") {
        g.frobenius[0] = 1;
        CHECK_THROWS_AS(validate(g), GraphError);
    }
    SUBCASE("three vertices") {
        g.n_vertices = 3;
        CHECK_THROWS_AS(validate(g), GraphError);
    }
}

TEST_CASE("graph_to_json layout") {
    const auto j = graph_to_json(build_graph(census(11)));
    CHECK(j["p"] == 11);
    CHECK(j["vertices"] == 2);
    CHECK(j["nonresidue"] == 2);
    REQUIRE(j["edges"].size() == 2);
    CHECK(j["edges"][0]["label"] == nlohmann::json::array({0, 0}));
    CHECK(j["edges"][0]["length"] == 3);
    CHECK(j["frobenius"] == nlohmann::json::array({0, 1}));
}

TEST_CASE("dual graph properties for 5 <= p <= 499") {
    for (auto p : oracle::primes_between(5, 499)) {
        CAPTURE(p);
        const SupersingularCensus c = census(p);
        const ArithGraph g = build_graph(c);
        const std::uint64_t genus = oracle::genus_riemann_hurwitz(p);
        const std::uint64_t n = (p - 1) / std::gcd<std::uint64_t>(p - 1, 12);

        const IntMatrix gram = monodromy_gram(g);
        CHECK(gram.rows() == genus);
        CHECK(gram == gram.transpose());

        const AbGroup phi = component_group(g);
        CHECK(phi.torsion_order() == n);
        CHECK(phi.invariant_factors.size() <= 1);
        CHECK(subdivided_critical_group(g) == phi);
        CHECK(weighted_spanning_trees(g) == tree_count_from_census(c));
        CHECK(phi.torsion_order() == tree_count_from_census(c));

        const IntMatrix f = frobenius_on_cycles(g);
        CHECK(f * f == IntMatrix::identity(f.rows()));
        CHECK(f.transpose() * gram * f == gram);

        const AbGroup co = frobenius_coinvariants(g);
        CHECK(co.invariant_factors.empty());
        CHECK(2 * co.free_rank + 1 == genus + c.h);
    }
}
