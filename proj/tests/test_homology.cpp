#include <doctest.h>

#include "stressca/homology.hpp"

using namespace stressca;

namespace {

AbstractComplex octahedron() {
    std::vector<Face> facets;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) facets.push_back({a, 2 + b, 4 + c});
    return AbstractComplex(6, facets);
}

AbstractComplex tetrahedron_boundary() { return AbstractComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

AbstractComplex bowtie() { return AbstractComplex(5, {{0, 1, 2}, {0, 3, 4}}); }

// Möbius strip on 5 vertices, acyclic up to a circle.
AbstractComplex moebius() {
    return AbstractComplex(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

long long reduced_euler(const AbstractComplex& c) {
    auto f = fhg_vectors(c).f;
    long long chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? -1 : 1) * f[i];
    return chi;
}

}  // namespace

TEST_CASE("reduced Betti numbers of small complexes") {
    CHECK(reduced_betti(tetrahedron_boundary()) == std::vector<int>{0, 0, 1});
    CHECK(reduced_betti(octahedron()) == std::vector<int>{0, 0, 1});
    CHECK(reduced_betti(AbstractComplex(4, {{0, 1}, {2, 3}})) == std::vector<int>{1, 0});
    CHECK(reduced_betti(moebius()) == std::vector<int>{0, 1, 0});
    CHECK(reduced_betti(AbstractComplex::empty_face(3), -1) == 1);
    CHECK(reduced_betti(AbstractComplex::void_complex(3), -1) == 0);
    CHECK(is_acyclic(AbstractComplex::simplex(4, {0, 1, 2, 3})));
}

TEST_CASE("Betti numbers match the reduced Euler characteristic") {
    for (const auto& c : {tetrahedron_boundary(), octahedron(), bowtie(), moebius()}) {
        long long alt = 0;
        for (int i = -1; i <= c.dimension(); ++i) alt += (i % 2 == 0 ? 1 : -1) * reduced_betti(c, i);
        CHECK(alt == reduced_euler(c));
    }
}

TEST_CASE("chain complexes satisfy boundary of boundary is zero") {
    for (const auto& c : {tetrahedron_boundary(), octahedron(), bowtie(), moebius()}) {
        ChainComplex cc(c);
        for (int i = -1; i <= c.dimension(); ++i) CHECK(cc.reduced_betti(i) == reduced_betti(c, i));
    }
}

TEST_CASE("Reisner criterion and depth") {
    auto t = reisner_cm_check(tetrahedron_boundary());
    CHECK(t.verdict == Verdict::verified);
    auto b = reisner_cm_check(bowtie());
    CHECK(b.verdict == Verdict::violated);
    CHECK(b.witness["face"] == Json::array({0}));
    CHECK(b.witness["degree"] == 0);
    CHECK(b.witness["link_betti"] == 1);
    for (const auto& c : {tetrahedron_boundary(), octahedron(), bowtie(), moebius(),
                          AbstractComplex(4, {{0, 1, 2}, {2, 3}})}) {
        CHECK(depth_by_links(c) == depth_by_skeleta(c));
        CHECK(is_cohen_macaulay(c) == (depth_by_links(c) == c.dimension() + 1));
    }
    CHECK(depth_by_links(bowtie()) == 2);
    CHECK_FALSE(is_cohen_macaulay(AbstractComplex(4, {{0, 1, 2}, {2, 3}})));
}

TEST_CASE("resolution chordality per cycle") {
    AbstractComplex square(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Chain z{{{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{0, 3}, -1}};
    CHECK_FALSE(resolve_cycle(square, 1, z).resolvable);

    auto tb = tetrahedron_boundary();
    Chain z4{{{0, 1}, 1}, {{0, 3}, -1}, {{1, 2}, 1}, {{2, 3}, 1}};
    auto res = resolve_cycle(tb, 1, z4);
    REQUIRE(res.resolvable);
    CHECK(boundary(res.filling) == z4);

    Chain not_cycle{{{0, 1}, 1}};
    CHECK_THROWS_AS(resolve_cycle(tb, 1, not_cycle), std::invalid_argument);
}

TEST_CASE("resolution chordality sweep") {
    CHECK(resolution_chordal_check(tetrahedron_boundary(), 1).verdict == Verdict::verified);
    auto oct = resolution_chordal_check(octahedron(), 1);
    CHECK(oct.verdict == Verdict::violated);
    CHECK(oct.witness["vertex_set"].size() == 4);
    CHECK(resolution_chordal_check(octahedron(), 1, std::nullopt, 3).verdict == Verdict::inconclusive);
}

TEST_CASE("subset Betti maximum") {
    auto m = max_induced_betti(octahedron(), 1);
    CHECK(m.value == 1);
    CHECK(m.subsets == 64);
    CHECK(max_induced_betti(tetrahedron_boundary(), 1).value == 0);
    CHECK_THROWS_AS(max_induced_betti(octahedron(), 1, {}, 4), CapExceeded);
}
