#include <doctest.h>

#include "stressca/generators.hpp"
#include "stressca/homology.hpp"

using namespace stressca;

TEST_CASE("generator face counts") {
    CHECK(gen_simplex_boundary(4).complex().facets().size() == 5);
    CHECK(gen_cross_polytope_boundary(4).complex().facets().size() == 16);
    CHECK(gen_cyclic_boundary(4, 6).complex().facets().size() == 9);
    CHECK(gen_cyclic_boundary(4, 7).complex().facets().size() == 14);
    CHECK(gen_stacked_boundary(4, 7).complex().facets().size() == 11);
    CHECK(gen_stacked_boundary(3, 6).complex().facets().size() == 8);
    CHECK(*fhg_vectors(gen_cross_polytope_boundary(4).complex()).h == std::vector<long long>{1, 4, 6, 4, 1});
    CHECK(*fhg_vectors(gen_cyclic_boundary(4, 7).complex()).h == std::vector<long long>{1, 3, 6, 3, 1});
    CHECK(*fhg_vectors(gen_stacked_boundary(4, 8).complex()).h == std::vector<long long>{1, 4, 4, 4, 1});
}

TEST_CASE("generated spheres are proper homology spheres") {
    for (const auto& g : {gen_simplex_boundary(3), gen_cross_polytope_boundary(3), gen_cyclic_boundary(4, 7),
                          gen_stacked_boundary(4, 7), gen_stacked_boundary(3, 6)}) {
        CHECK(is_proper(g));
        auto b = reduced_betti(g.complex());
        std::vector<int> sphere(static_cast<std::size_t>(g.ambient_dim()), 0);
        sphere.back() = 1;
        CHECK(b == sphere);
    }
    auto cross = gen_cross_polytope_boundary(4);
    CHECK(is_balanced(cross.complex(), *cross.coloring()));
}

TEST_CASE("generic projections are deterministic and proper") {
    auto oct = gen_cross_polytope_boundary(3);
    auto a = generic_projection(oct, 2, 42);
    auto b = generic_projection(oct, 2, 42);
    CHECK(a.coords() == b.coords());
    CHECK(a.ambient_dim() == 2);
    CHECK(is_proper(a));
    CHECK_THROWS_AS(generic_projection(oct, 4, 1), std::invalid_argument);
}

TEST_CASE("isomorphism search") {
    auto oct = gen_cross_polytope_boundary(3).complex();
    std::vector<Face> relabeled;
    for (Face f : oct.facets()) {
        Face g;
        for (int v : f) g.insert(5 - v);
        relabeled.push_back(g);
    }
    AbstractComplex other(6, relabeled);
    auto iso = find_isomorphism(oct, other);
    REQUIRE(iso);
    CHECK(is_cross_polytope_boundary(oct));
    CHECK_FALSE(is_cross_polytope_boundary(gen_cyclic_boundary(3, 6).complex()));
    CHECK_FALSE(find_isomorphism(oct, gen_simplex_boundary(3).complex()));
}

TEST_CASE("k-stacked triangulations") {
    auto stacked = k_stacked_triangulation(gen_stacked_boundary(4, 7), 2);
    CHECK(stacked.report.verdict == Verdict::verified);
    CHECK(stacked.complex.dimension() == 4);
    CHECK(stacked.complex.facets().size() == 3);
    auto simplex = k_stacked_triangulation(gen_simplex_boundary(4), 1);
    CHECK(simplex.report.verdict == Verdict::verified);
    CHECK(simplex.complex.facets().size() == 1);
    CHECK(k_stacked_triangulation(gen_stacked_boundary(4, 7), 1).report.verdict == Verdict::hypotheses_not_met);
    CHECK(k_stacked_triangulation(gen_cyclic_boundary(4, 7), 2).report.verdict == Verdict::hypotheses_not_met);
    auto oct = k_stacked_triangulation(gen_cross_polytope_boundary(4), 2);
    CHECK(oct.report.verdict == Verdict::hypotheses_not_met);
}

TEST_CASE("balanced clique complexes") {
    auto oct = balanced_clique_complex(gen_cross_polytope_boundary(3), 1);
    CHECK(oct.report.verdict == Verdict::verified);
    CHECK(oct.complex.ground_size() == 7);
    CHECK(oct.complex.complex().facets().size() == 8);
    auto cross = balanced_clique_complex(gen_cross_polytope_boundary(4), 2);
    CHECK(cross.report.verdict == Verdict::verified);
    CHECK(cross.complex.complex().dimension() == 4);
}

TEST_CASE("bipyramid split") {
    auto cut = gen_bipyramid_split();
    CHECK(complex_union(cut.part1, cut.part2) == cut.whole.complex());
    auto mid = complex_intersection(cut.part1, cut.part2);
    CHECK(mid.dimension() == 1);
    CHECK(mid.facets().size() == 4);
}
