#include <doctest.h>

#include "stressca/complex.hpp"

using namespace stressca;

namespace {

// Vertex 2i is +e_i, vertex 2i+1 is -e_i.
AbstractComplex octahedron() {
    std::vector<Face> facets;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) facets.push_back({a, 2 + b, 4 + c});
    return AbstractComplex(6, facets);
}

AbstractComplex tetrahedron_boundary() { return AbstractComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

AbstractComplex four_cycle() { return AbstractComplex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_CASE("vertex sets order shortlex") {
    CHECK(Face{} < Face{5});
    CHECK(Face{5} < Face{0, 1});
    CHECK(Face{0, 2} < Face{1, 2});
    CHECK(Face{0, 3} < Face{1, 2});
    CHECK_FALSE(Face{1, 2} < Face{1, 2});
    CHECK(Face{3, 1, 2}.elements() == std::vector<int>{1, 2, 3});
    CHECK_THROWS(Face{64});
}

TEST_CASE("canonicalization drops redundant facets") {
    AbstractComplex c(4, {{0, 1, 2}, {0, 1}, {0, 1, 2}, {3}});
    CHECK(c.facets().size() == 2);
    CHECK(c.dropped_facets() == 2);
    CHECK(c.dimension() == 2);
    CHECK_FALSE(c.is_pure());
    CHECK(c.contains(Face{1, 2}));
    CHECK_FALSE(c.contains(Face{1, 3}));
    CHECK(AbstractComplex::void_complex(3).dimension() == -2);
    CHECK(AbstractComplex::empty_face(3).dimension() == -1);
    CHECK_THROWS(AbstractComplex(3, {{0, 5}}));
}

TEST_CASE("star") {
    auto oct = octahedron();
    CHECK(star(oct, {0}).facets().size() == 4);
    CHECK(star(oct, {}) == oct);
    auto s = star(tetrahedron_boundary(), {0, 1});
    CHECK(s.facets() == std::vector<Face>{{0, 1, 2}, {0, 1, 3}});
    CHECK_THROWS_AS(star(oct, {0, 1}), std::domain_error);
}

TEST_CASE("link") {
    auto oct = octahedron();
    CHECK(link(oct, {0}) == AbstractComplex(6, {{2, 4}, {2, 5}, {3, 4}, {3, 5}}));
    CHECK(link(oct, {0, 2, 4}) == AbstractComplex::empty_face(6));
    CHECK(link(tetrahedron_boundary(), {0}) == AbstractComplex(4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK_THROWS_AS(link(oct, {0, 1}), std::domain_error);
}

TEST_CASE("open star relative faces") {
    auto os = open_star(tetrahedron_boundary(), 0);
    for (int dim = -1; dim <= 2; ++dim)
        for (Face f : os.relative_faces(dim)) CHECK(f.contains(0));
    CHECK(os.relative_faces(0).size() + os.relative_faces(1).size() + os.relative_faces(2).size() == 7);

    auto oct = open_star(octahedron(), 0);
    CHECK(oct.relative_faces(0).size() == 1);
    CHECK(oct.relative_faces(1).size() == 4);
    CHECK(oct.relative_faces(2).size() == 4);

    AbstractComplex path(3, {{0, 1}, {1, 2}});
    auto ps = open_star(path, 1);
    CHECK(ps.relative_faces(0) == std::vector<Face>{{1}});
    CHECK(ps.relative_faces(1) == std::vector<Face>{{0, 1}, {1, 2}});
    CHECK(ps.induced);
}

TEST_CASE("clique complexes") {
    CHECK(clique_complex(four_cycle(), 2) == four_cycle());
    AbstractComplex k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(clique_complex(k4, 2) == AbstractComplex::simplex(4, {0, 1, 2, 3}));
    CHECK(clique_complex(tetrahedron_boundary(), 2) == AbstractComplex::simplex(4, {0, 1, 2, 3}));
    CHECK(clique_complex(tetrahedron_boundary(), 3) == AbstractComplex::simplex(4, {0, 1, 2, 3}));
    CHECK(clique_complex(tetrahedron_boundary(), 4) == tetrahedron_boundary());
    CHECK(clique_complex(octahedron(), 2) == octahedron());
    Coloring colors{1, 1, 2, 2, 3, 3};
    CHECK(clique_complex(octahedron(), 1, &colors) == octahedron());
    CHECK(clique_complex(octahedron(), 1) == AbstractComplex::simplex(6, Face::range(6)));
}

TEST_CASE("clique closure is idempotent") {
    for (const auto& c : {four_cycle(), octahedron(), tetrahedron_boundary()})
        for (int k = 1; k <= 3; ++k) {
            auto once = clique_complex(c, k);
            CHECK(clique_complex(once, k) == once);
        }
}

TEST_CASE("missing faces") {
    CHECK(missing_faces(four_cycle(), 1, 1) == std::vector<Face>{{0, 2}, {1, 3}});
    CHECK(missing_faces(octahedron(), 0, 5) == std::vector<Face>{{0, 1}, {2, 3}, {4, 5}});
    for (int d = 1; d <= 5; ++d) {
        std::vector<Face> facets;
        for (int v = 0; v <= d; ++v) facets.push_back(Face::range(d + 1).without(v));
        CHECK(missing_faces(AbstractComplex(d + 1, facets), 0, d + 2) == std::vector<Face>{Face::range(d + 1)});
    }
}

TEST_CASE("no missing faces above k iff the clique closure of the k-skeleton is the complex") {
    for (const auto& c : {four_cycle(), octahedron(), tetrahedron_boundary()})
        for (int k = 0; k <= c.dimension() + 1; ++k) {
            bool none_above = missing_faces(c, k + 1, c.dimension() + 1).empty();
            CHECK(none_above == (clique_complex(skeleton(c, k), k + 1) == c));
        }
}

TEST_CASE("f, h and g vectors") {
    auto t = fhg_vectors(tetrahedron_boundary());
    CHECK(t.f == std::vector<long long>{1, 4, 6, 4});
    CHECK(*t.h == std::vector<long long>{1, 1, 1, 1});
    CHECK(*t.g == std::vector<long long>{1, 0, 0, 0});
    auto o = fhg_vectors(octahedron());
    CHECK(o.f == std::vector<long long>{1, 6, 12, 8});
    CHECK(*o.h == std::vector<long long>{1, 3, 3, 1});
    CHECK(*o.g == std::vector<long long>{1, 2, 0, -2});
    CHECK(f_from_h(*o.h) == o.f);
    CHECK_FALSE(fhg_vectors(AbstractComplex(4, {{0, 1, 2}, {3}})).h.has_value());
}

TEST_CASE("links of pure complexes drop one dimension") {
    for (const auto& c : {four_cycle(), octahedron(), tetrahedron_boundary()})
        for (int v : c.vertices()) CHECK(link(c, Face::singleton(v)).dimension() == c.dimension() - 1);
}

TEST_CASE("balanced colorings and properness") {
    CHECK(is_balanced(octahedron(), {1, 1, 2, 2, 3, 3}));
    CHECK_FALSE(is_balanced(octahedron(), {1, 2, 1, 2, 3, 3}));
    CHECK(color_class(octahedron(), {1, 1, 2, 2, 3, 3}, {1, 3}) == Face{0, 1, 4, 5});

    MatrixQ collinear(2, 3);
    collinear << 1, 2, 3, 1, 2, 3;
    GeometricComplex bad(AbstractComplex(3, {{0, 1}, {1, 2}, {0, 2}}), collinear);
    CHECK(improper_face(bad) == Face{0, 1});
    MatrixQ square(2, 4);
    square << 1, 0, -1, 0, 0, 1, 0, -1;
    CHECK(is_proper(GeometricComplex(four_cycle(), square)));
}
