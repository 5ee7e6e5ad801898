#include <doctest.h>

#include "stressca/generators.hpp"
#include "stressca/stress.hpp"

using namespace stressca;

namespace {

// h from face counts: h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}.
std::vector<long long> h_oracle(const AbstractComplex& c) {
    const int d = c.dimension() + 1;
    std::vector<long long> f{1};
    for (int i = 0; i < d; ++i) f.push_back(static_cast<long long>(c.faces(i).size()));
    auto choose = [](long long n, long long r) {
        long long out = 1;
        for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
        return out;
    };
    std::vector<long long> h;
    for (int k = 0; k <= d; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) s += ((k - i) % 2 == 0 ? 1 : -1) * choose(d - i, k - i) * f[static_cast<std::size_t>(i)];
        h.push_back(s);
    }
    return h;
}

std::vector<long long> stress_dims(const GeometricComplex& g) {
    std::vector<long long> out;
    for (int k = 0; k <= g.ambient_dim(); ++k) out.push_back(stress_space(g, k).dim());
    return out;
}

GeometricComplex solid_tetrahedron() {
    MatrixQ coords(3, 4);
    coords << 1, 0, 0, -1,
              0, 1, 0, -1,
              0, 0, 1, -1;
    return GeometricComplex(AbstractComplex::simplex(4, Face::range(4)), coords);
}

GeometricComplex square() {
    MatrixQ coords(2, 4);
    coords << 1, -1, 0, 0,
              0, 0, 1, -1;
    return GeometricComplex(AbstractComplex(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}), coords);
}

}  // namespace

TEST_CASE("stress dimensions of proper spheres equal the h-vector") {
    std::vector<GeometricComplex> spheres{gen_simplex_boundary(2), gen_simplex_boundary(3), gen_simplex_boundary(4),
                                          gen_cross_polytope_boundary(3), gen_cross_polytope_boundary(4),
                                          gen_cyclic_boundary(4, 6), gen_stacked_boundary(3, 6)};
    for (const auto& g : spheres) CHECK(stress_dims(g) == h_oracle(g.complex()));
    CHECK(stress_space(gen_cross_polytope_boundary(3), 1).dim() == 3);
    CHECK(stress_space(gen_simplex_boundary(3), 2).dim() == 1);
    CHECK(stress_space(gen_simplex_boundary(3), -1).dim() == 0);
}

TEST_CASE("stress generators are annihilated by the coordinate differentials") {
    auto g = gen_cross_polytope_boundary(3);
    auto dom = domain_of(g);
    for (int k = 1; k <= 3; ++k) {
        auto s = stress_space(dom, k);
        for (const auto& gen : s.generators)
            for (int row = 0; row < 3; ++row)
                CHECK(apply_differential(LinearDifferential::from_row(g.coords(), row, "theta"), gen).is_zero());
    }
}

TEST_CASE("differentials commute and preserve stresses") {
    auto g = gen_cyclic_boundary(4, 6);
    auto dom = domain_of(g);
    const int n = g.ground_size();
    auto s2 = stress_space(dom, 2);
    auto s1 = stress_space(dom, 1);
    auto a = LinearDifferential::ones(n);
    auto b = LinearDifferential::generic(n, 7);
    for (const auto& gen : s2.generators) {
        auto ab = apply_differential(a, apply_differential(b, gen));
        auto ba = apply_differential(b, apply_differential(a, gen));
        CHECK(add_scaled(ab, ba, -1).is_zero());
        CHECK(spans_contain(s1.generators, {apply_differential(b, gen)}));
    }
    CHECK(LinearDifferential::generic(n, 7).c == b.c);
}

TEST_CASE("Minkowski weights") {
    auto sq = square();
    CHECK(minkowski_weight_space(domain_of(sq), 2).size() == 1);

    auto tet = solid_tetrahedron();
    auto dom = domain_of(tet);
    for (int k = 0; k <= 4; ++k) {
        auto weights = minkowski_weight_space(dom, k);
        auto s = stress_space(dom, k);
        CHECK(static_cast<int>(weights.size()) == s.dim());
        for (const auto& gen : s.generators) {
            auto w = squarefree_restriction(dom, gen);
            CHECK(satisfies_balancing(dom, w));
            CHECK_FALSE(w.is_zero());
        }
    }
    CHECK_THROWS_AS(squarefree_restriction(domain_of(sq), stress_space(sq, 1).generators.at(0)), std::invalid_argument);
}

TEST_CASE("cone lemma on cross-polytopes") {
    auto oct = gen_cross_polytope_boundary(3);
    for (int k = 0; k <= 2; ++k) CHECK(cone_lemma_check(oct, 0, k).verdict == Verdict::verified);
    auto c4 = gen_cross_polytope_boundary(4);
    CHECK(cone_lemma_check(c4, 3, 1).verdict == Verdict::verified);
    auto r = cone_lemma_check(oct, 0, 1);
    CHECK(r.ranks["dim_projected_link"] == 2);
}

TEST_CASE("shelling search") {
    auto oct = gen_cross_polytope_boundary(3).complex();
    auto found = shelling_search(oct);
    REQUIRE(found.status == ShellingSearch::Status::found);
    CHECK_FALSE(shelling_violation(oct, found.order).has_value());
    CHECK(found.order.size() == oct.facets().size());

    auto bow = gen_bowtie().complex();
    CHECK(shelling_search(bow).status == ShellingSearch::Status::none_exists);
    CHECK(shelling_violation(bow, bow.facets()).has_value());
    CHECK(shelling_search(oct, 1).status != ShellingSearch::Status::none_exists);
}

TEST_CASE("partition of unity and Lefschetz") {
    auto oct = gen_cross_polytope_boundary(3);
    auto order = shelling_search(oct.complex()).order;
    for (int k = 0; k <= 2; ++k) CHECK(partition_of_unity_check(oct, k, order).verdict == Verdict::verified);
    CHECK(partition_of_unity_check(oct, 3, order).verdict == Verdict::hypotheses_not_met);

    auto w = LinearDifferential::generic(oct.ground_size(), 3);
    CHECK(lefschetz_check(oct, w).verdict == Verdict::verified);
    CHECK(lefschetz_check(gen_cyclic_boundary(4, 7), LinearDifferential::generic(7, 11)).verdict == Verdict::verified);
}

TEST_CASE("balanced partition on the square") {
    auto sq = gen_cross_polytope_boundary(2);
    CHECK(balanced_partition_check(sq, 1).verdict == Verdict::hypotheses_not_met);
    auto oct = gen_cross_polytope_boundary(3);
    auto flat = generic_projection(oct, 2, 5);
    for (int c = 1; c <= 3; ++c) CHECK(balanced_partition_check(flat, c).verdict == Verdict::verified);
}

TEST_CASE("stress JSON round trip") {
    auto g = gen_cross_polytope_boundary(3);
    auto s = stress_space(g, 2);
    for (const auto& gen : s.generators) {
        auto back = stress_from_json(stress_to_json(gen, 6), 6, 2);
        CHECK(add_scaled(back, gen, -1).is_zero());
    }
}
