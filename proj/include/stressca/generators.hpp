#ifndef STRESSCA_GENERATORS_HPP
#define STRESSCA_GENERATORS_HPP

#include "stressca/complex.hpp"
#include "stressca/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stressca {

/// ∂Δ^d on e_1, ..., e_d and -(1, ..., 1).
GeometricComplex gen_simplex_boundary(int d);
/// Vertex 2i is +e_{i+1}, vertex 2i+1 is -e_{i+1}; both carry color i+1.
GeometricComplex gen_cross_polytope_boundary(int d);
/// Moment-curve points at t = 1..n shifted by their centroid; facets by Gale evenness.
GeometricComplex gen_cyclic_boundary(int d, int n);
/// ∂Δ^d stacked n-d-1 times, always on the shortlex-first facet.
GeometricComplex gen_stacked_boundary(int d, int n);
/// Two triangles sharing one vertex, in R^3.
GeometricComplex gen_bowtie();

/// Applies a seeded random integer m×d matrix and retries (up to 10 seeds)
/// until the image is proper. Resamples are appended to `log`.
GeometricComplex generic_projection(const GeometricComplex& g, int m, std::uint64_t seed,
                                    std::vector<std::string>* log = nullptr);

struct StackedTriangulation {
    AbstractComplex complex;
    Report report;
};

/// Cl_k ∂P with the checks: faces of dimension <= d-k lie on the boundary,
/// Cohen-Macaulay, acyclic.
StackedTriangulation k_stacked_triangulation(const GeometricComplex& boundary, int k);

struct BalancedClique {
    GeometricComplex complex;  // centers appended after the original vertices
    Report report;
};

BalancedClique balanced_clique_complex(const GeometricComplex& g, int k);

/// Vertex bijection carrying the facets of a onto those of b, if one exists.
std::optional<std::vector<int>> find_isomorphism(const AbstractComplex& a, const AbstractComplex& b);
bool is_cross_polytope_boundary(const AbstractComplex& c);

struct CutInstance {
    GeometricComplex whole;  // Δ = Δ1 ∪ Δ2
    AbstractComplex part1;
    AbstractComplex part2;
};

/// Octahedron ±e_1, ±e_2, ±e_3 split along the equator square in the z = 0
/// plane: part1 = N * square, part2 = S * square.
CutInstance gen_bipyramid_split();

}  // namespace stressca

#endif  // STRESSCA_GENERATORS_HPP
