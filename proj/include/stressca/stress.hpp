#ifndef STRESSCA_STRESS_HPP
#define STRESSCA_STRESS_HPP

#include "stressca/complex.hpp"
#include "stressca/linalg.hpp"
#include "stressca/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stressca {

/// Monomial as the sorted multiset of its variables: x_0^2 x_3 is {0, 0, 3}.
using Monomial = std::vector<int>;

Face monomial_support(const Monomial& m);
/// Exponent vector of length n.
std::vector<int> exponents(const Monomial& m, int n);

/// Where stresses live: monomials supported on faces of `outer` but not of
/// `inner`, with Θ given by the rows of `coords`.
struct StressDomain {
    AbstractComplex outer;
    std::optional<AbstractComplex> inner;
    MatrixQ coords;

    bool admits(Face support) const { return outer.contains(support) && !(inner && inner->contains(support)); }
    int ground_size() const { return outer.ground_size(); }
    int ambient_dim() const { return static_cast<int>(coords.rows()); }
};

StressDomain domain_of(const GeometricComplex& g);
StressDomain domain_of(const GeometricComplex& g, const AbstractComplex& inner);
/// Same coordinates, combinatorics taken from `rel`.
StressDomain domain_of(const GeometricComplex& g, const RelativeComplex& rel);
/// Same coordinates, a different (absolute) complex.
StressDomain domain_of(const GeometricComplex& g, const AbstractComplex& outer, std::nullopt_t);

/// Degree-k monomials admitted by the domain, graded lexicographic.
std::vector<Monomial> monomial_basis(const StressDomain& dom, int k);

/// Homogeneous polynomial of degree `degree`, terms sorted by monomial.
struct Stress {
    int degree = 0;
    std::vector<std::pair<Monomial, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    /// γ^(0): vertices occurring in some nonzero term.
    Face vertex_support() const;
    Rational coeff(const Monomial& m) const;
};

Stress add_scaled(const Stress& a, const Stress& b, const Rational& s);
Stress scaled(const Stress& a, const Rational& s);
/// Complex generated by the supports of the nonzero terms.
AbstractComplex support(const Stress& s, int ground_size);

struct StressSpace {
    int degree = 0;
    std::vector<Monomial> basis;   // ambient monomials
    std::vector<Stress> generators;  // a basis of S_k
    std::optional<bool> proper;     // set when computed from a GeometricComplex

    int dim() const { return static_cast<int>(generators.size()); }
};

/// S_k = ker Θ∨ on the admitted degree-k monomials (Θ∨ followed by projection
/// onto admitted monomials in the relative case). Empty for k < 0.
StressSpace stress_space(const StressDomain& dom, int k);
StressSpace stress_space(const GeometricComplex& g, int k,
                         const std::optional<AbstractComplex>& relative_to = std::nullopt);

/// The operator c(d/dx) for a coefficient vector c over the vertices.
struct LinearDifferential {
    VectorQ c;
    std::string name;

    static LinearDifferential ones(int n);
    static LinearDifferential vertex(int n, int v);
    static LinearDifferential subset(int n, Face w);
    /// δ_c: sum over the vertices of one color.
    static LinearDifferential color(int n, const Coloring& colors, int c);
    /// Integer coefficients uniform in [-bound, bound] from mt19937_64(seed).
    static LinearDifferential generic(int n, std::uint64_t seed, int bound = 1000);
    static LinearDifferential from_row(const MatrixQ& coords, int row, std::string name);

    Json to_json() const;
};

/// c∨γ, projected onto admitted monomials when `dom` is given.
Stress apply_differential(const LinearDifferential& c, const Stress& s, const StressDomain* dom = nullptr);
Stress apply_power(const LinearDifferential& c, int power, const Stress& s, const StressDomain* dom = nullptr);

/// Assigns coordinates to monomials so stresses can be fed to exact linear algebra.
class MonomialIndex {
public:
    int id(const Monomial& m);
    int size() const { return static_cast<int>(ids_.size()); }
    linalg::RationalVector vector(const Stress& s);
    std::vector<linalg::RationalVector> vectors(const std::vector<Stress>& s);

private:
    std::map<Monomial, int> ids_;
};

int span_dim(const std::vector<Stress>& stresses);
bool spans_contain(const std::vector<Stress>& space, const std::vector<Stress>& sub);

struct MapRank {
    int source_dim = 0;
    int target_dim = 0;
    int rank = 0;
    std::vector<Stress> kernel;  // filled on request

    int kernel_dim() const { return source_dim - rank; }
    int coker_dim() const { return target_dim - rank; }
    bool injective() const { return kernel_dim() == 0; }
    bool surjective() const { return coker_dim() == 0; }
    Json to_json() const;
};

/// Rank of c^power on `source`, whose image lies in `target`.
MapRank map_rank(const LinearDifferential& c, const StressSpace& source, const StressSpace& target,
                 const StressDomain& dom, bool want_kernel = false, int power = 1);
/// ω: S_k → S_{k-1} on the given domain.
MapRank differential_rank(const StressDomain& dom, const LinearDifferential& c, int k, bool want_kernel = false);

// Minkowski weights ---------------------------------------------------------

struct MinkowskiWeight {
    int degree = 0;
    std::vector<std::pair<Face, Rational>> values;  // on (degree-1)-faces, sorted, no zeros
    bool is_zero() const { return values.empty(); }
};

/// ϱ: keeps the squarefree terms of γ. Requires a d-dimensional complex in R^d.
MinkowskiWeight squarefree_restriction(const StressDomain& dom, const Stress& s);
/// Weights on relative (k-1)-faces satisfying the balancing condition at
/// every relative (k-2)-face τ. Throws std::domain_error naming an improper τ.
std::vector<MinkowskiWeight> minkowski_weight_space(const StressDomain& dom, int k);
bool satisfies_balancing(const StressDomain& dom, const MinkowskiWeight& w);

// Cone lemmas and partitions of unity ---------------------------------------

/// Lk_v Δ with every vertex w mapped to its orthogonal projection onto v^⊥,
/// written in a basis of v^⊥ (ambient dimension d-1).
GeometricComplex projected_link(const GeometricComplex& g, int v);
Report cone_lemma_check(const GeometricComplex& g, int v, int k);

struct ShellingSearch {
    enum class Status { found, none_exists, inconclusive } status = Status::inconclusive;
    std::vector<Face> order;
    long long steps = 0;
};

/// Message naming the first step whose facet meets the later facets in
/// something other than a pure codimension-one complex or nothing.
std::optional<std::string> shelling_violation(const AbstractComplex& complex, const std::vector<Face>& order);
ShellingSearch shelling_search(const AbstractComplex& complex, long long step_limit = 2'000'000);

Report partition_of_unity_check(const GeometricComplex& g, int k, const std::vector<Face>& shelling);
/// Expects a proper embedding in R^{d-1}; callers project first when needed.
Report balanced_partition_check(const GeometricComplex& g, int color);

/// ω^{d-2k}: S_{d-k} → S_k invertible for all k <= d/2, d = ambient dimension.
Report lefschetz_check(const GeometricComplex& g, const LinearDifferential& w);

Json stress_to_json(const Stress& s, int ground_size);
/// Monomials are exponent lists indexed by vertex position.
Stress stress_from_json(const Json& j, int ground_size, int degree);

}  // namespace stressca

#endif  // STRESSCA_STRESS_HPP
