#ifndef STRESSCA_HOMOLOGY_HPP
#define STRESSCA_HOMOLOGY_HPP

#include "stressca/complex.hpp"
#include "stressca/linalg.hpp"
#include "stressca/report.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stressca {

/// Simplicial chain over Q: (face, coefficient) pairs sorted by face, no zeros.
using Chain = std::vector<std::pair<Face, Rational>>;

/// ∂ from C_dim to C_{dim-1} with the reduced convention (∂ of a vertex is ∅).
/// Rows index `lower`, columns index `upper`; both lists sorted shortlex.
linalg::IntegerMatrix boundary_matrix(const std::vector<Face>& upper, const std::vector<Face>& lower);

/// Augmented chain complex of Δ. Construction asserts ∂∂ = 0 in every degree.
class ChainComplex {
public:
    explicit ChainComplex(const AbstractComplex& complex);
    int top_dim() const { return top_; }
    const std::vector<Face>& basis(int dim) const;
    /// ∂_dim : C_dim → C_{dim-1}, for -1 <= dim <= top_dim().
    const linalg::IntegerMatrix& boundary(int dim) const;
    int reduced_betti(int dim) const;

private:
    AbstractComplex complex_;
    int top_ = -2;
    std::vector<linalg::IntegerMatrix> boundaries_;  // index dim + 1
};

Chain boundary(const Chain& chain);

/// β̃_i(Δ). Defined for every i >= -1: β̃_{-1}({∅}) = 1, and 0 for the void complex.
int reduced_betti(const AbstractComplex& complex, int i);
/// (β̃_0, ..., β̃_dim).
std::vector<int> reduced_betti(const AbstractComplex& complex);
/// β̃_i(Δ_W) computed straight from the face lists of Δ.
int induced_reduced_betti(const AbstractComplex& complex, Face w, int i);
bool is_acyclic(const AbstractComplex& complex);

// Cohen-Macaulay property -------------------------------------------------

/// First (σ, i) with H̃_i(Lk σ) ≠ 0 and i < t - |σ| - 1, or nullopt when Δ has depth >= t.
std::optional<std::pair<Face, int>> depth_violation(const AbstractComplex& complex, int t);
/// Depth from link homology.
int depth_by_links(const AbstractComplex& complex);
/// Depth as the largest t whose (t-1)-skeleton is Cohen-Macaulay.
int depth_by_skeleta(const AbstractComplex& complex);
bool is_cohen_macaulay(const AbstractComplex& complex);
Report reisner_cm_check(const AbstractComplex& complex, const std::vector<int>& labels = {});

// Resolution chordality ----------------------------------------------------

struct CycleResolution {
    bool resolvable = false;
    Chain filling;  // ∂ filling = z, supported on Δ restricted to the vertices of z
};

/// Decides whether a k-cycle bounds inside the induced subcomplex on its own vertices.
/// Throws std::invalid_argument when z is not a cycle of Δ.
CycleResolution resolve_cycle(const AbstractComplex& complex, int k, const Chain& z);

/// Thrown when a subset enumeration would exceed the configured cap.
struct CapExceeded : std::runtime_error {
    int required;
    int cap;
    CapExceeded(int required_vertices, int cap_vertices);
};

/// Per-cycle mode when `z` is given, otherwise the induced-subcomplex sweep
/// (needs #vertices <= cap, else "inconclusive").
Report resolution_chordal_check(const AbstractComplex& complex, int k, const std::optional<Chain>& z = std::nullopt,
                                int cap = 14, const std::vector<int>& labels = {});

struct SubsetBettiMax {
    int value = 0;
    Face argmax;
    long long subsets = 0;
};

/// max over W ⊆ Δ^(0) ∖ always of β̃_i(Δ_{W ∪ always}). Throws CapExceeded.
SubsetBettiMax max_induced_betti(const AbstractComplex& complex, int i, Face always = {}, int cap = 14);

Json chain_to_json(const Chain& chain, const std::vector<int>& labels);

}  // namespace stressca

#endif  // STRESSCA_HOMOLOGY_HPP
