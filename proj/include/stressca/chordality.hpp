#ifndef STRESSCA_CHORDALITY_HPP
#define STRESSCA_CHORDALITY_HPP

#include "stressca/complex.hpp"
#include "stressca/report.hpp"
#include "stressca/stress.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace stressca {

/// dim S_0, ..., dim S_top.
std::vector<long long> stress_dims(const GeometricComplex& g, int top);
/// g_i = dim S_i - dim S_{i-1}, with dim S_{-1} = 0.
long long stress_g(const std::vector<long long>& dims, int i);
/// ((k+1) g_{k+1} + (d+1-k) g_k)_+
long long bad_set_bound(const GeometricComplex& g, int k);

/// True when the complex is a pure (d-1)-dimensional rational homology sphere in R^d.
bool is_homology_sphere_in_ambient(const GeometricComplex& g);

struct StarMap {
    int vertex = 0;
    MapRank map;  // ω: S_k(St_v) → S_{k-1}(St_v)
};

struct ChordalityCertificate {
    int k = 0;
    LinearDifferential omega;
    MapRank surjection;  // S_{k+1} → S_k
    MapRank injection;   // S_k → S_{k-1}, kernel filled
    std::vector<StarMap> stars;
    Face bad;
    long long g_k = 0;
    long long g_k1 = 0;
    long long bound = 0;

    bool toric() const { return surjection.surjective() && injection.injective(); }
    bool weak() const { return bad.empty(); }
    Json to_json(const GeometricComplex& g) const;
};

ChordalityCertificate certify_toric_chordal(const GeometricComplex& g, int k, const LinearDifferential& omega,
                                            bool with_stars = true);
/// Vertices v where ω: S_k(St_v) → S_{k-1}(St_v) has a kernel.
Face weak_chordality_bad_set(const GeometricComplex& g, int k, const LinearDifferential& omega);

Report certify_chordal_check(const GeometricComplex& g, int k, const LinearDifferential& omega);
/// Bad-set bound plus the support sandwich on `samples` seeded stresses of degree k+1.
Report weak_bad_set_check(const GeometricComplex& g, int k, const LinearDifferential& omega, std::uint64_t seed,
                          int samples = 20);
/// γ^(0) ∖ bad ⊆ (ωγ)^(0) ⊆ γ^(0) for γ of degree k+1. Throws std::invalid_argument on a degree mismatch.
Report support_preservation_check(const GeometricComplex& g, int k, const LinearDifferential& omega,
                                  const Stress& gamma, Face bad);
/// Random integer combination of the basis of S_degree.
Stress random_stress(const StressSpace& space, std::uint64_t seed, int bound = 10);

Report mcmullen_integral_check(const GeometricComplex& g, int k);
Report propagation_verify(const GeometricComplex& g, int k, const LinearDifferential& omega);
Report kernel_vanishing_check(const GeometricComplex& g, int k, const LinearDifferential& omega);
Report cohen_macaulay_corollary_check(const GeometricComplex& g, int k, const LinearDifferential& omega);

/// Appends the coefficients of ψ as a new coordinate row.
GeometricComplex lift_with_differential(const GeometricComplex& g, const LinearDifferential& psi);

/// `whole` carries the coordinates; the parts are subcomplexes covering it.
/// Throws std::invalid_argument if the parts do not cover or meet in a non-induced subcomplex.
Report cut_theorem_check(const GeometricComplex& whole, const AbstractComplex& part1, const AbstractComplex& part2,
                         int k, const LinearDifferential& psi, const LinearDifferential& omega);

Report glbt_check(const GeometricComplex& g, int k, const LinearDifferential& omega);

/// max_W β̃_{k-1}(Δ_W) against -g_{k+1} (2k >= d) and g_k (2k <= d).
Report subset_betti_bound_check(const GeometricComplex& g, int k, int cap = 14);
Report bad_set_betti_check(const GeometricComplex& g, int k, const LinearDifferential& omega, int cap = 14);
/// dim S_d / ω S_{d+1} against β̃_{d-1}.
Report iso_tay_check(const GeometricComplex& g, const LinearDifferential& omega);

/// Δ_S induced on the vertices whose color lies in `colors`, generically
/// projected to R^{|S|}; a generic ω: S_k → S_{k-1} must be onto for k <= (|S|+1)/2.
Report color_surjection_check(const GeometricComplex& g, const std::vector<int>& colors, std::uint64_t seed);

/// Runs `check` with a generic differential from `seed`; a violated verdict
/// triggers one rerun with seed + 1, noted in the report.
Report with_generic_resample(int n, std::uint64_t seed,
                             const std::function<Report(const LinearDifferential&)>& check);

}  // namespace stressca

#endif  // STRESSCA_CHORDALITY_HPP
