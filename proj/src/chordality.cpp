#include "stressca/chordality.hpp"

#include "stressca/generators.hpp"
#include "stressca/homology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace stressca {

std::vector<long long> stress_dims(const GeometricComplex& g, int top) {
    auto dom = domain_of(g);
    std::vector<long long> out;
    for (int k = 0; k <= top; ++k) out.push_back(stress_space(dom, k).dim());
    return out;
}

long long stress_g(const std::vector<long long>& dims, int i) {
    auto at = [&](int j) { return j < 0 || j >= static_cast<int>(dims.size()) ? 0LL : dims[static_cast<std::size_t>(j)]; };
    return at(i) - at(i - 1);
}

long long bad_set_bound(const GeometricComplex& g, int k) {
    const int d = g.ambient_dim();
    auto dims = stress_dims(g, k + 1);
    return std::max(0LL, (k + 1) * stress_g(dims, k + 1) + (d + 1 - k) * stress_g(dims, k));
}

bool is_homology_sphere_in_ambient(const GeometricComplex& g) {
    const auto& c = g.complex();
    const int d = g.ambient_dim();
    if (c.dimension() != d - 1 || !c.is_pure()) return false;
    for (int i = -1; i <= c.dimension(); ++i)
        if (reduced_betti(c, i) != (i == d - 1 ? 1 : 0)) return false;
    return true;
}

namespace {

Json first_missing(const GeometricComplex& g, int dmin, int dmax) {
    auto m = missing_faces(g.complex(), dmin, dmax);
    if (m.empty()) return nullptr;
    return labeled(m.front(), g.labels());
}

}  // namespace

// Certificates ------------------------------------------------------------------

Json ChordalityCertificate::to_json(const GeometricComplex& g) const {
    Json stars_json = Json::array();
    for (const auto& s : stars) stars_json.push_back({{"vertex", g.label(s.vertex)}, {"kernel_dim", s.map.kernel_dim()}});
    Json out = {{"k", k},
                {"omega", omega.name},
                {"surjection", surjection.to_json()},
                {"injection", injection.to_json()},
                {"toric_chordal", toric()},
                {"g_k", g_k},
                {"g_k_plus_1", g_k1},
                {"bound", bound}};
    if (!stars.empty()) {
        out["weakly_chordal"] = weak();
        out["bad_set"] = labeled(bad, g.labels());
        out["star_maps"] = stars_json;
    }
    return out;
}

ChordalityCertificate certify_toric_chordal(const GeometricComplex& g, int k, const LinearDifferential& omega,
                                            bool with_stars) {
    ChordalityCertificate cert;
    cert.k = k;
    cert.omega = omega;
    auto dom = domain_of(g);
    auto below = stress_space(dom, k - 1);
    auto mid = stress_space(dom, k);
    auto above = stress_space(dom, k + 1);
    cert.surjection = map_rank(omega, above, mid, dom);
    cert.injection = map_rank(omega, mid, below, dom, true);
    cert.g_k = mid.dim() - below.dim();
    cert.g_k1 = above.dim() - mid.dim();
    cert.bound = std::max(0LL, (k + 1) * cert.g_k1 + (g.ambient_dim() + 1 - k) * cert.g_k);
    if (with_stars)
        for (int v : g.complex().vertices()) {
            auto star_dom = domain_of(g, star(g.complex(), Face::singleton(v)), std::nullopt);
            StarMap sm{v, differential_rank(star_dom, omega, k)};
            if (!sm.map.injective()) cert.bad.insert(v);
            cert.stars.push_back(std::move(sm));
        }
    return cert;
}

Face weak_chordality_bad_set(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Face bad;
    for (int v : g.complex().vertices()) {
        auto star_dom = domain_of(g, star(g.complex(), Face::singleton(v)), std::nullopt);
        if (!differential_rank(star_dom, omega, k).injective()) bad.insert(v);
    }
    return bad;
}

Report certify_chordal_check(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Report r;
    r.theorem = "certify-chordal";
    r.require("proper realization", is_proper(g));
    auto cert = certify_toric_chordal(g, k, omega);
    r.ranks["certificate"] = cert.to_json(g);
    Json w = Json::object();
    if (!cert.injection.injective()) w["kernel_vector"] = stress_to_json(cert.injection.kernel.front(), g.ground_size());
    if (!cert.surjection.surjective()) w["cokernel_dim"] = cert.surjection.coker_dim();
    if (!w.empty()) r.witness = w;
    r.conclude(cert.toric());
    return r;
}

Stress random_stress(const StressSpace& space, std::uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    Stress s;
    s.degree = space.degree;
    for (const auto& gen : space.generators) s = add_scaled(s, gen, Rational(dist(rng)));
    return s;
}

Report support_preservation_check(const GeometricComplex& g, int k, const LinearDifferential& omega,
                                  const Stress& gamma, Face bad) {
    if (gamma.degree != k + 1 && !gamma.is_zero())
        throw std::invalid_argument("stress of degree " + std::to_string(gamma.degree) + " given, expected " +
                                    std::to_string(k + 1));
    Report r;
    r.theorem = "support-preservation";
    const Face before = gamma.vertex_support();
    const Face after = apply_differential(omega, gamma).vertex_support();
    const bool upper = before.contains(after);
    const bool lower = after.contains(before - bad);
    r.ranks["support"] = labeled(before, g.labels());
    r.ranks["image_support"] = labeled(after, g.labels());
    r.ranks["relation"] = before == after ? "equal" : upper ? "subset" : "other";
    if (!(upper && lower)) r.witness = {{"lost", labeled(before - bad - after, g.labels())}, {"gained", labeled(after - before, g.labels())}};
    r.conclude(upper && lower && (!bad.empty() || before == after));
    return r;
}

Report weak_bad_set_check(const GeometricComplex& g, int k, const LinearDifferential& omega, std::uint64_t seed,
                          int samples) {
    Report r;
    r.theorem = "weak-bad-set";
    r.require("proper realization", is_proper(g));
    r.require("homology sphere of dimension d-1 in R^d", is_homology_sphere_in_ambient(g));
    auto cert = certify_toric_chordal(g, k, omega);
    const long long count = cert.bad.size();
    r.ranks["bad_set"] = labeled(cert.bad, g.labels());
    r.ranks["bad_count"] = count;
    r.ranks["bound"] = cert.bound;
    r.ranks["g_k"] = cert.g_k;
    r.ranks["g_k_plus_1"] = cert.g_k1;

    auto space = stress_space(domain_of(g), k + 1);
    std::vector<Stress> tests = space.generators;
    for (int i = 0; i < samples && space.dim() > 0; ++i) tests.push_back(random_stress(space, seed + static_cast<std::uint64_t>(i)));
    int failures = 0;
    int equal = 0;
    Json first_failure;
    for (const auto& s : tests) {
        auto sp = support_preservation_check(g, k, omega, s, cert.bad);
        if (sp.ranks["relation"] == "equal") ++equal;
        if (sp.ranks["conclusion_holds"] != true) {
            if (failures == 0) first_failure = {{"stress", stress_to_json(s, g.ground_size())}, {"supports", sp.ranks}};
            ++failures;
        }
    }
    r.ranks["sandwich_samples"] = tests.size();
    r.ranks["sandwich_failures"] = failures;
    r.ranks["equal_supports"] = equal;
    if (count > cert.bound) r.witness = {{"bad_set", labeled(cert.bad, g.labels())}};
    else if (failures > 0) r.witness = first_failure;
    r.conclude(count <= cert.bound && failures == 0);
    return r;
}

// McMullen, propagation, corollaries --------------------------------------------

Report mcmullen_integral_check(const GeometricComplex& g, int k) {
    Report r;
    r.theorem = "mcmullen";
    r.require("proper realization", is_proper(g));
    r.require("homology sphere of dimension d-1 in R^d", is_homology_sphere_in_ambient(g));
    const int d = g.ambient_dim();
    long long lhs = 0;
    Json per_vertex = Json::array();
    for (int v : g.complex().vertices()) {
        if (g.coords().col(v).isZero()) continue;
        auto pl = projected_link(g, v);
        auto dom = domain_of(pl);
        long long gk = stress_space(dom, k).dim() - stress_space(dom, k - 1).dim();
        lhs += gk;
        per_vertex.push_back({{"vertex", g.label(v)}, {"g_k_link", gk}});
    }
    auto dims = stress_dims(g, k + 1);
    long long rhs = (k + 1) * stress_g(dims, k + 1) + (d + 1 - k) * stress_g(dims, k);
    r.ranks["k"] = k;
    r.ranks["lhs"] = lhs;
    r.ranks["rhs"] = rhs;
    r.ranks["links"] = per_vertex;
    r.conclude(lhs == rhs);
    return r;
}

Report propagation_verify(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Report r;
    r.theorem = "propagation";
    auto cert = certify_toric_chordal(g, k, omega, false);
    Json missing = first_missing(g, k + 1, k + 1);
    r.require("proper realization", is_proper(g));
    r.require("toric k-chordal", cert.toric(),
              {{"surjection", cert.surjection.to_json()}, {"injection", cert.injection.to_json()}});
    r.require("no missing faces of dimension k+1", missing.is_null(), missing.is_null() ? Json(nullptr) : Json{{"missing_face", missing}});
    auto next = certify_toric_chordal(g, k + 1, omega, false);
    r.ranks["certificate_k"] = cert.to_json(g);
    r.ranks["certificate_k_plus_1"] = next.to_json(g);
    if (!missing.is_null()) r.witness = {{"missing_face", missing}};
    else if (!cert.toric()) r.witness = {{"failed", cert.injection.injective() ? "surjection" : "injection"}};
    else if (!next.toric() && !next.injection.injective())
        r.witness = {{"kernel_vector", stress_to_json(next.injection.kernel.front(), g.ground_size())}};
    r.conclude(next.toric());
    return r;
}

Report kernel_vanishing_check(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Report r;
    r.theorem = "kernel-vanishing";
    const int d = g.ambient_dim();
    auto cert = certify_toric_chordal(g, k, omega, false);
    Json missing = first_missing(g, k + 1, g.complex().vertex_count());
    r.require("proper realization", is_proper(g));
    r.require("toric k-chordal", cert.toric());
    r.require("no missing faces of dimension > k", missing.is_null(), missing.is_null() ? Json(nullptr) : Json{{"missing_face", missing}});
    auto dom = domain_of(g);
    Json kernels = Json::array();
    bool all_zero = true;
    for (int i = k; i <= d; ++i) {
        auto m = differential_rank(dom, omega, i + 1);
        kernels.push_back({{"i", i}, {"kernel_dim", m.kernel_dim()}});
        all_zero = all_zero && m.injective();
    }
    r.ranks["kernels"] = kernels;
    r.conclude(all_zero);
    return r;
}

Report cohen_macaulay_corollary_check(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Report r;
    r.theorem = "cohen-macaulay-corollary";
    const int d = g.ambient_dim();
    auto cert = certify_toric_chordal(g, k, omega, false);
    Json missing = first_missing(g, k + 1, g.complex().vertex_count());
    Json steps = Json::array();
    bool regular = true;
    for (int j = 0; j <= d; ++j) {
        StressDomain dom{g.complex(), std::nullopt, g.coords().topRows(j)};
        LinearDifferential next = j < d ? LinearDifferential::from_row(g.coords(), j, "theta_" + std::to_string(j + 1)) : omega;
        for (int i = 0; i < k; ++i) {
            auto m = differential_rank(dom, next, i + 1);
            steps.push_back({{"element", next.name}, {"from_degree", i + 1}, {"coker_dim", m.coker_dim()}});
            regular = regular && m.surjective();
        }
    }
    r.require("toric k-chordal", cert.toric());
    r.require("no missing faces of dimension > k", missing.is_null(), missing.is_null() ? Json(nullptr) : Json{{"missing_face", missing}});
    r.require("regular up to degree k", regular);
    r.ranks["truncations"] = steps;
    auto cm = reisner_cm_check(g.complex(), g.labels());
    r.ranks["reisner"] = cm.ranks;
    if (!cm.witness.is_null()) r.witness = cm.witness;
    r.conclude(cm.verdict == Verdict::verified);
    return r;
}

// Cut theorem --------------------------------------------------------------------

GeometricComplex lift_with_differential(const GeometricComplex& g, const LinearDifferential& psi) {
    MatrixQ coords(g.ambient_dim() + 1, g.ground_size());
    coords.topRows(g.ambient_dim()) = g.coords();
    coords.row(g.ambient_dim()) = psi.c.transpose();
    return g.with_coords(coords);
}

namespace {

std::vector<Stress> images(const LinearDifferential& c, const std::vector<Stress>& src, const StressDomain& dom) {
    std::vector<Stress> out;
    for (const auto& s : src) out.push_back(apply_differential(c, s, &dom));
    return out;
}

// Rank of c on a subspace whose image lies in `target`.
int image_rank(const LinearDifferential& c, const std::vector<Stress>& src) {
    std::vector<Stress> im;
    for (const auto& s : src) im.push_back(apply_differential(c, s));
    return span_dim(im);
}

}  // namespace

Report cut_theorem_check(const GeometricComplex& whole, const AbstractComplex& part1, const AbstractComplex& part2,
                         int k, const LinearDifferential& psi, const LinearDifferential& omega) {
    const auto& delta = whole.complex();
    if (!(complex_union(part1, part2) == delta)) throw std::invalid_argument("the parts do not cover the complex");
    AbstractComplex bar = complex_intersection(part1, part2);
    if (!(induced_subcomplex(delta, bar.vertices()) == bar))
        throw std::invalid_argument("the intersection is not an induced subcomplex");
    const int n = whole.ground_size();
    const auto& labels = whole.labels();
    Report r;
    r.theorem = "cut";
    r.require("proper realization", is_proper(whole));

    StressDomain bar_dom = domain_of(whole, bar, std::nullopt);
    auto bar_km1 = stress_space(bar_dom, k - 1);
    auto bar_k = stress_space(bar_dom, k);

    // (A)
    Json a_json = Json::array();
    bool a_ok = true;
    const AbstractComplex* parts[] = {&part1, &part2};
    for (int i = 0; i < 2; ++i) {
        auto rel = stress_space(domain_of(whole, RelativeComplex(*parts[i], bar)), k);
        auto im = images(psi, rel.generators, bar_dom);
        bool onto = spans_contain(im, bar_km1.generators);
        bool inside = spans_contain(bar_km1.generators, im);
        a_ok = a_ok && onto;
        a_json.push_back({{"part", i + 1}, {"relative_dim", rel.dim()}, {"target_dim", bar_km1.dim()},
                          {"image_rank", span_dim(im)}, {"surjective", onto}, {"images_are_stresses", inside}});
    }
    r.require("psi surjective on both relative parts", a_ok, a_json);

    // (B)
    auto dom = domain_of(whole);
    std::vector<std::vector<Stress>> kernels;
    Json kdims = Json::array();
    for (int j = k - 1; j <= k + 1; ++j) {
        auto m = map_rank(psi, stress_space(dom, j), stress_space(dom, j - 1), dom, true);
        kdims.push_back({{"degree", j}, {"dim", m.kernel_dim()}});
        kernels.push_back(std::move(m.kernel));
    }
    const int kk = static_cast<int>(kernels[1].size());
    const bool b_surj = image_rank(omega, kernels[2]) == kk;
    const bool b_inj = image_rank(omega, kernels[1]) == kk;
    r.require("kernel of psi toric k-chordal under omega", b_surj && b_inj,
              {{"kernel_dims", kdims}, {"surjective", b_surj}, {"injective", b_inj}});

    // conclusion
    auto concl = map_rank(omega, bar_k, bar_km1, bar_dom);
    r.ranks["k"] = k;
    r.ranks["intersection_vertices"] = labeled(bar.vertices(), labels);
    r.ranks["conclusion_map"] = concl.to_json();

    // support refinement
    Json refinement = Json::array();
    bool refine_ok = true;
    for (const auto& gamma : bar_km1.generators) {
        const Face supp = gamma.vertex_support();
        bool preimages = true;
        for (int i = 0; i < 2; ++i) {
            const Face w = (parts[i]->vertices() - bar.vertices()) | supp;
            RelativeComplex rel(induced_subcomplex(*parts[i], w), induced_subcomplex(bar, w));
            auto space = stress_space(domain_of(whole, rel), k);
            preimages = preimages && spans_contain(images(psi, space.generators, bar_dom), {gamma});
        }
        Json entry = {{"stress", stress_to_json(gamma, n)}, {"support", labeled(supp, labels)}, {"preimages_exist", preimages}};
        if (preimages) {
            auto local = stress_space(domain_of(whole, induced_subcomplex(bar, supp), std::nullopt), k);
            bool found = spans_contain(images(omega, local.generators, bar_dom), {gamma});
            entry["equal_support_preimage"] = found;
            refine_ok = refine_ok && found;
            if (!found && r.witness.is_null()) r.witness = {{"refinement_failure", entry}};
        }
        refinement.push_back(entry);
    }
    r.ranks["support_refinement"] = refinement;
    r.ranks["support_refinement_holds"] = refine_ok;
    r.ranks["psi"] = psi.to_json();
    r.ranks["omega"] = omega.name;
    r.conclude(concl.surjective() && refine_ok);
    return r;
}

// GLBT and homology bridges -------------------------------------------------------

Report glbt_check(const GeometricComplex& g, int k, const LinearDifferential& omega) {
    Report r;
    r.theorem = "glbt";
    const int d = g.ambient_dim();
    auto cert = certify_toric_chordal(g, k, omega, false);
    r.require("proper realization", is_proper(g));
    r.require("homology sphere of dimension d-1 in R^d", is_homology_sphere_in_ambient(g));
    r.require("1 <= k <= d/2", k >= 1 && 2 * k <= d, {{"k", k}, {"d", d}});
    r.require("g_k = 0", cert.g_k == 0, {{"g_k", cert.g_k}});
    r.ranks["certificate"] = cert.to_json(g);
    bool tri_ok = false;
    if (k >= 1) {
        auto tri = k_stacked_triangulation(g, k);
        r.ranks["triangulation"] = tri.report.ranks;
        if (!tri.report.witness.is_null()) r.witness = tri.report.witness;
        tri_ok = tri.report.verdict == Verdict::verified;
    }
    r.conclude(cert.toric() && tri_ok);
    return r;
}

Report subset_betti_bound_check(const GeometricComplex& g, int k, int cap) {
    Report r;
    r.theorem = "subset-betti";
    const int d = g.ambient_dim();
    r.require("proper realization", is_proper(g));
    r.require("homology sphere of dimension d-1 in R^d", is_homology_sphere_in_ambient(g));
    auto dims = stress_dims(g, k + 1);
    std::vector<long long> bounds;
    Json bj = Json::object();
    if (2 * k >= d) {
        bounds.push_back(-stress_g(dims, k + 1));
        bj["minus_g_k_plus_1"] = bounds.back();
    }
    if (2 * k <= d) {
        bounds.push_back(stress_g(dims, k));
        bj["g_k"] = bounds.back();
    }
    r.ranks["k"] = k;
    r.ranks["bounds"] = bj;
    try {
        auto m = max_induced_betti(g.complex(), k - 1, {}, cap);
        r.ranks["max_betti"] = m.value;
        r.ranks["subsets"] = m.subsets;
        r.ranks["argmax"] = labeled(m.argmax, g.labels());
        bool ok = std::all_of(bounds.begin(), bounds.end(), [&](long long b) { return m.value <= b; });
        if (!ok) r.witness = {{"vertex_set", labeled(m.argmax, g.labels())}, {"betti", m.value}};
        r.conclude(ok);
    } catch (const CapExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.witness = {{"required_vertices", e.required}, {"cap", e.cap}};
    }
    return r;
}

Report bad_set_betti_check(const GeometricComplex& g, int k, const LinearDifferential& omega, int cap) {
    Report r;
    r.theorem = "bad-set-betti";
    auto cert = certify_toric_chordal(g, k, omega);
    r.require("proper realization", is_proper(g));
    r.require("homology sphere of dimension d-1 in R^d", is_homology_sphere_in_ambient(g));
    r.require("g_{k+1} >= 0", cert.g_k1 >= 0, {{"g_k_plus_1", cert.g_k1}});
    r.ranks["bad_set"] = labeled(cert.bad, g.labels());
    r.ranks["bad_count"] = cert.bad.size();
    r.ranks["bound"] = cert.bound;
    try {
        auto m = max_induced_betti(g.complex(), k - 1, cert.bad, cap);
        r.ranks["max_betti"] = m.value;
        r.ranks["subsets"] = m.subsets;
        if (m.value != 0) r.witness = {{"vertex_set", labeled(m.argmax, g.labels())}, {"betti", m.value}};
        r.conclude(m.value == 0 && cert.bad.size() <= cert.bound);
    } catch (const CapExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.witness = {{"required_vertices", e.required}, {"cap", e.cap}};
    }
    return r;
}

Report iso_tay_check(const GeometricComplex& g, const LinearDifferential& omega) {
    Report r;
    r.theorem = "iso-tay";
    const int d = g.ambient_dim();
    r.require("proper realization", is_proper(g));
    r.require("complex of dimension d-1", g.complex().dimension() == d - 1);
    auto m = differential_rank(domain_of(g), omega, d + 1);
    const int quotient = m.target_dim - m.rank;
    const int betti = reduced_betti(g.complex(), d - 1);
    r.ranks["dim_S_d"] = m.target_dim;
    r.ranks["dim_S_d_plus_1"] = m.source_dim;
    r.ranks["rank"] = m.rank;
    r.ranks["quotient_dim"] = quotient;
    r.ranks["betti"] = betti;
    r.conclude(quotient == betti);
    return r;
}

Report color_surjection_check(const GeometricComplex& g, const std::vector<int>& colors, std::uint64_t seed) {
    if (!g.coloring() || !is_balanced(g.complex(), *g.coloring()))
        throw std::invalid_argument("color surjection needs a balanced coloring");
    Report r;
    r.theorem = "color-surjection";
    const int m = static_cast<int>(colors.size());
    const Face verts = color_class(g.complex(), *g.coloring(), colors);
    std::vector<std::string> log;
    GeometricComplex sub = generic_projection(g.with_complex(induced_subcomplex(g.complex(), verts)), m, seed, &log);
    for (auto& line : log) r.notes.push_back(std::move(line));
    auto dom = domain_of(sub);
    auto omega = LinearDifferential::generic(g.ground_size(), seed);
    Json maps = Json::array();
    bool onto = true;
    for (int k = 0; 2 * k <= m + 1; ++k) {
        auto mr = differential_rank(dom, omega, k);
        maps.push_back({{"k", k}, {"map", mr.to_json()}});
        onto = onto && mr.surjective();
        if (!mr.surjective() && r.witness.is_null()) r.witness = {{"k", k}, {"coker_dim", mr.coker_dim()}};
    }
    r.ranks["colors"] = colors;
    r.ranks["vertices"] = labeled(verts, g.labels());
    r.ranks["seed"] = seed;
    r.ranks["maps"] = maps;
    r.conclude(onto);
    return r;
}

Report with_generic_resample(int n, std::uint64_t seed, const std::function<Report(const LinearDifferential&)>& check) {
    Report r = check(LinearDifferential::generic(n, seed));
    if (r.verdict != Verdict::violated) return r;
    Report again = check(LinearDifferential::generic(n, seed + 1));
    again.notes.push_back("generic differential from seed " + std::to_string(seed) + " failed; resampled with seed " +
                          std::to_string(seed + 1));
    return again;
}

}  // namespace stressca
