#include "stressca/chordality.hpp"
#include "stressca/generators.hpp"
#include "stressca/homology.hpp"
#include "stressca/stress.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace stressca;

namespace {

struct Named {
    std::string name;
    GeometricComplex g;
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

LinearDifferential delta(const GeometricComplex& g) { return LinearDifferential::ones(g.ground_size()); }

std::vector<Named> suite() {
    std::vector<Named> out;
    for (int d = 2; d <= 5; ++d) out.push_back({"simplex" + std::to_string(d), gen_simplex_boundary(d)});
    for (int d = 2; d <= 4; ++d) out.push_back({"cross" + std::to_string(d), gen_cross_polytope_boundary(d)});
    out.push_back({"C(4,6)", gen_cyclic_boundary(4, 6)});
    out.push_back({"C(4,7)", gen_cyclic_boundary(4, 7)});
    out.push_back({"stacked(4,7)", gen_stacked_boundary(4, 7)});
    out.push_back({"stacked(4,8)", gen_stacked_boundary(4, 8)});
    return out;
}

const std::vector<Named>& the_suite() {
    static const std::vector<Named> s = suite();
    return s;
}

/// Collects the first failure and counts checks.
struct Tally {
    long long checks = 0;
    std::string first_failure;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (ok) return {true, summary + ", " + std::to_string(checks) + " checks"};
        return {false, "first failure: " + first_failure};
    }
};

std::string at(const std::string& name, int k) { return name + " k=" + std::to_string(k); }

Outcome h_vector_oracle() {
    Tally t;
    for (const auto& [name, g] : the_suite()) {
        const int d = g.ambient_dim();
        auto h = fhg_vectors(g.complex()).h;
        t.expect(h.has_value(), name + " has no h-vector");
        if (!h) continue;
        auto dims = stress_dims(g, d + 1);
        for (int k = 0; k <= d + 1; ++k) {
            long long hk = k <= d ? (*h)[static_cast<std::size_t>(k)] : 0;
            t.expect(dims[static_cast<std::size_t>(k)] == hk,
                     at(name, k) + ": dim S_k " + std::to_string(dims[static_cast<std::size_t>(k)]) + " vs h_k " +
                         std::to_string(hk));
        }
    }
    return t.outcome("dim S_k = h_k on " + std::to_string(the_suite().size()) + " complexes");
}

Outcome hard_lefschetz() {
    Tally t;
    for (const auto& [name, g] : the_suite()) t.expect(lefschetz_check(g, delta(g)).verdict == Verdict::verified, name);
    return t.outcome("ones-differential powers are isomorphisms");
}

Outcome mcmullen() {
    Tally t;
    for (const auto& [name, g] : the_suite())
        for (int k = 0; k <= g.ambient_dim() + 1; ++k) {
            Report r = mcmullen_integral_check(g, k);
            t.expect(r.verdict == Verdict::verified && r.ranks["lhs"] == r.ranks["rhs"], at(name, k));
        }
    return t.outcome("link sums equal (k+1)g_{k+1} + (d+1-k)g_k");
}

Outcome cone_lemmas() {
    Tally t;
    for (const auto& [name, g] : the_suite())
        for (int v : g.complex().vertices())
            for (int k = 0; k <= g.ambient_dim(); ++k)
                t.expect(cone_lemma_check(g, v, k).verdict == Verdict::verified,
                         at(name + " vertex " + std::to_string(g.label(v)), k));
    return t.outcome("link, star and open-star dimensions agree");
}

Outcome bad_set_bound_and_sandwich() {
    Tally t;
    for (const auto& [name, g] : the_suite())
        for (int k = 0; k <= g.ambient_dim(); ++k)
            t.expect(weak_bad_set_check(g, k, delta(g), 20260101 + static_cast<std::uint64_t>(k), 20).verdict ==
                         Verdict::verified,
                     at(name, k));
    return t.outcome("bad-set bound and support sandwich on 20 stresses per degree");
}

Outcome propagation() {
    Tally t;
    int applicable = 0;
    for (const auto& [name, g] : the_suite()) {
        std::vector<LinearDifferential> omegas{delta(g)};
        for (std::uint64_t seed = 1; seed <= 3; ++seed) omegas.push_back(LinearDifferential::generic(g.ground_size(), seed));
        for (const auto& w : omegas)
            for (int k = 0; k < g.ambient_dim(); ++k) {
                Report r = propagation_verify(g, k, w);
                if (!r.hypotheses_hold()) continue;
                ++applicable;
                t.expect(r.verdict == Verdict::verified, at(name + " " + w.name, k));
            }
    }
    return t.outcome(std::to_string(applicable) + " cases with hypotheses met");
}

Outcome glbt_pipeline() {
    Tally t;
    auto g = gen_stacked_boundary(4, 7);
    auto dims = stress_dims(g, 3);
    t.expect(stress_g(dims, 2) == 0, "g_2 != 0");
    t.expect(certify_toric_chordal(g, 2, delta(g)).toric(), "not toric 2-chordal");
    auto st = k_stacked_triangulation(g, 2);
    t.expect(st.report.verdict == Verdict::verified, "k-stacked report " + to_string(st.report.verdict));
    t.expect(is_acyclic(st.complex), "Cl_2 not acyclic");
    t.expect(reisner_cm_check(st.complex).verdict == Verdict::verified, "Cl_2 not Cohen-Macaulay");
    for (int dim = 0; dim <= 2; ++dim)
        for (Face f : st.complex.faces(dim)) t.expect(g.complex().contains(f), "interior face " + to_string(f));
    t.expect(glbt_check(g, 2, delta(g)).verdict == Verdict::verified, "glbt report");
    return t.outcome("Cl_2 of stacked(4,7) is an acyclic Cohen-Macaulay 2-stacked ball");
}

Outcome negative_controls() {
    Tally t;
    auto oct = gen_cross_polytope_boundary(3);
    auto c = certify_toric_chordal(oct, 1, delta(oct));
    long long g1 = stress_g(stress_dims(oct, 1), 1);
    t.expect(!c.toric(), "octahedron certified");
    t.expect(c.injection.kernel_dim() == g1 && g1 == 2, "kernel dim " + std::to_string(c.injection.kernel_dim()));
    auto bow = gen_bowtie();
    Report r = reisner_cm_check(bow.complex(), bow.labels());
    t.expect(r.verdict == Verdict::violated, "bowtie verdict " + to_string(r.verdict));
    t.expect(r.witness["face"] == Json::array({bow.label(0)}) && r.witness["degree"] == 0 && r.witness["link_betti"] == 1,
             "bowtie witness " + r.witness.dump());
    return t.outcome("octahedron kernel dim 2 = g_1; bowtie center link has H~_0 = 1");
}

std::vector<Named> small_suite() {
    return {{"octahedron", gen_cross_polytope_boundary(3)},
            {"simplex3", gen_simplex_boundary(3)},
            {"simplex4", gen_simplex_boundary(4)},
            {"C(4,6)", gen_cyclic_boundary(4, 6)},
            {"C(4,7)", gen_cyclic_boundary(4, 7)}};
}

Outcome subset_betti() {
    Tally t;
    for (const auto& [name, g] : small_suite())
        for (int k = 0; k <= g.ambient_dim(); ++k)
            t.expect(subset_betti_bound_check(g, k).verdict == Verdict::verified, at(name, k));
    return t.outcome("all induced subcomplexes within bounds");
}

Outcome bad_set_betti() {
    Tally t;
    int applicable = 0;
    for (const auto& [name, g] : the_suite())
        for (int k = 0; k <= g.ambient_dim(); ++k) {
            Report r = bad_set_betti_check(g, k, delta(g));
            t.expect(r.verdict != Verdict::violated && r.verdict != Verdict::inconclusive, at(name, k));
            if (!r.hypotheses_hold()) continue;
            ++applicable;
            t.expect(r.verdict == Verdict::verified, at(name, k));
        }
    return t.outcome("induced homology vanishes after adding the bad set in " + std::to_string(applicable) +
                     " cases with g_{k+1} >= 0");
}

Outcome partitions() {
    Tally t;
    std::vector<Named> cs{{"simplex3", gen_simplex_boundary(3)},
                          {"octahedron", gen_cross_polytope_boundary(3)},
                          {"cross4", gen_cross_polytope_boundary(4)}};
    int balanced = 0;
    for (const auto& [name, g] : cs) {
        auto search = shelling_search(g.complex());
        t.expect(search.status == ShellingSearch::Status::found, name + " shelling");
        if (search.status != ShellingSearch::Status::found) continue;
        const int d = g.ambient_dim();
        for (int k = 0; k < d; ++k)
            t.expect(partition_of_unity_check(g, k, search.order).verdict == Verdict::verified, at(name + " shelling", k));
        if (!g.coloring() || !is_balanced(g.complex(), *g.coloring())) continue;
        ++balanced;
        auto low = generic_projection(g, d - 1, 17);
        for (int c = 1; c <= d; ++c)
            t.expect(balanced_partition_check(low, c).verdict == Verdict::verified,
                     name + " color " + std::to_string(c));
    }
    return t.outcome("shelling version on 3 complexes, balanced version on " + std::to_string(balanced) +
                     " (the tetrahedron boundary has no balancing coloring)");
}

Outcome color_surjections() {
    Tally t;
    auto g = gen_cross_polytope_boundary(4);
    for (std::uint64_t seed : {1u, 2u, 3u})
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> colors;
            for (int c = 0; c < 4; ++c)
                if (mask & (1 << c)) colors.push_back(c + 1);
            Report r = color_surjection_check(g, colors, seed);
            t.expect(r.verdict == Verdict::verified,
                     "seed " + std::to_string(seed) + " colors " + Json(colors).dump() + " " + to_string(r.verdict));
        }
    return t.outcome("every color subset, seeds 1..3");
}

Outcome iso_tay() {
    Tally t;
    for (const auto& [name, g] : the_suite()) {
        Report r = iso_tay_check(g, delta(g));
        t.expect(r.verdict == Verdict::verified && r.ranks["quotient_dim"] == r.ranks["betti"] && r.ranks["betti"] == 1,
                 name + " " + r.ranks.dump());
    }
    return t.outcome("top-degree cokernel equals the top Betti number (1 on spheres)");
}

Outcome balanced_cliques() {
    Tally t;
    for (auto [g, k] : {std::pair{gen_cross_polytope_boundary(3), 1}, std::pair{gen_cross_polytope_boundary(4), 2}}) {
        auto bc = balanced_clique_complex(g, k);
        std::string name = "cross" + std::to_string(g.ambient_dim()) + " k=" + std::to_string(k);
        t.expect(bc.report.verdict == Verdict::verified, name + " " + to_string(bc.report.verdict));
        t.expect(is_acyclic(bc.complex.complex()), name + " not acyclic");
        for (const auto& cl : bc.report.ranks["center_links"])
            t.expect(cl["crosspolytope_link"] == true, name + " center " + cl["center"].dump());
        t.expect(!bc.report.ranks["center_links"].empty(), name + " has no centers");
    }
    return t.outcome("acyclic, face condition holds, center links are crosspolytope boundaries");
}

Outcome cut_instance() {
    auto cut = gen_bipyramid_split();
    const auto& g = cut.whole;
    std::vector<LinearDifferential> psis{LinearDifferential::from_row(g.coords(), g.ambient_dim() - 1, "last-coordinate"),
                                         LinearDifferential::generic(g.ground_size(), 1000004)};
    std::ostringstream detail;
    bool any = false;
    for (const auto& psi : psis)
        for (int k = 1; k <= 3; ++k) {
            Report r = cut_theorem_check(g, cut.part1, cut.part2, k, psi, delta(g));
            std::string failed;
            for (const auto& h : r.hypotheses)
                if (!h.holds) failed += (failed.empty() ? "" : "; ") + h.name;
            const bool surj = r.ranks.contains("conclusion_map") && r.ranks["conclusion_map"]["coker_dim"] == 0;
            const bool refine = r.ranks.value("support_refinement_holds", false);
            detail << "[psi=" << psi.name << " k=" << k << ": hypotheses " << (failed.empty() ? "ok" : "fail(" + failed + ")")
                   << ", surjective " << (surj ? "yes" : "no") << ", refinement " << (refine ? "yes" : "no") << "] ";
            any = any || (r.verdict == Verdict::verified && surj && refine);
        }
    return {any, detail.str()};
}

Outcome determinism() {
    auto reports = [] {
        std::string all;
        auto oct = gen_cross_polytope_boundary(3);
        auto c4 = gen_cross_polytope_boundary(4);
        auto cyc = gen_cyclic_boundary(4, 7);
        for (std::uint64_t seed : {5u, 6u}) {
            auto w = LinearDifferential::generic(oct.ground_size(), seed);
            all += certify_chordal_check(oct, 1, w).to_json().dump();
            all += weak_bad_set_check(cyc, 2, LinearDifferential::generic(cyc.ground_size(), seed), seed, 5).to_json().dump();
            all += color_surjection_check(c4, {1, 2, 3}, seed).to_json().dump();
            all += balanced_partition_check(generic_projection(oct, 2, seed), 1).to_json().dump();
            all += with_generic_resample(oct.ground_size(), seed, [&](const LinearDifferential& x) {
                       return propagation_verify(oct, 1, x);
                   }).to_json().dump();
        }
        return all;
    };
    const std::string a = reports();
    const std::string b = reports();
    return {a == b, std::to_string(a.size()) + " bytes of seeded reports, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "h-vector oracle equality", 30, h_vector_oracle},
        {2, "hard Lefschetz isomorphisms", 60, hard_lefschetz},
        {3, "McMullen integral formula", 0, mcmullen},
        {4, "cone lemmas", 0, cone_lemmas},
        {5, "bad-set bound and support sandwich", 0, bad_set_bound_and_sandwich},
        {6, "propagation metamorphic test", 0, propagation},
        {7, "GLBT pipeline on stacked(4,7)", 60, glbt_pipeline},
        {8, "negative controls", 0, negative_controls},
        {9, "subset Betti bounds", 300, subset_betti},
        {10, "bad-set Betti vanishing", 0, bad_set_betti},
        {11, "partition of unity", 0, partitions},
        {12, "color-class generic surjections", 0, color_surjections},
        {13, "top-degree cokernel and homology", 0, iso_tay},
        {14, "balanced clique complexes", 120, balanced_cliques},
        {15, "cut on the split bipyramid", 0, cut_instance},
        {16, "determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += " (time limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s exceeded)";
        }
        if (!o.pass) ++failed;
        std::printf("%s %2d  %-40s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
