#include "stressca/chordality.hpp"
#include "stressca/generators.hpp"
#include "stressca/homology.hpp"
#include "stressca/io.hpp"
#include "stressca/stress.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace stressca;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kKinds{"simplex", "cross", "cyclic", "stacked", "bipyramid-split"};
const std::vector<std::string> kTheorems{
    "certify-chordal", "weak-bad-set", "mcmullen",      "propagation", "cone-lemma",    "partition",
    "balanced-partition", "cut",       "reisner",       "subset-betti", "bad-set-betti", "iso-tay",
    "glbt",            "balanced-clique", "lefschetz",  "resolution-chordal", "kernel-vanishing", "cm-corollary"};

struct VerifyOptions {
    std::string theorem;
    std::string file;
    int k = 1;
    std::optional<std::uint64_t> seed;
    std::string omega = "ones";
    std::string psi = "last-coordinate";
    int cap = 14;
    bool human = false;
    std::optional<int> vertex;
    std::optional<int> color;
    std::string output;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("STRESSCA_SEED")) {
        try {
            std::size_t used = 0;
            std::uint64_t s = std::stoull(env, &used);
            if (used == std::string(env).size()) return s;
        } catch (const std::exception&) {
        }
        throw UsageError("STRESSCA_SEED must be a nonnegative integer");
    }
    return 0;
}

int vertex_index(const GeometricComplex& g, int label) {
    for (int v = 0; v < g.ground_size(); ++v)
        if (g.label(v) == label) return v;
    throw UsageError("no vertex with id " + std::to_string(label));
}

// Folds per-case reports into one; hypotheses are prefixed by the case name.
Report combine(const std::string& theorem, const std::vector<std::pair<std::string, Report>>& cases) {
    Report r;
    r.theorem = theorem;
    Json list = Json::array();
    bool conclusion = true;
    bool inconclusive = false;
    for (const auto& [name, c] : cases) {
        for (const auto& h : c.hypotheses) r.require(name + ": " + h.name, h.holds, h.detail);
        Json entry = {{"case", name}, {"verdict", to_string(c.verdict)}, {"ranks", c.ranks}};
        list.push_back(entry);
        if (c.verdict == Verdict::inconclusive) inconclusive = true;
        conclusion = conclusion && c.ranks.value("conclusion_holds", false);
        if (r.witness.is_null() && !c.witness.is_null()) r.witness = {{"case", name}, {"witness", c.witness}};
        for (const auto& n : c.notes) r.notes.push_back(name + ": " + n);
    }
    r.ranks["cases"] = list;
    r.conclude(conclusion);
    if (inconclusive && r.verdict != Verdict::hypotheses_not_met) r.verdict = Verdict::inconclusive;
    return r;
}

Report with_omega(const VerifyOptions& o, const GeometricComplex& g, std::uint64_t seed,
                  const std::function<Report(const LinearDifferential&)>& check) {
    if (o.omega == "generic") {
        Report r = with_generic_resample(g.ground_size(), seed, check);
        r.ranks["seed"] = seed;
        return r;
    }
    return check(LinearDifferential::ones(g.ground_size()));
}

Report run_verify(const VerifyOptions& o) {
    LoadedComplex loaded = read_complex_file(o.file);
    const GeometricComplex& g = loaded.complex;
    const std::uint64_t seed = resolve_seed(o.seed);
    const int k = o.k;
    const std::string& t = o.theorem;

    if (t == "certify-chordal")
        return with_omega(o, g, seed, [&](const LinearDifferential& w) { return certify_chordal_check(g, k, w); });
    if (t == "weak-bad-set") {
        Report r = with_omega(o, g, seed, [&](const LinearDifferential& w) { return weak_bad_set_check(g, k, w, seed); });
        r.ranks["seed"] = seed;
        return r;
    }
    if (t == "mcmullen") return mcmullen_integral_check(g, k);
    if (t == "propagation")
        return with_omega(o, g, seed, [&](const LinearDifferential& w) { return propagation_verify(g, k, w); });
    if (t == "kernel-vanishing")
        return with_omega(o, g, seed, [&](const LinearDifferential& w) { return kernel_vanishing_check(g, k, w); });
    if (t == "cm-corollary")
        return with_omega(o, g, seed, [&](const LinearDifferential& w) { return cohen_macaulay_corollary_check(g, k, w); });
    if (t == "cone-lemma") {
        std::vector<std::pair<std::string, Report>> cases;
        if (o.vertex) {
            int v = vertex_index(g, *o.vertex);
            cases.emplace_back("vertex " + std::to_string(*o.vertex), cone_lemma_check(g, v, k));
        } else {
            for (int v : g.complex().vertices())
                cases.emplace_back("vertex " + std::to_string(g.label(v)), cone_lemma_check(g, v, k));
        }
        return combine("cone-lemma", cases);
    }
    if (t == "partition") {
        auto search = shelling_search(g.complex());
        if (search.status != ShellingSearch::Status::found) {
            Report r;
            r.theorem = "partition";
            r.ranks["shelling_steps"] = search.steps;
            if (search.status == ShellingSearch::Status::inconclusive) {
                r.verdict = Verdict::inconclusive;
                r.notes.push_back("shelling search hit its step limit");
            } else {
                r.require("shellable", false);
                r.conclude(false);
            }
            return r;
        }
        Report r = partition_of_unity_check(g, k, search.order);
        Json order = Json::array();
        for (Face f : search.order) order.push_back(labeled(f, g.labels()));
        r.ranks["shelling"] = order;
        return r;
    }
    if (t == "balanced-partition") {
        if (!g.coloring()) throw UsageError("balanced-partition needs a colored complex");
        const int d = g.complex().dimension() + 1;
        GeometricComplex work = g;
        std::vector<std::string> log;
        if (g.ambient_dim() != d - 1) {
            work = generic_projection(g, d - 1, seed, &log);
            log.insert(log.begin(), "projected generically to R^" + std::to_string(d - 1) + " with seed " + std::to_string(seed));
        }
        std::vector<std::pair<std::string, Report>> cases;
        for (int c = 1; c <= d; ++c)
            if (!o.color || *o.color == c) cases.emplace_back("color " + std::to_string(c), balanced_partition_check(work, c));
        Report r = combine("balanced-partition", cases);
        for (auto& line : log) r.notes.push_back(line);
        r.ranks["seed"] = seed;
        return r;
    }
    if (t == "cut") {
        if (!loaded.parts) throw UsageError("cut needs a complex file with \"parts\"");
        if (g.ambient_dim() == 0) throw UsageError("cut needs ambient dimension at least 1");
        LinearDifferential psi =
            o.psi == "generic" ? LinearDifferential::generic(g.ground_size(), seed + 1000003)
                               : LinearDifferential::from_row(g.coords(), g.ambient_dim() - 1, "last-coordinate");
        return with_omega(o, g, seed, [&](const LinearDifferential& w) {
            return cut_theorem_check(g, loaded.parts->first, loaded.parts->second, k, psi, w);
        });
    }
    if (t == "reisner") return reisner_cm_check(g.complex(), g.labels());
    if (t == "resolution-chordal") return resolution_chordal_check(g.complex(), k, std::nullopt, o.cap, g.labels());
    if (t == "subset-betti") return subset_betti_bound_check(g, k, o.cap);
    if (t == "bad-set-betti")
        return with_omega(o, g, seed, [&](const LinearDifferential& w) { return bad_set_betti_check(g, k, w, o.cap); });
    if (t == "iso-tay") return with_omega(o, g, seed, [&](const LinearDifferential& w) { return iso_tay_check(g, w); });
    if (t == "glbt") return with_omega(o, g, seed, [&](const LinearDifferential& w) { return glbt_check(g, k, w); });
    if (t == "balanced-clique") {
        auto bc = balanced_clique_complex(g, k);
        if (!o.output.empty()) write_text_file(o.output, complex_to_json(bc.complex).dump(2) + "\n");
        return bc.report;
    }
    if (t == "lefschetz") return with_omega(o, g, seed, [&](const LinearDifferential& w) { return lefschetz_check(g, w); });
    throw UsageError("unknown theorem " + t);
}

Json invariants(const GeometricComplex& g) {
    const auto& c = g.complex();
    auto fhg = fhg_vectors(c);
    Json out;
    out["vertices"] = c.vertex_count();
    out["dimension"] = c.dimension();
    out["ambient_dim"] = g.ambient_dim();
    out["f"] = fhg.f;
    out["h_combinatorial"] = fhg.h ? Json(*fhg.h) : Json(nullptr);
    out["g_combinatorial"] = fhg.g ? Json(*fhg.g) : Json(nullptr);
    auto dims = stress_dims(g, std::max(c.dimension() + 1, 0));
    std::vector<long long> gs;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) gs.push_back(stress_g(dims, i));
    out["h_stress"] = dims;
    out["g_stress"] = gs;
    auto bad = improper_face(g);
    out["proper"] = !bad.has_value();
    out["improper_face"] = bad ? Json(labeled(*bad, g.labels())) : Json(nullptr);
    out["reduced_betti"] = reduced_betti(c);
    auto missing = missing_faces(c, 1, c.vertex_count());
    Json by_dim = Json::object();
    Json faces = Json::array();
    for (Face f : missing) {
        std::string key = std::to_string(f.size() - 1);
        by_dim[key] = by_dim.value(key, 0) + 1;
        faces.push_back(labeled(f, g.labels()));
    }
    out["missing_faces"] = {{"count_by_dim", by_dim}, {"faces", faces}};
    if (g.coloring()) out["balanced"] = is_balanced(c, *g.coloring());
    return {{"schema", "stressca/1"}, {"invariants", out}};
}

std::string generate(const std::string& kind, int d, int n) {
    auto need_n = [&]() {
        if (n <= 0) throw UsageError(kind + " needs --n");
    };
    if (kind == "simplex") return complex_to_json(gen_simplex_boundary(d)).dump(2);
    if (kind == "cross") return complex_to_json(gen_cross_polytope_boundary(d)).dump(2);
    if (kind == "cyclic") {
        need_n();
        return complex_to_json(gen_cyclic_boundary(d, n)).dump(2);
    }
    if (kind == "stacked") {
        need_n();
        return complex_to_json(gen_stacked_boundary(d, n)).dump(2);
    }
    auto cut = gen_bipyramid_split();
    return complex_to_json(cut.whole, std::make_pair(cut.part1, cut.part2)).dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stressca: exact stress spaces, toric chordality and related checks"};
    app.require_subcommand(1);

    std::string kind;
    int gen_d = 3;
    int gen_n = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "write a complex as JSON");
    gen->add_option("kind", kind, "simplex, cross, cyclic, stacked or bipyramid-split")
        ->required()
        ->check(CLI::IsMember(kKinds));
    gen->add_option("--d", gen_d, "polytope dimension");
    gen->add_option("--n", gen_n, "number of vertices (cyclic, stacked)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string inv_file;
    auto* inv = app.add_subcommand("invariants", "f/h/g vectors, properness, Betti numbers, missing faces");
    inv->add_option("file", inv_file)->required();

    VerifyOptions vo;
    std::uint64_t seed_value = 0;
    int vertex_value = 0;
    int color_value = 0;
    auto* ver = app.add_subcommand("verify", "run a named check and print its report");
    ver->add_option("theorem", vo.theorem)->required()->check(CLI::IsMember(kTheorems));
    ver->add_option("file", vo.file)->required();
    ver->add_option("--k", vo.k, "degree");
    auto* seed_opt = ver->add_option("--seed", seed_value, "seed for generic choices (fallback: STRESSCA_SEED)");
    ver->add_option("--omega", vo.omega, "ones or generic")->check(CLI::IsMember({"ones", "generic"}));
    ver->add_option("--psi", vo.psi, "cut differential: last-coordinate or generic")
        ->check(CLI::IsMember({"last-coordinate", "generic"}));
    ver->add_option("--cap", vo.cap, "vertex cap for subset enumeration");
    auto* vertex_opt = ver->add_option("--vertex", vertex_value, "single vertex id (cone-lemma)");
    auto* color_opt = ver->add_option("--color", color_value, "single color (balanced-partition)");
    ver->add_option("-o,--output", vo.output, "write the constructed complex (balanced-clique)");
    ver->add_flag("--human", vo.human, "plain-text report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::string text = generate(kind, gen_d, gen_n) + "\n";
            if (gen_out.empty()) std::cout << text;
            else write_text_file(gen_out, text);
            return 0;
        }
        if (inv->parsed()) {
            std::cout << invariants(read_complex_file(inv_file).complex).dump(2) << '\n';
            return 0;
        }
        if (seed_opt->count() > 0) vo.seed = seed_value;
        if (vertex_opt->count() > 0) vo.vertex = vertex_value;
        if (color_opt->count() > 0) vo.color = color_value;
        Report r = run_verify(vo);
        if (vo.human) std::cout << r.to_human();
        else std::cout << r.to_json().dump(2) << '\n';
        return exit_code(r);
    } catch (const UsageError& e) {
        std::cerr << "stressca: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "stressca: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "stressca: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "stressca: " << e.what() << '\n';
        return 1;
    }
}
