#include "stressca/stress.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stressca {

Face monomial_support(const Monomial& m) {
    Face f;
    for (int v : m) f.insert(v);
    return f;
}

std::vector<int> exponents(const Monomial& m, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v : m) ++e[static_cast<std::size_t>(v)];
    return e;
}

StressDomain domain_of(const GeometricComplex& g) { return {g.complex(), std::nullopt, g.coords()}; }

StressDomain domain_of(const GeometricComplex& g, const AbstractComplex& inner) {
    for (Face f : inner.facets())
        if (!g.complex().contains(f)) throw std::invalid_argument("relative part is not a subcomplex");
    return {g.complex(), inner, g.coords()};
}

StressDomain domain_of(const GeometricComplex& g, const RelativeComplex& rel) { return {rel.outer, rel.inner, g.coords()}; }

StressDomain domain_of(const GeometricComplex& g, const AbstractComplex& outer, std::nullopt_t) {
    return {outer, std::nullopt, g.coords()};
}

namespace {

void compositions(const std::vector<int>& verts, std::size_t pos, int remaining, Monomial& cur,
                  std::vector<Monomial>& out) {
    if (pos + 1 == verts.size()) {
        Monomial m = cur;
        m.insert(m.end(), static_cast<std::size_t>(remaining), verts[pos]);
        out.push_back(std::move(m));
        return;
    }
    const int slots_after = static_cast<int>(verts.size() - pos - 1);
    for (int e = 1; e <= remaining - slots_after; ++e) {
        cur.insert(cur.end(), static_cast<std::size_t>(e), verts[pos]);
        compositions(verts, pos + 1, remaining - e, cur, out);
        cur.resize(cur.size() - static_cast<std::size_t>(e));
    }
}

// Sparse accumulation of polynomial terms.
using TermMap = std::map<Monomial, Rational>;

Stress from_terms(int degree, const TermMap& acc) {
    Stress s;
    s.degree = degree;
    for (const auto& [m, c] : acc)
        if (c != 0) s.terms.emplace_back(m, c);
    return s;
}

void add_derivative(TermMap& acc, const Monomial& m, const Rational& coeff, const VectorQ& c, const StressDomain* dom) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0 && m[i] == m[i - 1]) continue;
        const int v = m[i];
        const Rational& cv = c(v);
        if (cv == 0) continue;
        auto last = std::upper_bound(m.begin(), m.end(), v);
        int mult = static_cast<int>(last - (m.begin() + static_cast<std::ptrdiff_t>(i)));
        Monomial lower = m;
        lower.erase(lower.begin() + static_cast<std::ptrdiff_t>(i));
        if (dom && !dom->admits(monomial_support(lower))) continue;
        acc[lower] += coeff * cv * mult;
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(const StressDomain& dom, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    if (k == 0) {
        if (dom.admits(Face{})) out.push_back({});
        return out;
    }
    for (int dim = 0; dim <= std::min(k - 1, dom.outer.dimension()); ++dim)
        for (Face f : dom.outer.faces(dim)) {
            if (!dom.admits(f)) continue;
            Monomial cur;
            compositions(f.elements(), 0, k, cur, out);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Face Stress::vertex_support() const {
    Face f;
    for (const auto& [m, c] : terms) f = f | monomial_support(m);
    return f;
}

Rational Stress::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m, [](const auto& t, const Monomial& x) { return t.first < x; });
    return (it != terms.end() && it->first == m) ? it->second : Rational(0);
}

Stress add_scaled(const Stress& a, const Stress& b, const Rational& s) {
    if (!a.is_zero() && !b.is_zero() && a.degree != b.degree) throw std::invalid_argument("degree mismatch");
    TermMap acc;
    for (const auto& [m, c] : a.terms) acc[m] += c;
    for (const auto& [m, c] : b.terms) acc[m] += s * c;
    return from_terms(a.is_zero() ? b.degree : a.degree, acc);
}

Stress scaled(const Stress& a, const Rational& s) {
    Stress out;
    out.degree = a.degree;
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms) out.terms.emplace_back(m, c * s);
    return out;
}

AbstractComplex support(const Stress& s, int ground_size) {
    std::vector<Face> facets;
    for (const auto& [m, c] : s.terms) facets.push_back(monomial_support(m));
    return AbstractComplex(ground_size, std::move(facets));
}

StressSpace stress_space(const StressDomain& dom, int k) {
    StressSpace s;
    s.degree = k;
    if (k < 0) return s;
    s.basis = monomial_basis(dom, k);
    if (k == 0) {
        for (const auto& m : s.basis) s.generators.push_back(Stress{0, {{m, Rational(1)}}});
        return s;
    }
    const std::vector<Monomial> lower = monomial_basis(dom, k - 1);
    std::map<Monomial, int> lower_index;
    for (std::size_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], static_cast<int>(i));
    const int d = dom.ambient_dim();
    const int nl = static_cast<int>(lower.size());

    std::vector<linalg::Triplet<Rational>> t;
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
        const Monomial& m = s.basis[j];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i > 0 && m[i] == m[i - 1]) continue;
            const int v = m[i];
            int mult = static_cast<int>(std::upper_bound(m.begin(), m.end(), v) - (m.begin() + static_cast<std::ptrdiff_t>(i)));
            Monomial dm = m;
            dm.erase(dm.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = lower_index.find(dm);
            if (it == lower_index.end()) continue;
            for (int r = 0; r < d; ++r)
                if (dom.coords(r, v) != 0)
                    t.push_back({r * nl + it->second, static_cast<int>(j), dom.coords(r, v) * mult});
        }
    }
    auto constraints = linalg::RationalMatrix::from_triplets(d * nl, static_cast<int>(s.basis.size()), std::move(t));
    for (const auto& x : linalg::kernel_basis(constraints)) {
        Stress g;
        g.degree = k;
        for (const auto& [col, val] : x) g.terms.emplace_back(s.basis[static_cast<std::size_t>(col)], val);
        s.generators.push_back(std::move(g));
    }
    return s;
}

StressSpace stress_space(const GeometricComplex& g, int k, const std::optional<AbstractComplex>& relative_to) {
    StressSpace s = relative_to ? stress_space(domain_of(g, *relative_to), k) : stress_space(domain_of(g), k);
    s.proper = is_proper(g);
    return s;
}

// Differentials --------------------------------------------------------------

LinearDifferential LinearDifferential::ones(int n) { return {VectorQ::Constant(n, Rational(1)), "ones"}; }

LinearDifferential LinearDifferential::vertex(int n, int v) {
    VectorQ c = VectorQ::Zero(n);
    c(v) = 1;
    return {c, "vertex"};
}

LinearDifferential LinearDifferential::subset(int n, Face w) {
    VectorQ c = VectorQ::Zero(n);
    for (int v : w) c(v) = 1;
    return {c, "subset"};
}

LinearDifferential LinearDifferential::color(int n, const Coloring& colors, int col) {
    VectorQ c = VectorQ::Zero(n);
    for (int v = 0; v < n; ++v)
        if (colors[static_cast<std::size_t>(v)] == col) c(v) = 1;
    return {c, "color"};
}

LinearDifferential LinearDifferential::generic(int n, std::uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    VectorQ c(n);
    for (int v = 0; v < n; ++v) c(v) = dist(rng);
    return {c, "generic"};
}

LinearDifferential LinearDifferential::from_row(const MatrixQ& coords, int row, std::string name) {
    return {coords.row(row).transpose(), std::move(name)};
}

Json LinearDifferential::to_json() const {
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < c.size(); ++i) coeffs.push_back(format_rational(c(i)));
    return {{"kind", name}, {"coefficients", coeffs}};
}

Stress apply_differential(const LinearDifferential& c, const Stress& s, const StressDomain* dom) {
    TermMap acc;
    for (const auto& [m, coeff] : s.terms) add_derivative(acc, m, coeff, c.c, dom);
    return from_terms(s.degree - 1, acc);
}

Stress apply_power(const LinearDifferential& c, int power, const Stress& s, const StressDomain* dom) {
    Stress out = s;
    for (int i = 0; i < power; ++i) out = apply_differential(c, out, dom);
    return out;
}

int MonomialIndex::id(const Monomial& m) {
    auto [it, inserted] = ids_.emplace(m, static_cast<int>(ids_.size()));
    return it->second;
}

linalg::RationalVector MonomialIndex::vector(const Stress& s) {
    linalg::RationalVector v;
    for (const auto& [m, c] : s.terms) v.emplace_back(id(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::vector<linalg::RationalVector> MonomialIndex::vectors(const std::vector<Stress>& s) {
    std::vector<linalg::RationalVector> out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(vector(x));
    return out;
}

int span_dim(const std::vector<Stress>& stresses) {
    MonomialIndex idx;
    auto v = idx.vectors(stresses);
    return linalg::span_rank(v, idx.size());
}

bool spans_contain(const std::vector<Stress>& space, const std::vector<Stress>& sub) {
    MonomialIndex idx;
    auto a = idx.vectors(space);
    auto b = idx.vectors(sub);
    return linalg::contained_in_span(b, a, idx.size());
}

Json MapRank::to_json() const {
    return {{"source_dim", source_dim}, {"target_dim", target_dim}, {"rank", rank},
            {"kernel_dim", kernel_dim()}, {"coker_dim", coker_dim()}};
}

MapRank map_rank(const LinearDifferential& c, const StressSpace& source, const StressSpace& target,
                 const StressDomain& dom, bool want_kernel, int power) {
    MapRank r;
    r.source_dim = source.dim();
    r.target_dim = target.dim();
    std::vector<Stress> images;
    for (const auto& g : source.generators) images.push_back(apply_power(c, power, g, &dom));
    MonomialIndex idx;
    auto vecs = idx.vectors(images);
    r.rank = linalg::span_rank(vecs, idx.size());
    if (want_kernel && r.rank < r.source_dim)
        for (const auto& rel : linalg::linear_relations(vecs, idx.size())) {
            Stress k;
            k.degree = source.degree;
            for (const auto& [i, coeff] : rel) k = add_scaled(k, source.generators[static_cast<std::size_t>(i)], coeff);
            r.kernel.push_back(std::move(k));
        }
    return r;
}

MapRank differential_rank(const StressDomain& dom, const LinearDifferential& c, int k, bool want_kernel) {
    return map_rank(c, stress_space(dom, k), stress_space(dom, k - 1), dom, want_kernel);
}

// Minkowski weights ------------------------------------------------------------

MinkowskiWeight squarefree_restriction(const StressDomain& dom, const Stress& s) {
    if (dom.outer.dimension() != dom.ambient_dim())
        throw std::invalid_argument("squarefree restriction needs a d-dimensional complex in R^d");
    MinkowskiWeight w;
    w.degree = s.degree;
    for (const auto& [m, c] : s.terms)
        if (std::adjacent_find(m.begin(), m.end()) == m.end()) w.values.emplace_back(monomial_support(m), c);
    std::sort(w.values.begin(), w.values.end());
    return w;
}

namespace {

MatrixQ face_columns(const MatrixQ& coords, Face f) {
    MatrixQ out(coords.rows(), f.size());
    int j = 0;
    for (int v : f) out.col(j++) = coords.col(v);
    return out;
}

}  // namespace

std::vector<MinkowskiWeight> minkowski_weight_space(const StressDomain& dom, int k) {
    std::vector<MinkowskiWeight> out;
    if (k < 0) return out;
    std::vector<Face> cols;
    for (Face f : dom.outer.faces(k - 1))
        if (dom.admits(f)) cols.push_back(f);
    std::vector<linalg::Triplet<Rational>> t;
    int row = 0;
    if (k >= 1)
        for (Face tau : dom.outer.faces(k - 2)) {
            if (!dom.admits(tau)) continue;
            MatrixQ vt = face_columns(dom.coords, tau);
            if (linalg::rank(vt) < tau.size()) throw std::domain_error("improper face " + to_string(tau));
            MatrixQ annihilator = linalg::kernel_basis(MatrixQ(vt.transpose()));
            for (Eigen::Index a = 0; a < annihilator.cols(); ++a, ++row)
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    if (!cols[j].contains(tau)) continue;
                    int apex = (cols[j] - tau).min();
                    Rational val = annihilator.col(a).dot(dom.coords.col(apex));
                    if (val != 0) t.push_back({row, static_cast<int>(j), val});
                }
        }
    auto m = linalg::RationalMatrix::from_triplets(row, static_cast<int>(cols.size()), std::move(t));
    for (const auto& x : linalg::kernel_basis(m)) {
        MinkowskiWeight w;
        w.degree = k;
        for (const auto& [j, val] : x) w.values.emplace_back(cols[static_cast<std::size_t>(j)], val);
        out.push_back(std::move(w));
    }
    return out;
}

bool satisfies_balancing(const StressDomain& dom, const MinkowskiWeight& w) {
    const int k = w.degree;
    if (k < 1) return true;
    for (Face tau : dom.outer.faces(k - 2)) {
        if (!dom.admits(tau)) continue;
        VectorQ sum = VectorQ::Zero(dom.ambient_dim());
        for (const auto& [sigma, c] : w.values)
            if (sigma.contains(tau)) sum += c * dom.coords.col((sigma - tau).min());
        MatrixQ vt = face_columns(dom.coords, tau);
        MatrixQ aug(vt.rows(), vt.cols() + 1);
        aug << vt, sum;
        if (linalg::rank(aug) != linalg::rank(vt)) return false;
    }
    return true;
}

// Cone lemmas ------------------------------------------------------------------

GeometricComplex projected_link(const GeometricComplex& g, int v) {
    VectorQ pv = g.coords().col(v);
    if (pv.isZero()) throw std::invalid_argument("vertex " + std::to_string(g.label(v)) + " sits at the origin");
    MatrixQ b = linalg::kernel_basis(MatrixQ(pv.transpose()));
    MatrixQ coords = b.transpose() * g.coords();
    return GeometricComplex(link(g.complex(), Face::singleton(v)), coords, g.coloring(), g.labels());
}

Report cone_lemma_check(const GeometricComplex& g, int v, int k) {
    Report r;
    r.theorem = "cone-lemma";
    const Face sv = Face::singleton(v);
    r.require("vertex of the complex", g.complex().contains(sv), {{"vertex", g.label(v)}});
    r.require("vertex away from the origin", !g.coords().col(v).isZero());
    if (!r.hypotheses_hold()) {
        r.conclude(false);
        return r;
    }
    const int n = g.ground_size();
    int dim_link = stress_space(domain_of(projected_link(g, v)), k).dim();
    StressDomain star_dom = domain_of(g, star(g.complex(), sv), std::nullopt);
    StressDomain open_dom = domain_of(g, open_star(g.complex(), v));
    StressSpace s_star = stress_space(star_dom, k);
    StressSpace s_open = stress_space(open_dom, k + 1);
    MapRank dv = map_rank(LinearDifferential::vertex(n, v), s_open, s_star, star_dom);
    r.ranks["vertex"] = g.label(v);
    r.ranks["k"] = k;
    r.ranks["dim_projected_link"] = dim_link;
    r.ranks["dim_star"] = s_star.dim();
    r.ranks["dim_open_star"] = s_open.dim();
    r.ranks["delta_v"] = dv.to_json();
    bool ok = dim_link == s_star.dim() && s_star.dim() == s_open.dim() && dv.injective() && dv.surjective();
    r.conclude(ok);
    return r;
}

// Shellings and partitions of unity ----------------------------------------------

namespace {

// F ∩ (union of `later`) is pure of dimension dim F - 1, or empty.
bool shelling_step_ok(Face f, const std::vector<Face>& later) {
    std::vector<Face> ridges;
    bool any_nonempty = false;
    for (Face g : later) {
        Face x = f & g;
        if (!x.empty()) any_nonempty = true;
        if (x.size() == f.size() - 1) ridges.push_back(x);
    }
    if (!any_nonempty) return true;
    for (Face g : later) {
        Face x = f & g;
        if (x.empty() && !ridges.empty()) continue;
        bool covered = std::any_of(ridges.begin(), ridges.end(), [&](Face rdg) { return rdg.contains(x); });
        if (!covered) return false;
    }
    return true;
}

}  // namespace

std::optional<std::string> shelling_violation(const AbstractComplex& complex, const std::vector<Face>& order) {
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != complex.facets()) return "order is not a permutation of the facets";
    if (!complex.is_pure()) return "complex is not pure";
    for (std::size_t j = 0; j < order.size(); ++j) {
        std::vector<Face> later(order.begin() + static_cast<std::ptrdiff_t>(j) + 1, order.end());
        if (!shelling_step_ok(order[j], later))
            return "step " + std::to_string(j + 1) + ": facet " + to_string(order[j]) +
                   " meets the later facets in a non-pure complex";
    }
    return std::nullopt;
}

ShellingSearch shelling_search(const AbstractComplex& complex, long long step_limit) {
    ShellingSearch out;
    const auto& facets = complex.facets();
    const std::size_t m = facets.size();
    if (!complex.is_pure()) {
        out.status = ShellingSearch::Status::none_exists;
        return out;
    }
    // Built back to front: chosen[0] is the last facet of the shelling.
    std::vector<Face> chosen;
    std::vector<bool> used(m, false);
    std::vector<std::size_t> next(1, 0);
    while (true) {
        if (chosen.size() == m) {
            out.order.assign(chosen.rbegin(), chosen.rend());
            out.status = ShellingSearch::Status::found;
            return out;
        }
        std::size_t& i = next.back();
        bool advanced = false;
        for (; i < m; ++i) {
            if (used[i]) continue;
            if (++out.steps > step_limit) {
                out.status = ShellingSearch::Status::inconclusive;
                return out;
            }
            if (shelling_step_ok(facets[i], chosen)) {
                used[i] = true;
                chosen.push_back(facets[i]);
                ++i;
                next.push_back(0);
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        next.pop_back();
        if (chosen.empty()) {
            out.status = ShellingSearch::Status::none_exists;
            return out;
        }
        Face last = chosen.back();
        chosen.pop_back();
        used[static_cast<std::size_t>(std::find(facets.begin(), facets.end(), last) - facets.begin())] = false;
    }
}

Report partition_of_unity_check(const GeometricComplex& g, int k, const std::vector<Face>& shelling) {
    if (auto bad = shelling_violation(g.complex(), shelling)) throw std::invalid_argument("invalid shelling: " + *bad);
    Report r;
    r.theorem = "partition";
    const int d = g.ambient_dim();
    r.require("k < d", k < d, {{"k", k}, {"d", d}});
    r.require("proper realization", is_proper(g));
    r.require("complex of dimension d-1", g.complex().dimension() == d - 1);
    StressSpace whole = stress_space(domain_of(g), k);
    std::vector<Stress> pieces;
    Json per_vertex = Json::array();
    for (int v : g.complex().vertices()) {
        StressSpace sv = stress_space(domain_of(g, star(g.complex(), Face::singleton(v)), std::nullopt), k);
        per_vertex.push_back({{"vertex", g.label(v)}, {"dim", sv.dim()}});
        pieces.insert(pieces.end(), sv.generators.begin(), sv.generators.end());
    }
    int image = span_dim(pieces);
    r.ranks["k"] = k;
    r.ranks["dim_S_k"] = whole.dim();
    r.ranks["image_rank"] = image;
    r.ranks["star_dims"] = per_vertex;
    r.conclude(spans_contain(pieces, whole.generators));
    return r;
}

Report balanced_partition_check(const GeometricComplex& g, int color) {
    if (!g.coloring() || !is_balanced(g.complex(), *g.coloring()))
        throw std::invalid_argument("balanced partition check needs a valid balancing coloring");
    const Coloring& colors = *g.coloring();
    Report r;
    r.theorem = "balanced-partition";
    const int d = g.complex().dimension() + 1;
    r.require("color in 1..d", color >= 1 && color <= d, {{"color", color}, {"d", d}});
    r.require("embedded in R^{d-1}", g.ambient_dim() == d - 1, {{"ambient_dim", g.ambient_dim()}});
    r.require("proper realization", is_proper(g));
    auto shell = shelling_search(g.complex());
    r.require("shellable", shell.status == ShellingSearch::Status::found);
    std::vector<int> others;
    for (int c = 1; c <= d; ++c)
        if (c != color) others.push_back(c);
    const Face target_vertices = color_class(g.complex(), colors, others);
    const AbstractComplex target = induced_subcomplex(g.complex(), target_vertices);
    const Face centers = color_class(g.complex(), colors, {color});
    bool all = true;
    Json degrees = Json::array();
    for (int j = 0; j <= d; ++j) {
        StressSpace t = stress_space(domain_of(g, target, std::nullopt), j);
        std::vector<Stress> pieces;
        for (int v : centers) {
            StressSpace lv = stress_space(domain_of(g, link(g.complex(), Face::singleton(v)), std::nullopt), j);
            pieces.insert(pieces.end(), lv.generators.begin(), lv.generators.end());
        }
        bool ok = spans_contain(pieces, t.generators);
        all = all && ok;
        degrees.push_back({{"degree", j}, {"target_dim", t.dim()}, {"image_rank", span_dim(pieces)}, {"surjective", ok}});
    }
    r.ranks["color"] = color;
    r.ranks["degrees"] = degrees;
    r.conclude(all);
    return r;
}

Report lefschetz_check(const GeometricComplex& g, const LinearDifferential& w) {
    Report r;
    r.theorem = "lefschetz";
    const int d = g.ambient_dim();
    r.require("proper realization", is_proper(g));
    r.require("complex of dimension d-1", g.complex().dimension() == d - 1);
    StressDomain dom = domain_of(g);
    bool all = true;
    Json per_k = Json::array();
    for (int k = 0; 2 * k <= d; ++k) {
        StressSpace hi = stress_space(dom, d - k);
        StressSpace lo = stress_space(dom, k);
        MapRank m = map_rank(w, hi, lo, dom, false, d - 2 * k);
        bool iso = m.injective() && m.surjective();
        all = all && iso;
        Json j = m.to_json();
        j["k"] = k;
        j["isomorphism"] = iso;
        per_k.push_back(j);
    }
    r.ranks["differential"] = w.name;
    r.ranks["maps"] = per_k;
    r.conclude(all);
    return r;
}

Json stress_to_json(const Stress& s, int ground_size) {
    Json out = Json::array();
    for (const auto& [m, c] : s.terms) out.push_back({{"monomial", exponents(m, ground_size)}, {"coeff", format_rational(c)}});
    return out;
}

Stress stress_from_json(const Json& j, int ground_size, int degree) {
    TermMap acc;
    for (const auto& term : j) {
        const auto& e = term.at("monomial");
        if (static_cast<int>(e.size()) != ground_size) throw std::invalid_argument("exponent list has the wrong length");
        Monomial m;
        int total = 0;
        for (int v = 0; v < ground_size; ++v) {
            int a = e[static_cast<std::size_t>(v)].get<int>();
            if (a < 0) throw std::invalid_argument("negative exponent");
            m.insert(m.end(), static_cast<std::size_t>(a), v);
            total += a;
        }
        if (total != degree) throw std::invalid_argument("monomial of the wrong degree");
        acc[m] += parse_rational(term.at("coeff").get<std::string>());
    }
    return from_terms(degree, acc);
}

}  // namespace stressca
