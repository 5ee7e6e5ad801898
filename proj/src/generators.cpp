#include "stressca/generators.hpp"

#include "stressca/homology.hpp"
#include "stressca/linalg.hpp"
#include "stressca/stress.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stressca {

namespace {

std::vector<Face> subsets_of_size(int n, int size) {
    std::vector<Face> out;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    if (size > n) return out;
    while (true) {
        Face f;
        for (int i : idx) f.insert(i);
        out.push_back(f);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// a with a·v = 1 for every vertex v of the facet.
VectorQ facet_functional(const MatrixQ& coords, Face f) {
    const int d = static_cast<int>(coords.rows());
    MatrixQ vt(f.size(), d);
    int r = 0;
    for (int v : f) vt.row(r++) = coords.col(v).transpose();
    auto a = linalg::solve(linalg::RationalMatrix::from_dense(vt), VectorQ::Constant(f.size(), Rational(1)));
    if (!a) throw std::logic_error("facet hyperplane through the origin");
    return *a;
}

}  // namespace

GeometricComplex gen_simplex_boundary(int d) {
    if (d < 1) throw std::invalid_argument("simplex boundary needs d >= 1");
    MatrixQ coords = MatrixQ::Zero(d, d + 1);
    for (int i = 0; i < d; ++i) {
        coords(i, i) = 1;
        coords(i, d) = -1;
    }
    std::vector<Face> facets;
    for (int v = 0; v <= d; ++v) facets.push_back(Face::range(d + 1).without(v));
    return GeometricComplex(AbstractComplex(d + 1, facets), coords);
}

GeometricComplex gen_cross_polytope_boundary(int d) {
    if (d < 1) throw std::invalid_argument("cross-polytope boundary needs d >= 1");
    const int n = 2 * d;
    MatrixQ coords = MatrixQ::Zero(d, n);
    Coloring colors(static_cast<std::size_t>(n));
    for (int i = 0; i < d; ++i) {
        coords(i, 2 * i) = 1;
        coords(i, 2 * i + 1) = -1;
        colors[static_cast<std::size_t>(2 * i)] = colors[static_cast<std::size_t>(2 * i + 1)] = i + 1;
    }
    std::vector<Face> facets;
    for (std::uint32_t signs = 0; signs < (1U << d); ++signs) {
        Face f;
        for (int i = 0; i < d; ++i) f.insert(2 * i + static_cast<int>((signs >> i) & 1U));
        facets.push_back(f);
    }
    return GeometricComplex(AbstractComplex(n, facets), coords, colors);
}

GeometricComplex gen_cyclic_boundary(int d, int n) {
    if (d < 2 || n < d + 1) throw std::invalid_argument("cyclic polytope needs d >= 2 and n >= d+1");
    MatrixQ coords(d, n);
    for (int j = 0; j < n; ++j) {
        Rational p = 1;
        for (int i = 0; i < d; ++i) {
            p *= (j + 1);
            coords(i, j) = p;
        }
    }
    for (int i = 0; i < d; ++i) {
        Rational mean = coords.row(i).sum() / n;
        for (int j = 0; j < n; ++j) coords(i, j) -= mean;
    }
    std::vector<Face> facets;
    for (Face s : subsets_of_size(n, d)) {
        bool even = true;
        for (int i = 0; i < n && even; ++i)
            for (int j = i + 1; j < n && even; ++j) {
                if (s.contains(i) || s.contains(j)) continue;
                int between = 0;
                for (int x = i + 1; x < j; ++x) between += s.contains(x) ? 1 : 0;
                even = between % 2 == 0;
            }
        if (even) facets.push_back(s);
    }
    return GeometricComplex(AbstractComplex(n, facets), coords);
}

GeometricComplex gen_stacked_boundary(int d, int n) {
    if (n < d + 1) throw std::invalid_argument("stacked polytope needs n >= d+1");
    GeometricComplex base = gen_simplex_boundary(d);
    MatrixQ coords = MatrixQ::Zero(d, n);
    coords.leftCols(d + 1) = base.coords();
    std::vector<Face> facets = base.complex().facets();
    for (int v = d + 1; v < n; ++v) {
        std::sort(facets.begin(), facets.end());
        const Face target = facets.front();
        MatrixQ current = coords.leftCols(v);
        VectorQ a = facet_functional(current, target);
        VectorQ centroid = VectorQ::Zero(d);
        for (int u : target) centroid += current.col(u);
        centroid /= target.size();
        std::vector<VectorQ> others;
        for (Face f : facets)
            if (f != target) others.push_back(facet_functional(current, f));
        Rational t = 1;
        VectorQ p;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw std::logic_error("no beyond-point found");
            p = centroid + t * a;
            bool sees_only_target = a.dot(p) > 1;
            for (const auto& b : others) sees_only_target = sees_only_target && b.dot(p) < 1;
            if (sees_only_target) break;
            t /= 2;
        }
        coords.col(v) = p;
        facets.erase(facets.begin());
        for (int u : target) facets.push_back(target.without(u).with(v));
    }
    GeometricComplex out(AbstractComplex(n, facets), coords);
    if (!is_proper(out)) throw std::logic_error("stacked polytope realization is improper");
    return out;
}

GeometricComplex gen_bowtie() {
    MatrixQ coords(3, 5);
    coords << 0, 1, 0, -1, 0,
              0, 0, 1, 0, -1,
              1, 0, 0, 0, 0;
    return GeometricComplex(AbstractComplex(5, {{0, 1, 2}, {0, 3, 4}}), coords);
}

GeometricComplex generic_projection(const GeometricComplex& g, int m, std::uint64_t seed, std::vector<std::string>* log) {
    const int d = g.ambient_dim();
    if (m > d || m < 0) throw std::invalid_argument("projection target dimension must lie in [0, d]");
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(s);
        std::uniform_int_distribution<int> dist(-50, 50);
        MatrixQ p(m, d);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < d; ++j) p(i, j) = dist(rng);
        GeometricComplex image = g.with_coords(p * g.coords());
        if (is_proper(image)) return image;
        if (log) log->push_back("projection seed " + std::to_string(s) + " gave an improper image; resampling");
    }
    throw std::runtime_error("no proper generic projection found in 10 attempts");
}

// Cl_k triangulations ---------------------------------------------------------------

namespace {

std::vector<long long> stress_g(const GeometricComplex& g, int top) {
    std::vector<long long> dims;
    for (int k = 0; k <= top; ++k) dims.push_back(stress_space(domain_of(g), k).dim());
    std::vector<long long> out;
    for (std::size_t k = 0; k < dims.size(); ++k) out.push_back(dims[k] - (k > 0 ? dims[k - 1] : 0));
    return out;
}

}  // namespace

StackedTriangulation k_stacked_triangulation(const GeometricComplex& boundary, int k) {
    StackedTriangulation out;
    Report& r = out.report;
    r.theorem = "k-stacked-triangulation";
    const int d = boundary.ambient_dim();
    const auto& delta = boundary.complex();
    r.require("k >= 1", k >= 1);
    r.require("k <= d/2", 2 * k <= d, {{"k", k}, {"d", d}});
    r.require("sphere of dimension d-1 in R^d", delta.dimension() == d - 1 && is_proper(boundary));
    auto g = stress_g(boundary, std::max(k, 0));
    long long gk = k >= 0 ? g[static_cast<std::size_t>(k)] : 0;
    r.require("g_k = 0", gk == 0, {{"g_k", gk}});
    if (k < 1) {
        r.conclude(false);
        return out;
    }
    out.complex = clique_complex(delta, k);
    const auto& cl = out.complex;
    std::optional<Face> interior;
    for (int dim = 0; dim <= d - k && !interior; ++dim)
        for (Face f : cl.faces(dim))
            if (!delta.contains(f)) {
                interior = f;
                break;
            }
    auto cm = reisner_cm_check(cl, boundary.labels());
    bool acyclic = is_acyclic(cl);
    r.ranks["clique_dimension"] = cl.dimension();
    r.ranks["clique_facets"] = cl.facets().size();
    r.ranks["no_interior_faces_up_to_d_minus_k"] = !interior.has_value();
    r.ranks["cohen_macaulay"] = cm.verdict == Verdict::verified;
    r.ranks["acyclic"] = acyclic;
    std::vector<int> betti;
    for (int i = -1; i <= cl.dimension(); ++i) betti.push_back(reduced_betti(cl, i));
    r.ranks["reduced_betti_from_minus_one"] = betti;
    Json w = Json::object();
    if (interior) w["interior_face"] = labeled(*interior, boundary.labels());
    if (!cm.witness.is_null()) w["cm_violation"] = cm.witness;
    if (!w.empty()) r.witness = w;
    r.conclude(!interior && cm.verdict == Verdict::verified && acyclic);
    return out;
}

// Balanced clique complex ---------------------------------------------------------

std::optional<std::vector<int>> find_isomorphism(const AbstractComplex& a, const AbstractComplex& b) {
    const std::vector<int> va = a.vertices().elements();
    const std::vector<int> vb = b.vertices().elements();
    if (va.size() != vb.size() || a.facets().size() != b.facets().size() || a.dimension() != b.dimension())
        return std::nullopt;
    auto facet_degree = [](const AbstractComplex& c, int v) {
        int n = 0;
        for (Face f : c.facets()) n += f.contains(v) ? 1 : 0;
        return n;
    };
    std::vector<int> map(static_cast<std::size_t>(a.ground_size()), -1);
    std::vector<bool> taken(static_cast<std::size_t>(b.ground_size()), false);
    Face mapped;

    // Facets of a whose vertices are all mapped must land on facets of b.
    auto consistent = [&]() {
        for (Face f : a.facets()) {
            if (!mapped.contains(f)) continue;
            Face img;
            for (int v : f) img.insert(map[static_cast<std::size_t>(v)]);
            if (!std::binary_search(b.facets().begin(), b.facets().end(), img)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == va.size()) return true;
        const int v = va[i];
        const int dv = facet_degree(a, v);
        for (int w : vb) {
            if (taken[static_cast<std::size_t>(w)] || facet_degree(b, w) != dv) continue;
            map[static_cast<std::size_t>(v)] = w;
            taken[static_cast<std::size_t>(w)] = true;
            mapped.insert(v);
            if (consistent() && extend(i + 1)) return true;
            mapped.erase(v);
            taken[static_cast<std::size_t>(w)] = false;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map;
}

bool is_cross_polytope_boundary(const AbstractComplex& c) {
    const int n = c.vertex_count();
    if (n == 0 || n % 2 != 0) return false;
    return find_isomorphism(c, gen_cross_polytope_boundary(n / 2).complex()).has_value();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

AbstractComplex regrounded(const AbstractComplex& c, int ground) { return AbstractComplex(ground, c.facets()); }

}  // namespace

BalancedClique balanced_clique_complex(const GeometricComplex& g, int k) {
    if (!g.coloring() || !is_balanced(g.complex(), *g.coloring()))
        throw std::invalid_argument("balanced clique complex needs a valid balancing coloring");
    if (k < 1) throw std::invalid_argument("balanced clique complex needs k >= 1");
    const Coloring& colors = *g.coloring();
    const AbstractComplex& delta = g.complex();
    const int n = g.ground_size();
    const int d = delta.dimension() + 1;

    struct Antipode {
        int v, w;
        AbstractComplex span;
        int stress_dim = 0;
        int center = -1;
    };
    std::vector<Antipode> pairs;
    for (int v : delta.vertices())
        for (int w : delta.vertices()) {
            if (w <= v || colors[static_cast<std::size_t>(v)] != colors[static_cast<std::size_t>(w)]) continue;
            AbstractComplex common = complex_intersection(star(delta, Face::singleton(v)), star(delta, Face::singleton(w)));
            AbstractComplex thick = generated_by_dim_at_least(common, k - 2);
            Antipode a{v, w, AbstractComplex::void_complex(n)};
            if (!thick.is_void()) {
                a.span = join_points(thick, Face{v, w});
                a.stress_dim = stress_space(domain_of(g, star(a.span, Face::singleton(v)), std::nullopt), k - 1).dim();
            }
            pairs.push_back(std::move(a));
        }

    UnionFind uf(static_cast<int>(pairs.size()));
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            if (p == q || pairs[p].stress_dim == 0 || pairs[q].stress_dim == 0) continue;
            if (pairs[p].span.vertices().contains(Face{pairs[q].v, pairs[q].w}))
                uf.unite(static_cast<int>(p), static_cast<int>(q));
        }
    std::map<int, int> class_center;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (pairs[p].stress_dim == 0) continue;
        int root = uf.find(static_cast<int>(p));
        auto it = class_center.find(root);
        if (it == class_center.end()) it = class_center.emplace(root, n + static_cast<int>(class_center.size())).first;
        pairs[p].center = it->second;
    }
    const int ground = n + static_cast<int>(class_center.size());
    if (ground > VertexSet::kMaxVertices) throw std::runtime_error("too many centers");

    AbstractComplex built = regrounded(delta, ground);
    for (const auto& a : pairs)
        if (a.center >= 0) built = complex_union(built, join_simplex(regrounded(a.span, ground), Face::singleton(a.center)));
    Coloring ext = colors;
    ext.resize(static_cast<std::size_t>(ground), d + 1);
    AbstractComplex result = clique_complex(built, k, &ext);

    MatrixQ coords = MatrixQ::Zero(g.ambient_dim(), ground);
    coords.leftCols(n) = g.coords();
    std::vector<int> labels = g.labels();
    int next_label = *std::max_element(labels.begin(), labels.end()) + 1;
    for (int c = n; c < ground; ++c) labels.push_back(next_label++);

    BalancedClique out{GeometricComplex(result, coords, ext, labels), Report{}};
    Report& r = out.report;
    r.theorem = "balanced-clique";
    r.require("balanced coloring", true);
    r.notes.push_back("centers sit at the origin and carry color d+1");
    r.notes.push_back("antipode spans are formed in the input complex, so no center enters a stress test");
    r.notes.push_back("center identification is closed transitively");
    r.notes.push_back("the final k-clique closure only admits sets with pairwise distinct colors");

    Json antipodes = Json::array();
    for (const auto& a : pairs)
        antipodes.push_back({{"pair", {g.label(a.v), g.label(a.w)}},
                             {"span_vertices", labeled(a.span.vertices(), g.labels())},
                             {"stress_dim", a.stress_dim},
                             {"center", a.center >= 0 ? Json(labels[static_cast<std::size_t>(a.center)]) : Json(nullptr)}});
    r.ranks["antipodes"] = antipodes;
    r.ranks["centers"] = class_center.size();

    std::vector<int> betti;
    bool acyclic = true;
    for (int i = -1; i <= result.dimension(); ++i) {
        betti.push_back(reduced_betti(result, i));
        acyclic = acyclic && betti.back() == 0;
    }
    r.ranks["reduced_betti_from_minus_one"] = betti;

    const Face center_set = Face::range(ground) - Face::range(n);
    std::optional<Face> interior;
    for (int dim = 0; dim <= d - k && !interior; ++dim)
        for (Face f : result.faces(dim))
            if (!f.intersects(center_set) && !delta.contains(f)) {
                interior = f;
                break;
            }
    bool links_ok = true;
    Json links = Json::array();
    for (int c : center_set) {
        bool present = result.contains(Face::singleton(c));
        bool cross = present && is_cross_polytope_boundary(link(result, Face::singleton(c)));
        links_ok = links_ok && cross;
        links.push_back({{"center", labels[static_cast<std::size_t>(c)]}, {"crosspolytope_link", cross}});
    }
    r.ranks["acyclic"] = acyclic;
    r.ranks["boundary_faces_up_to_d_minus_k"] = !interior.has_value();
    r.ranks["center_links"] = links;
    if (interior) r.witness = {{"interior_face", labeled(*interior, labels)}};
    r.conclude(acyclic && !interior && links_ok);
    return out;
}

CutInstance gen_bipyramid_split() {
    GeometricComplex whole = gen_cross_polytope_boundary(3);
    const auto& oct = whole.complex();
    return {whole, star(oct, Face::singleton(4)), star(oct, Face::singleton(5))};
}

}  // namespace stressca
