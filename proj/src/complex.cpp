#include "stressca/complex.hpp"

#include "stressca/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stressca {

void VertexSet::insert(int v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index outside [0, 64)");
    bits_ |= std::uint64_t{1} << v;
}

bool operator<(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // Equal sizes: compare sorted element lists lexicographically. The lowest
    // differing bit belongs to the lexicographically smaller set.
    std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    int low = std::countr_zero(diff);
    return (a.bits_ >> low) & 1U;
}

std::string to_string(Face f) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : f) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::vector<int> labeled(Face f, const std::vector<int>& labels) {
    std::vector<int> out;
    for (int v : f) out.push_back(labels.empty() ? v : labels[static_cast<std::size_t>(v)]);
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// AbstractComplex ----------------------------------------------------------

AbstractComplex::AbstractComplex(int ground_size, std::vector<Face> facets) : n_(ground_size) {
    if (ground_size < 0 || ground_size > VertexSet::kMaxVertices)
        throw std::invalid_argument("ground set size must lie in [0, 64]");
    const Face ground = VertexSet::range(ground_size);
    for (Face f : facets)
        if (!ground.contains(f)) throw std::invalid_argument("facet " + to_string(f) + " leaves the ground set");

    const std::size_t given = facets.size();
    std::sort(facets.begin(), facets.end(), [](Face a, Face b) { return b < a; });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Face f : facets) {
        bool redundant = std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return g.contains(f); });
        if (!redundant) facets_.push_back(f);
    }
    dropped_ = given - facets_.size();
    std::sort(facets_.begin(), facets_.end());

    int max_size = -1;
    for (Face f : facets_) {
        max_size = std::max(max_size, f.size());
        vertices_ = vertices_ | f;
        std::uint64_t bits = f.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            face_set_.insert(VertexSet(sub));
            if (sub == 0) break;
        }
    }
    dim_ = facets_.empty() ? -2 : max_size - 1;
    faces_by_dim_.resize(static_cast<std::size_t>(std::max(max_size + 1, 0)));
    for (Face f : face_set_) faces_by_dim_[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& bucket : faces_by_dim_) std::sort(bucket.begin(), bucket.end());
}

bool AbstractComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return f.size() == dim_ + 1; });
}

const std::vector<Face>& AbstractComplex::faces(int dim) const {
    static const std::vector<Face> none;
    auto idx = static_cast<std::size_t>(dim + 1);
    if (dim < -1 || idx >= faces_by_dim_.size()) return none;
    return faces_by_dim_[idx];
}

std::vector<Face> AbstractComplex::all_faces() const {
    std::vector<Face> out;
    out.reserve(face_set_.size());
    for (const auto& bucket : faces_by_dim_) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

RelativeComplex::RelativeComplex(AbstractComplex outer_complex, AbstractComplex inner_complex)
    : outer(std::move(outer_complex)), inner(std::move(inner_complex)) {
    for (Face f : inner.facets())
        if (!outer.contains(f)) throw std::invalid_argument("relative complex: inner face " + to_string(f) + " not in outer");
    induced = induced_subcomplex(outer, inner.vertices()) == inner;
}

std::vector<Face> RelativeComplex::relative_faces(int dim) const {
    std::vector<Face> out;
    for (Face f : outer.faces(dim))
        if (!inner.contains(f)) out.push_back(f);
    return out;
}

// GeometricComplex ---------------------------------------------------------

GeometricComplex::GeometricComplex(AbstractComplex complex, MatrixQ coords, std::optional<Coloring> coloring,
                                   std::vector<int> labels)
    : complex_(std::move(complex)), coords_(std::move(coords)), coloring_(std::move(coloring)),
      labels_(std::move(labels)) {
    if (coords_.cols() != complex_.ground_size())
        throw std::invalid_argument("coordinate matrix needs one column per ground-set vertex");
    if (labels_.empty())
        for (int i = 0; i < complex_.ground_size(); ++i) labels_.push_back(i + 1);
    if (static_cast<int>(labels_.size()) != complex_.ground_size())
        throw std::invalid_argument("label list has the wrong length");
    if (coloring_ && static_cast<int>(coloring_->size()) != complex_.ground_size())
        throw std::invalid_argument("coloring has the wrong length");
}

GeometricComplex GeometricComplex::with_complex(AbstractComplex complex) const {
    if (complex.ground_size() != ground_size()) throw std::invalid_argument("ground set mismatch");
    return GeometricComplex(std::move(complex), coords_, coloring_, labels_);
}

GeometricComplex GeometricComplex::with_coords(MatrixQ coords) const {
    return GeometricComplex(complex_, std::move(coords), coloring_, labels_);
}

// Operations ---------------------------------------------------------------

namespace {

void require_face(const AbstractComplex& c, Face sigma) {
    if (!c.contains(sigma)) throw std::domain_error("not a face of the complex: " + to_string(sigma));
}

}  // namespace

AbstractComplex star(const AbstractComplex& complex, Face sigma) {
    require_face(complex, sigma);
    std::vector<Face> facets;
    for (Face f : complex.facets())
        if (f.contains(sigma)) facets.push_back(f);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex link(const AbstractComplex& complex, Face sigma) {
    require_face(complex, sigma);
    std::vector<Face> facets;
    for (Face f : complex.facets())
        if (f.contains(sigma)) facets.push_back(f - sigma);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex star_boundary(const AbstractComplex& complex, Face sigma) {
    require_face(complex, sigma);
    std::vector<Face> facets;
    for (Face f : complex.facets())
        if (f.contains(sigma))
            for (int v : sigma) facets.push_back(f.without(v));
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

RelativeComplex open_star(const AbstractComplex& complex, int v) {
    Face s = VertexSet::singleton(v);
    return RelativeComplex(star(complex, s), star_boundary(complex, s));
}

AbstractComplex induced_subcomplex(const AbstractComplex& complex, Face vertex_set) {
    if (complex.is_void()) return complex;
    std::vector<Face> facets;
    for (Face f : complex.facets()) facets.push_back(f & vertex_set);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex skeleton(const AbstractComplex& complex, int max_dim) {
    std::vector<Face> facets;
    for (Face f : complex.facets()) {
        if (f.size() - 1 <= max_dim) facets.push_back(f);
    }
    for (Face f : complex.faces(max_dim)) facets.push_back(f);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex generated_by_dim_at_least(const AbstractComplex& complex, int min_dim) {
    std::vector<Face> facets;
    for (Face f : complex.facets())
        if (f.size() - 1 >= min_dim) facets.push_back(f);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex complex_union(const AbstractComplex& a, const AbstractComplex& b) {
    if (a.ground_size() != b.ground_size()) throw std::invalid_argument("ground set mismatch");
    std::vector<Face> facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    return AbstractComplex(a.ground_size(), std::move(facets));
}

AbstractComplex complex_intersection(const AbstractComplex& a, const AbstractComplex& b) {
    if (a.ground_size() != b.ground_size()) throw std::invalid_argument("ground set mismatch");
    std::vector<Face> facets;
    for (Face f : a.facets())
        for (Face g : b.facets()) facets.push_back(f & g);
    return AbstractComplex(a.ground_size(), std::move(facets));
}

AbstractComplex join_simplex(const AbstractComplex& complex, Face apexes) {
    if (complex.vertices().intersects(apexes)) throw std::invalid_argument("join with overlapping vertices");
    std::vector<Face> facets;
    for (Face f : complex.facets()) facets.push_back(f | apexes);
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex join_points(const AbstractComplex& complex, Face apexes) {
    if (complex.vertices().intersects(apexes)) throw std::invalid_argument("join with overlapping vertices");
    std::vector<Face> facets;
    for (Face f : complex.facets())
        for (int a : apexes) facets.push_back(f.with(a));
    return AbstractComplex(complex.ground_size(), std::move(facets));
}

AbstractComplex clique_complex(const AbstractComplex& complex, int k, const Coloring* colors) {
    if (k < 1) throw std::invalid_argument("clique_complex needs k >= 1");
    const std::vector<int> verts = complex.vertices().elements();
    std::vector<Face> found;

    // Extends σ by vertices above max(σ); σ ∪ {w} qualifies when every τ ⊆ σ
    // with |τ| <= k-1 has τ ∪ {w} in Δ (σ itself already qualifies).
    auto extendable = [&](Face sigma, int w) {
        if (colors) {
            int cw = (*colors)[static_cast<std::size_t>(w)];
            for (int u : sigma)
                if ((*colors)[static_cast<std::size_t>(u)] == cw) return false;
        }
        std::uint64_t bits = sigma.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            VertexSet tau(sub);
            if (tau.size() <= k - 1 && !complex.contains(tau.with(w))) return false;
            if (sub == 0) break;
        }
        return true;
    };

    std::vector<std::pair<Face, std::size_t>> stack{{Face{}, 0}};
    while (!stack.empty()) {
        auto [sigma, next] = stack.back();
        stack.pop_back();
        bool maximal = true;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int w = verts[i];
            if (sigma.contains(w)) continue;
            if (!extendable(sigma, w)) continue;
            maximal = false;
            if (i >= next) stack.emplace_back(sigma.with(w), i + 1);
        }
        if (maximal) found.push_back(sigma);
    }
    if (complex.is_void()) return complex;
    return AbstractComplex(complex.ground_size(), std::move(found));
}

std::vector<Face> missing_faces(const AbstractComplex& complex, int dmin, int dmax) {
    std::vector<Face> out;
    const Face verts = complex.vertices();
    for (int s = std::max(dmin + 1, 1); s <= std::min(dmax + 1, complex.dimension() + 2); ++s) {
        for (Face tau : complex.faces(s - 2)) {
            for (int w : verts) {
                if (!tau.empty() && w <= tau.max()) continue;
                Face sigma = tau.with(w);
                if (complex.contains(sigma)) continue;
                bool boundary_present = true;
                for (int u : sigma)
                    if (!complex.contains(sigma.without(u))) {
                        boundary_present = false;
                        break;
                    }
                if (boundary_present) out.push_back(sigma);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FHGVector fhg_vectors(const AbstractComplex& complex) {
    FHGVector r;
    const int D = complex.dimension() + 1;
    for (int i = -1; i < D; ++i) r.f.push_back(static_cast<long long>(complex.faces(i).size()));
    if (complex.is_void() || !complex.is_pure()) return r;
    std::vector<long long> h(static_cast<std::size_t>(D + 1), 0);
    for (int k = 0; k <= D; ++k)
        for (int i = 0; i <= k; ++i) {
            long long term = binomial(D - i, k - i) * r.f[static_cast<std::size_t>(i)];
            h[static_cast<std::size_t>(k)] += ((k - i) % 2 == 0) ? term : -term;
        }
    std::vector<long long> g(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) g[i] = h[i] - (i > 0 ? h[i - 1] : 0);
    r.h = std::move(h);
    r.g = std::move(g);
    return r;
}

std::vector<long long> f_from_h(const std::vector<long long>& h) {
    const int D = static_cast<int>(h.size()) - 1;
    std::vector<long long> f(h.size(), 0);
    for (int j = 0; j <= D; ++j)
        for (int i = 0; i <= j; ++i) f[static_cast<std::size_t>(j)] += binomial(D - i, j - i) * h[static_cast<std::size_t>(i)];
    return f;
}

bool is_balanced(const AbstractComplex& complex, const Coloring& colors) {
    if (static_cast<int>(colors.size()) != complex.ground_size()) return false;
    const int D = complex.dimension() + 1;
    for (int v : complex.vertices()) {
        int c = colors[static_cast<std::size_t>(v)];
        if (c < 1 || c > D) return false;
    }
    for (Face f : complex.facets()) {
        std::uint64_t seen = 0;
        for (int v : f) {
            std::uint64_t bit = std::uint64_t{1} << colors[static_cast<std::size_t>(v)];
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    return true;
}

Face color_class(const AbstractComplex& complex, const Coloring& colors, const std::vector<int>& colors_wanted) {
    Face out;
    for (int v : complex.vertices())
        if (std::find(colors_wanted.begin(), colors_wanted.end(), colors[static_cast<std::size_t>(v)]) !=
            colors_wanted.end())
            out.insert(v);
    return out;
}

std::optional<Face> improper_face(const GeometricComplex& g) {
    const int d = g.ambient_dim();
    const auto& c = g.complex();
    for (int dim = 0; dim < d && dim <= c.dimension(); ++dim) {
        for (Face f : c.faces(dim)) {
            MatrixQ cols(d, f.size());
            int j = 0;
            for (int v : f) cols.col(j++) = g.coords().col(v);
            if (linalg::rank(cols) < f.size()) return f;
        }
    }
    return std::nullopt;
}

}  // namespace stressca
