#ifndef STRESSCA_COMPLEX_HPP
#define STRESSCA_COMPLEX_HPP

#include "stressca/rational.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace stressca {

/// A finite set of vertex indices in [0, 64), iterated in increasing order.
/// Faces, supports and vertex subsets are all VertexSets.
class VertexSet {
public:
    static constexpr int kMaxVertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }
    static VertexSet range(int n) {
        return VertexSet(n >= kMaxVertices ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return (bits_ >> v) & 1U; }
    bool contains(VertexSet s) const { return (s.bits_ & ~bits_) == 0; }
    bool intersects(VertexSet s) const { return (bits_ & s.bits_) != 0; }
    int min() const { return std::countr_zero(bits_); }
    int max() const { return 63 - std::countl_zero(bits_); }

    void insert(int v);
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) = default;
    /// Shortlex: smaller sets first, then lexicographic on sorted elements.
    friend bool operator<(VertexSet a, VertexSet b);

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> elements() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

using Face = VertexSet;

/// Simplicial complex on the ground set {0, ..., n-1}, stored by its facets.
///
/// All faces are materialized at construction; the object is immutable
/// afterwards. The void complex (no faces at all) is distinct from the
/// complex {∅} whose only face is the empty face.
class AbstractComplex {
public:
    AbstractComplex() = default;
    /// Facets are canonicalized: duplicates and non-maximal sets are dropped
    /// (counted in dropped_facets()).
    AbstractComplex(int ground_size, std::vector<Face> facets);

    static AbstractComplex void_complex(int ground_size) { return AbstractComplex(ground_size, {}); }
    static AbstractComplex empty_face(int ground_size) { return AbstractComplex(ground_size, {Face{}}); }
    static AbstractComplex simplex(int ground_size, Face vertices) { return AbstractComplex(ground_size, {vertices}); }

    int ground_size() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    int dimension() const { return dim_; }
    bool is_void() const { return facets_.empty(); }
    bool is_pure() const;
    std::size_t dropped_facets() const { return dropped_; }

    bool contains(Face f) const { return face_set_.contains(f); }
    /// Faces of dimension `dim` in shortlex order; dim = -1 gives {∅}.
    const std::vector<Face>& faces(int dim) const;
    std::vector<Face> all_faces() const;
    std::size_t face_count() const { return face_set_.size(); }
    Face vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }

    friend bool operator==(const AbstractComplex& a, const AbstractComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    int n_ = 0;
    int dim_ = -2;
    std::size_t dropped_ = 0;
    Face vertices_;
    std::vector<Face> facets_;
    std::vector<std::vector<Face>> faces_by_dim_;  // index dim + 1
    std::unordered_set<Face, VertexSetHash> face_set_;
};

/// Pair (Δ, Γ) with Γ ⊆ Δ. Relative faces are the faces of Δ not in Γ.
struct RelativeComplex {
    AbstractComplex outer;
    AbstractComplex inner;
    bool induced = false;

    RelativeComplex(AbstractComplex outer_complex, AbstractComplex inner_complex);
    bool is_relative_face(Face f) const { return outer.contains(f) && !inner.contains(f); }
    std::vector<Face> relative_faces(int dim) const;
};

/// Vertex colors in 1..c; 0 marks "no color" (vertex outside the complex).
using Coloring = std::vector<int>;

/// Abstract complex with exact vertex coordinates: column j of `coords` is the
/// position of vertex j in Q^d.
class GeometricComplex {
public:
    GeometricComplex() = default;
    GeometricComplex(AbstractComplex complex, MatrixQ coords, std::optional<Coloring> coloring = std::nullopt,
                     std::vector<int> labels = {});

    const AbstractComplex& complex() const { return complex_; }
    const MatrixQ& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.rows()); }
    int ground_size() const { return complex_.ground_size(); }
    const std::optional<Coloring>& coloring() const { return coloring_; }
    /// External vertex ids (1-based by default).
    const std::vector<int>& labels() const { return labels_; }
    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    /// Same coordinates and labels, different combinatorics.
    GeometricComplex with_complex(AbstractComplex complex) const;
    GeometricComplex with_coords(MatrixQ coords) const;

private:
    AbstractComplex complex_;
    MatrixQ coords_;
    std::optional<Coloring> coloring_;
    std::vector<int> labels_;
};

struct FHGVector {
    std::vector<long long> f;  // f[0] = f_{-1} = 1
    std::optional<std::vector<long long>> h;
    std::optional<std::vector<long long>> g;  // g_i = h_i - h_{i-1}, i = 0..dim+1
};

// Faces, stars and links --------------------------------------------------

AbstractComplex star(const AbstractComplex& complex, Face sigma);
AbstractComplex link(const AbstractComplex& complex, Face sigma);
/// Faces of St_σ Δ not containing σ.
AbstractComplex star_boundary(const AbstractComplex& complex, Face sigma);
RelativeComplex open_star(const AbstractComplex& complex, int v);

AbstractComplex induced_subcomplex(const AbstractComplex& complex, Face vertex_set);
AbstractComplex skeleton(const AbstractComplex& complex, int max_dim);
/// Subcomplex generated by the faces of dimension >= min_dim.
AbstractComplex generated_by_dim_at_least(const AbstractComplex& complex, int min_dim);
AbstractComplex complex_union(const AbstractComplex& a, const AbstractComplex& b);
AbstractComplex complex_intersection(const AbstractComplex& a, const AbstractComplex& b);
/// Join with a disjoint vertex set spanning a simplex (cone for one apex).
AbstractComplex join_simplex(const AbstractComplex& complex, Face apexes);
/// Join with the 0-dimensional complex on `apexes` (suspension for two apexes).
AbstractComplex join_points(const AbstractComplex& complex, Face apexes);

/// Cl_k Δ = {σ ⊆ Δ^(0) : every subset of σ with at most k elements is a face}.
/// With `colors`, only sets whose vertices carry distinct colors qualify.
AbstractComplex clique_complex(const AbstractComplex& complex, int k, const Coloring* colors = nullptr);

/// Minimal nonfaces on the vertex set of Δ with dmin <= dim <= dmax.
std::vector<Face> missing_faces(const AbstractComplex& complex, int dmin, int dmax);

FHGVector fhg_vectors(const AbstractComplex& complex);
/// Inverse transform; used to check the f/h round trip.
std::vector<long long> f_from_h(const std::vector<long long>& h);

bool is_balanced(const AbstractComplex& complex, const Coloring& colors);
/// Vertices of Δ whose color is in `colors_wanted`.
Face color_class(const AbstractComplex& complex, const Coloring& colors, const std::vector<int>& colors_wanted);

/// First face of dimension < d whose vertex columns are linearly dependent,
/// or nullopt when the realization is proper.
std::optional<Face> improper_face(const GeometricComplex& g);
inline bool is_proper(const GeometricComplex& g) { return !improper_face(g).has_value(); }

long long binomial(int n, int k);
std::string to_string(Face f);
/// Elements of f mapped through `labels` (identity when labels is empty).
std::vector<int> labeled(Face f, const std::vector<int>& labels);

}  // namespace stressca

#endif  // STRESSCA_COMPLEX_HPP
