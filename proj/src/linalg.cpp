#include "stressca/linalg.hpp"

#include <boost/integer/common_factor.hpp>

#include <limits>
#include <numeric>

namespace stressca::linalg {

namespace {

using IntRow = SparseVector<Integer>;

Integer content(const IntRow& row) {
    Integer g = 0;
    for (const auto& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntRow& row) {
    if (row.empty()) return;
    Integer g = content(row);
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& entry : row) entry.second /= g;
}

const Integer* find_entry(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

std::size_t bit_size(const Integer& v) {
    return v == 0 ? 0 : msb(abs(v)) + 1;
}

}  // namespace

SparseVector<Integer> primitive_integer_row(const SparseVector<Integer>& row) {
    IntRow out;
    out.reserve(row.size());
    for (const auto& e : row)
        if (e.second != 0) out.push_back(e);
    make_primitive(out);
    return out;
}

SparseVector<Integer> primitive_integer_row(const SparseVector<Rational>& row) {
    Integer l = 1;
    for (const auto& [c, v] : row) {
        Integer d = denominator_of(v);
        l = l / gcd(l, d) * d;
    }
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
        if (v != 0) out.emplace_back(c, numerator_of(v) * (l / denominator_of(v)));
    make_primitive(out);
    return out;
}

Echelon eliminate(std::vector<SparseVector<Integer>> rows, int cols, const std::vector<int>& no_pivot) {
    Echelon result;
    result.cols = cols;
    std::vector<char> banned(static_cast<std::size_t>(cols), 0);
    for (int c : no_pivot) banned.at(static_cast<std::size_t>(c)) = 1;

    const std::size_t n = rows.size();
    std::vector<char> active(n, 1);
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    for (std::size_t r = 0; r < n; ++r) {
        make_primitive(rows[r]);
        for (const auto& [c, v] : rows[r]) {
            col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
            ++col_count[static_cast<std::size_t>(c)];
        }
    }
    auto retire = [&](std::size_t r) {
        active[r] = 0;
        for (const auto& [c, v] : rows[r]) --col_count[static_cast<std::size_t>(c)];
    };

    IntRow merged;
    for (;;) {
        std::size_t best = n;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < n; ++r) {
            if (!active[r]) continue;
            const auto& row = rows[r];
            if (row.empty()) {
                active[r] = 0;
                continue;
            }
            std::size_t usable = 0;
            for (const auto& e : row) usable += banned[static_cast<std::size_t>(e.first)] ? 0 : 1;
            if (usable == 0) {
                result.inconsistent = true;
                retire(r);
                continue;
            }
            if (row.size() < best_size) {
                best_size = row.size();
                best = r;
            }
        }
        if (best == n) break;

        const IntRow& prow = rows[best];
        int pcol = -1;
        int pcount = std::numeric_limits<int>::max();
        std::size_t pbits = std::numeric_limits<std::size_t>::max();
        for (const auto& [c, v] : prow) {
            if (banned[static_cast<std::size_t>(c)]) continue;
            int cnt = col_count[static_cast<std::size_t>(c)];
            std::size_t bits = bit_size(v);
            if (cnt < pcount || (cnt == pcount && bits < pbits)) {
                pcol = c;
                pcount = cnt;
                pbits = bits;
            }
        }
        const Integer pivot = *find_entry(prow, pcol);

        auto& touching = col_rows[static_cast<std::size_t>(pcol)];
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
        for (int s_idx : touching) {
            auto s = static_cast<std::size_t>(s_idx);
            if (s == best || !active[s]) continue;
            IntRow& srow = rows[s];
            const Integer* a_ptr = find_entry(srow, pcol);
            if (!a_ptr) continue;
            Integer g = gcd(pivot, *a_ptr);
            Integer mp = pivot / g;
            Integer ma = *a_ptr / g;

            merged.clear();
            merged.reserve(srow.size() + prow.size());
            auto i = srow.begin();
            auto j = prow.begin();
            while (i != srow.end() || j != prow.end()) {
                if (j == prow.end() || (i != srow.end() && i->first < j->first)) {
                    merged.emplace_back(i->first, mp * i->second);
                    ++i;
                } else if (i == srow.end() || j->first < i->first) {
                    merged.emplace_back(j->first, -ma * j->second);
                    ++col_count[static_cast<std::size_t>(j->first)];
                    col_rows[static_cast<std::size_t>(j->first)].push_back(s_idx);
                    ++j;
                } else {
                    Integer v = mp * i->second - ma * j->second;
                    if (v != 0)
                        merged.emplace_back(i->first, std::move(v));
                    else
                        --col_count[static_cast<std::size_t>(i->first)];
                    ++i;
                    ++j;
                }
            }
            make_primitive(merged);
            srow.swap(merged);
        }
        touching.clear();

        result.pivot_cols.push_back(pcol);
        result.rows.push_back(prow);
        retire(best);
    }
    return result;
}

namespace {

// Back-substitution over the echelon rows with the given free-variable
// assignment; `rhs_col` (if >= 0) holds the right-hand side of each row.
void back_substitute(const Echelon& e, std::vector<Rational>& x, int rhs_col) {
    for (int i = e.rank() - 1; i >= 0; --i) {
        const auto& row = e.rows[static_cast<std::size_t>(i)];
        const int p = e.pivot_cols[static_cast<std::size_t>(i)];
        Rational sum = 0;
        Integer pv = 0;
        for (const auto& [c, v] : row) {
            if (c == p)
                pv = v;
            else if (c == rhs_col)
                sum -= Rational(v);
            else if (x[static_cast<std::size_t>(c)] != 0)
                sum += Rational(v) * x[static_cast<std::size_t>(c)];
        }
        x[static_cast<std::size_t>(p)] = -sum / Rational(pv);
    }
}

}  // namespace

std::vector<RationalVector> kernel_from_echelon(const Echelon& e) {
    std::vector<char> is_pivot(static_cast<std::size_t>(e.cols), 0);
    for (int p : e.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<RationalVector> basis;
    std::vector<Rational> x(static_cast<std::size_t>(e.cols));
    for (int f = 0; f < e.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::fill(x.begin(), x.end(), Rational(0));
        x[static_cast<std::size_t>(f)] = 1;
        back_substitute(e, x, -1);
        RationalVector v;
        for (int c = 0; c < e.cols; ++c)
            if (x[static_cast<std::size_t>(c)] != 0) v.emplace_back(c, x[static_cast<std::size_t>(c)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<VectorQ> solve(const RationalMatrix& m, const VectorQ& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const int aug = m.cols();
    std::vector<SparseVector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        if (b(r) != 0) row.emplace_back(aug, b(r));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    std::vector<IntRow> irows;
    irows.reserve(rows.size());
    for (const auto& r : rows) irows.push_back(primitive_integer_row(r));
    Echelon e = eliminate(std::move(irows), aug + 1, {aug});
    if (e.inconsistent) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(aug + 1));
    back_substitute(e, x, aug);
    VectorQ out(m.cols());
    for (int c = 0; c < m.cols(); ++c) out(c) = x[static_cast<std::size_t>(c)];
    return out;
}

int span_rank(const std::vector<RationalVector>& vectors, int dim) {
    std::vector<IntRow> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors)
        if (!v.empty()) rows.push_back(primitive_integer_row(v));
    return eliminate(std::move(rows), dim).rank();
}

bool contained_in_span(const std::vector<RationalVector>& sub, const std::vector<RationalVector>& space,
                       int dim) {
    std::vector<RationalVector> all = space;
    all.insert(all.end(), sub.begin(), sub.end());
    return span_rank(all, dim) == span_rank(space, dim);
}

std::vector<RationalVector> linear_relations(const std::vector<RationalVector>& vectors, int dim) {
    std::vector<Triplet<Rational>> trips;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (const auto& [c, v] : vectors[i]) trips.push_back({c, static_cast<int>(i), v});
    auto m = RationalMatrix::from_triplets(dim, static_cast<int>(vectors.size()), std::move(trips));
    return kernel_basis(m);
}

RationalVector to_sparse(const VectorQ& v) {
    RationalVector out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) out.emplace_back(static_cast<int>(i), v(i));
    return out;
}

VectorQ to_dense(const RationalVector& v, int dim) {
    VectorQ out = VectorQ::Zero(dim);
    for (const auto& [c, x] : v) out(c) = x;
    return out;
}

RationalVector add_scaled(const RationalVector& a, const RationalVector& b, const Rational& s) {
    RationalVector out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            if (s != 0) out.emplace_back(j->first, s * j->second);
            ++j;
        } else {
            Rational v = i->second + s * j->second;
            if (v != 0) out.emplace_back(i->first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

RationalVector scaled(const RationalVector& a, const Rational& s) {
    if (s == 0) return {};
    RationalVector out = a;
    for (auto& e : out) e.second *= s;
    return out;
}

int rank(const MatrixQ& m) { return rank(RationalMatrix::from_dense(m)); }

MatrixQ kernel_basis(const MatrixQ& m) {
    auto basis = kernel_basis(RationalMatrix::from_dense(m));
    MatrixQ out = MatrixQ::Zero(m.cols(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [c, v] : basis[j]) out(c, static_cast<Eigen::Index>(j)) = v;
    return out;
}

}  // namespace stressca::linalg
