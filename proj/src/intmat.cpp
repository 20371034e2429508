#include "lchain/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace lchain {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& entries) {
    int n = static_cast<int>(entries.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

IntMatrix IntMatrix::operator-() const { return *this * Int(-1); }

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply: size mismatch");
    IntVec r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::block(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
        throw std::invalid_argument("matrix block: out of range");
    IntMatrix b(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

void IntMatrix::insert_block(int i0, int j0, const IntMatrix& b) {
    if (i0 < 0 || j0 < 0 || i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
        throw std::invalid_argument("matrix insert_block: out of range");
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

IntVec IntMatrix::column(int j) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntMatrix::set_column(int j, const IntVec& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: square matrix required");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    r.insert_block(0, 0, a);
    r.insert_block(0, a.cols(), b);
    return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    IntMatrix r(a.rows() + b.rows(), a.cols());
    r.insert_block(0, 0, a);
    r.insert_block(a.rows(), 0, b);
    return r;
}

IntVec SmithDecomposition::invariant_factors() const {
    IntVec f;
    for (int i = 0; i < rank; ++i) f.push_back(d.at(i, i));
    return f;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// elementary operations applied to the working matrix and the transforms;
// all four of u, u_inv, v, v_inv stay exact inverses of each other
struct SnfWork {
    IntMatrix a, u, u_inv, v, v_inv;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }
    // row_i += c * row_j
    void row_add(int i, int j, const Int& c) {
        if (c == 0) return;
        for (int k = 0; k < a.cols(); ++k) a.at(i, k) += c * a.at(j, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, j) -= c * u_inv.at(r, i);
    }
    // col_j += c * col_k
    void col_add(int j, int k, const Int& c) {
        if (c == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, j) += c * a.at(r, k);
        for (int r = 0; r < v.rows(); ++r) v.at(r, j) += c * v.at(r, k);
        for (int c2 = 0; c2 < v_inv.cols(); ++c2) v_inv.at(k, c2) -= c * v_inv.at(j, c2);
    }
    void row_negate(int i) {
        for (int k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
        for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const int R = m.rows(), C = m.cols();
    SnfWork w{m, IntMatrix::identity(R), IntMatrix::identity(R),
              IntMatrix::identity(C), IntMatrix::identity(C)};

    int t = 0;
    const int tmax = R < C ? R : C;
    while (t < tmax) {
        // smallest nonzero |entry| in the submatrix, row-major on ties
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                const Int& x = w.a.at(i, j);
                if (x == 0) continue;
                Int ax = abs_int(x);
                if (pi < 0 || ax < best) { pi = i; pj = j; best = ax; }
            }
        if (pi < 0) break; // submatrix is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < R; ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q = w.a.at(i, t) / w.a.at(t, t); // truncated: |remainder| < |pivot|
                w.row_add(i, t, -q);
                if (w.a.at(i, t) != 0) { w.row_swap(t, i); dirty = true; }
            }
            if (dirty) continue;
            for (int j = t + 1; j < C; ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q = w.a.at(t, j) / w.a.at(t, t);
                w.col_add(j, t, -q);
                if (w.a.at(t, j) != 0) { w.col_swap(t, j); dirty = true; }
            }
            if (dirty) continue;

            // pivot row and column are clean; fold in any entry the pivot
            // does not divide yet, which strictly shrinks the pivot
            bool folded = false;
            for (int i = t + 1; i < R && !folded; ++i)
                for (int j = t + 1; j < C && !folded; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        folded = true;
                    }
            if (!folded) break;
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    SmithDecomposition s;
    s.u = std::move(w.u);
    s.u_inv = std::move(w.u_inv);
    s.v = std::move(w.v);
    s.v_inv = std::move(w.v_inv);
    s.d = std::move(w.a);
    s.rank = t;
    return s;
}

int rank_of(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    SmithDecomposition s = smith_normal_form(a);
    IntVec c = s.u.apply(b);
    IntVec y(a.cols(), Int(0));
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            const Int& d = s.d.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            if (i < a.cols()) y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    return s.v.block(0, s.rank, a.cols(), a.cols() - s.rank);
}

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) { os << "Z"; first = false; }
    else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    // renormalize the combined torsion to a divisibility chain by taking the
    // Smith form of the diagonal relation matrix; avoids factoring
    IntVec all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    AbelianGroup r;
    r.free_rank = a.free_rank + b.free_rank;
    if (!all.empty()) {
        SmithDecomposition s = smith_normal_form(IntMatrix::diagonal(all));
        for (const auto& d : s.invariant_factors())
            if (d >= 2) r.torsion.push_back(d);
    }
    return r;
}

HomologyData homology_at(const IntMatrix& d_out, const IntMatrix& d_in) {
    const int n = d_out.cols();
    if (d_in.rows() != n)
        throw std::invalid_argument("homology_at: differentials do not compose");
    if (!(d_out * d_in).is_zero())
        throw std::invalid_argument("homology_at: d∘d != 0, not a complex at this degree");

    HomologyData h;
    SmithDecomposition s = smith_normal_form(d_out);
    const int k = n - s.rank; // kernel rank
    h.kernel_basis_ = s.v.block(0, s.rank, n, k);
    h.kernel_coords_ = s.v_inv.block(s.rank, 0, k, n);

    // relations: boundaries expressed in kernel coordinates. The top rows of
    // v^{-1} * d_in vanish because im(d_in) ⊆ ker(d_out).
    IntMatrix rel = h.kernel_coords_ * d_in;
    SmithDecomposition rs = smith_normal_form(rel);
    h.pres_from_kernel_ = rs.u;
    h.kernel_from_pres_ = rs.u_inv;
    h.orders_.assign(k, Int(0));
    for (int i = 0; i < rs.rank; ++i) h.orders_[i] = rs.d.at(i, i);

    h.group.free_rank = k - rs.rank;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.d.at(i, i) >= 2) {
            h.group.torsion.push_back(rs.d.at(i, i));
            h.generator_coords_.push_back(i);
        }
    for (int i = rs.rank; i < k; ++i) h.generator_coords_.push_back(i);
    return h;
}

IntVec HomologyData::class_of(const IntVec& z) const {
    IntVec x = kernel_coords_.apply(z);
    // z must actually lie in the kernel: reconstruct and compare
    IntVec back = kernel_basis_.apply(x);
    if (back != z) throw std::invalid_argument("class_of: vector is not a cycle");
    IntVec y = pres_from_kernel_.apply(x);
    IntVec out;
    out.reserve(generator_coords_.size());
    for (int c : generator_coords_) {
        Int val = y[c];
        const Int& d = orders_[c];
        if (d != 0) {
            val %= d;
            if (val < 0) val += d;
        }
        out.push_back(val);
    }
    return out;
}

IntVec HomologyData::generator_cycle(int g) const {
    IntVec e(kernel_from_pres_.cols(), Int(0));
    e[generator_coords_[g]] = 1;
    return kernel_basis_.apply(kernel_from_pres_.apply(e));
}

InducedMap induced_map_on_homology(const IntMatrix& f,
                                   const IntMatrix& src_out, const IntMatrix& src_in,
                                   const IntMatrix& tgt_out, const IntMatrix& tgt_in) {
    HomologyData hs = homology_at(src_out, src_in);
    HomologyData ht = homology_at(tgt_out, tgt_in);

    InducedMap r;
    r.source = hs.group;
    r.target = ht.group;
    r.matrix = IntMatrix(ht.generator_count(), hs.generator_count());

    for (int g = 0; g < hs.generator_count(); ++g) {
        IntVec w = f.apply(hs.generator_cycle(g));
        IntVec cls;
        try {
            cls = ht.class_of(w);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("induced_map_on_homology: f does not carry cycles to cycles");
        }
        for (int i = 0; i < ht.generator_count(); ++i) r.matrix.at(i, g) = cls[i];
    }
    // boundaries must land in boundaries, otherwise f is not a chain map here
    for (int j = 0; j < src_in.cols(); ++j) {
        IntVec w = f.apply(src_in.column(j));
        IntVec cls;
        try {
            cls = ht.class_of(w);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("induced_map_on_homology: f does not carry boundaries to cycles");
        }
        for (const auto& c : cls)
            if (c != 0)
                throw std::invalid_argument("induced_map_on_homology: f does not respect boundaries");
    }

    // surjective + isomorphic groups => isomorphism (f.g. abelian)
    bool iso = (hs.group == ht.group);
    if (iso && ht.generator_count() > 0) {
        IntVec rels;
        IntMatrix aug = r.matrix;
        for (int i = 0; i < ht.generator_count(); ++i) {
            if (ht.generator_order(i) != 0) {
                IntMatrix relcol(ht.generator_count(), 1);
                relcol.at(i, 0) = ht.generator_order(i);
                aug = hstack(aug, relcol);
            }
        }
        SmithDecomposition s = smith_normal_form(aug);
        if (s.rank < ht.generator_count()) iso = false;
        for (int i = 0; iso && i < s.rank; ++i)
            if (s.d.at(i, i) != 1) iso = false;
    }
    r.is_iso = iso;
    return r;
}

} // namespace lchain
