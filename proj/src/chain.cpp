#include "lchain/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace lchain {

ChainComplex::ChainComplex(int min_degree, std::vector<int> dims,
                           std::map<int, IntMatrix> differentials)
    : min_degree_(min_degree), dims_(std::move(dims)) {
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("ChainComplex: negative rank");

    // normalize: strip zero ranks at both ends so equal complexes compare equal
    while (!dims_.empty() && dims_.front() == 0) {
        dims_.erase(dims_.begin());
        ++min_degree_;
    }
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
    if (dims_.empty()) min_degree_ = 0;

    for (auto& [r, m] : differentials) {
        if (m.rows() != dim(r - 1) || m.cols() != dim(r))
            throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " +
                                        std::to_string(r));
        // zero differentials are represented by absence so that equality of
        // complexes is equality of the stored data
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) diffs_[r] = m;
    }
    for (int r = min_degree_ + 1; r <= max_degree(); ++r)
        if (!(d(r) * d(r + 1)).is_zero())
            throw std::invalid_argument("ChainComplex: d∘d != 0 at degree " + std::to_string(r + 1));
}

ChainComplex ChainComplex::point() { return ChainComplex(0, {1}, {}); }

int ChainComplex::dim(int r) const {
    int i = r - min_degree_;
    if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
    return dims_[i];
}

IntMatrix ChainComplex::d(int r) const {
    auto it = diffs_.find(r);
    if (it != diffs_.end()) return it->second;
    return IntMatrix(dim(r - 1), dim(r));
}

int ChainComplex::total_rank() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (int r = min_degree_; r <= max_degree(); ++r)
        chi += (((r % 2) + 2) % 2 == 0) ? dim(r) : -dim(r);
    return chi;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
    for (auto& [r, m] : components) {
        if (m.rows() != target_.dim(r) || m.cols() != source_.dim(r))
            throw std::invalid_argument("ChainMap: component shape mismatch at degree " +
                                        std::to_string(r));
        if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) components_[r] = m;
    }
    int lo = std::min(source_.min_degree(), target_.min_degree());
    int hi = std::max(source_.max_degree(), target_.max_degree());
    for (int r = lo; r <= hi; ++r)
        if (!(component(r - 1) * source_.d(r) == target_.d(r) * component(r)))
            throw std::invalid_argument("ChainMap: does not commute with differentials at degree " +
                                        std::to_string(r));
}

IntMatrix ChainMap::component(int r) const {
    auto it = components_.find(r);
    if (it != components_.end()) return it->second;
    return IntMatrix(target_.dim(r), source_.dim(r));
}

HomologyData homology(const ChainComplex& c, int r) { return homology_at(c.d(r), c.d(r + 1)); }

std::map<int, AbelianGroup> homology_groups(const ChainComplex& c) {
    std::map<int, AbelianGroup> out;
    for (int r = c.min_degree(); r <= c.max_degree(); ++r) out[r] = homology(c, r).group;
    return out;
}

bool is_acyclic(const ChainComplex& c) {
    for (int r = c.min_degree(); r <= c.max_degree(); ++r)
        if (!homology(c, r).group.trivial()) return false;
    return true;
}

ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& S = f.source();
    const ChainComplex& T = f.target();
    int lo = std::min(T.min_degree(), S.min_degree() + 1);
    int hi = std::max(T.max_degree(), S.max_degree() + 1);

    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(T.dim(r) + S.dim(r - 1));

    std::map<int, IntMatrix> diffs;
    for (int r = lo + 1; r <= hi; ++r) {
        IntMatrix m(T.dim(r - 1) + S.dim(r - 2), T.dim(r) + S.dim(r - 1));
        m.insert_block(0, 0, T.d(r));
        m.insert_block(0, T.dim(r), f.component(r - 1));
        m.insert_block(T.dim(r - 1), T.dim(r), -S.d(r - 1));
        diffs[r] = m;
    }
    return ChainComplex(lo, dims, diffs);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: chain maps do not chain");
    std::map<int, IntMatrix> comps;
    int lo = std::min(f.source().min_degree(), g.target().min_degree());
    int hi = std::max(f.source().max_degree(), g.target().max_degree());
    for (int r = lo; r <= hi; ++r) comps[r] = g.component(r) * f.component(r);
    return ChainMap(f.source(), g.target(), comps);
}

ChainMap identity_map(const ChainComplex& c) {
    std::map<int, IntMatrix> comps;
    for (int r = c.min_degree(); r <= c.max_degree(); ++r)
        comps[r] = IntMatrix::identity(c.dim(r));
    return ChainMap(c, c, comps);
}

bool is_quasi_isomorphism(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

const std::vector<TensorBlock> TensorLayout::empty_;

TensorLayout::TensorLayout(const ChainComplex& a, const ChainComplex& b) {
    for (int p = a.min_degree(); p <= a.max_degree(); ++p) {
        if (a.dim(p) == 0) continue;
        for (int q = b.min_degree(); q <= b.max_degree(); ++q) {
            if (b.dim(q) == 0) continue;
            auto& blocks = blocks_[p + q];
            int offset = blocks.empty()
                             ? 0
                             : blocks.back().offset + blocks.back().left_dim * blocks.back().right_dim;
            blocks.push_back({p, offset, a.dim(p), b.dim(q)});
        }
    }
    for (auto& [m, blocks] : blocks_) {
        std::sort(blocks.begin(), blocks.end(),
                  [](const TensorBlock& x, const TensorBlock& y) { return x.left_degree < y.left_degree; });
        int offset = 0;
        for (auto& blk : blocks) {
            blk.offset = offset;
            offset += blk.left_dim * blk.right_dim;
        }
    }
}

int TensorLayout::dim(int m) const {
    auto it = blocks_.find(m);
    if (it == blocks_.end()) return 0;
    int d = 0;
    for (const auto& blk : it->second) d += blk.left_dim * blk.right_dim;
    return d;
}

const std::vector<TensorBlock>& TensorLayout::blocks(int m) const {
    auto it = blocks_.find(m);
    return it == blocks_.end() ? empty_ : it->second;
}

int TensorLayout::index(int p, int i, int q, int j) const {
    for (const auto& blk : blocks(p + q))
        if (blk.left_degree == p) return blk.offset + i * blk.right_dim + j;
    throw std::invalid_argument("TensorLayout::index: no such block");
}

namespace {

// dst[(i,k),(j,l)] += sign * a[i][j] * b[k][l] at the given block origin
void add_kronecker(IntMatrix& dst, int row0, int col0, const IntMatrix& a, const IntMatrix& b,
                   int sign) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int s = sign * a.at(i, j);
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l) == 0) continue;
                    dst.at(row0 + i * b.rows() + k, col0 + j * b.cols() + l) += s * b.at(k, l);
                }
        }
}

} // namespace

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty() || b.empty()) return ChainComplex();
    TensorLayout layout(a, b);
    int lo = a.min_degree() + b.min_degree();
    int hi = a.max_degree() + b.max_degree();

    std::vector<int> dims;
    for (int m = lo; m <= hi; ++m) dims.push_back(layout.dim(m));

    std::map<int, IntMatrix> diffs;
    for (int m = lo + 1; m <= hi; ++m) {
        IntMatrix D(layout.dim(m - 1), layout.dim(m));
        for (const auto& src : layout.blocks(m)) {
            int p = src.left_degree, q = m - p;
            // d_a ⊗ id into block (p-1, q)
            if (a.dim(p - 1) > 0 && b.dim(q) > 0) {
                for (const auto& t : layout.blocks(m - 1))
                    if (t.left_degree == p - 1)
                        add_kronecker(D, t.offset, src.offset, a.d(p),
                                      IntMatrix::identity(b.dim(q)), 1);
            }
            // (-1)^p id ⊗ d_b into block (p, q-1)
            if (a.dim(p) > 0 && b.dim(q - 1) > 0) {
                int sign = (((p % 2) + 2) % 2 == 0) ? 1 : -1;
                for (const auto& t : layout.blocks(m - 1))
                    if (t.left_degree == p)
                        add_kronecker(D, t.offset, src.offset, IntMatrix::identity(a.dim(p)),
                                      b.d(q), sign);
            }
        }
        diffs[m] = D;
    }
    return ChainComplex(lo, dims, diffs);
}

ChainComplex dual(const ChainComplex& c, int n) {
    if (c.empty()) return ChainComplex();
    int lo = n - c.max_degree();
    int hi = n - c.min_degree();
    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(c.dim(n - r));
    std::map<int, IntMatrix> diffs;
    for (int r = lo + 1; r <= hi; ++r) {
        int sign = (((r % 2) + 2) % 2 == 0) ? 1 : -1;
        diffs[r] = c.d(n - r + 1).transposed() * Int(sign);
    }
    return ChainComplex(lo, dims, diffs);
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int lo = std::min(a.min_degree(), b.min_degree());
    int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(a.dim(r) + b.dim(r));
    std::map<int, IntMatrix> diffs;
    for (int r = lo + 1; r <= hi; ++r) {
        IntMatrix m(a.dim(r - 1) + b.dim(r - 1), a.dim(r) + b.dim(r));
        m.insert_block(0, 0, a.d(r));
        m.insert_block(a.dim(r - 1), a.dim(r), b.d(r));
        diffs[r] = m;
    }
    return ChainComplex(lo, dims, diffs);
}

ChainMap summand_inclusion(const ChainComplex& a, const ChainComplex& k) {
    ChainComplex sum = direct_sum(a, k);
    std::map<int, IntMatrix> comps;
    for (int r = a.min_degree(); r <= a.max_degree(); ++r) {
        IntMatrix m(sum.dim(r), a.dim(r));
        m.insert_block(0, 0, IntMatrix::identity(a.dim(r)));
        comps[r] = m;
    }
    return ChainMap(a, sum, comps);
}

namespace {

// left integer inverse exists iff full column rank and all invariant factors 1
bool degreewise_split(const ChainMap& f) {
    for (int r = f.source().min_degree(); r <= f.source().max_degree(); ++r) {
        if (f.source().dim(r) == 0) continue;
        SmithDecomposition s = smith_normal_form(f.component(r));
        if (s.rank < f.source().dim(r)) return false;
        for (int i = 0; i < s.rank; ++i)
            if (s.d.at(i, i) != 1) return false;
    }
    return true;
}

} // namespace

SplittingReport splitting_check(const ChainMap& f, const ChainMap& g) {
    SplittingReport rep;
    rep.f_split = degreewise_split(f);
    rep.g_split = degreewise_split(g);

    ChainComplex cf = mapping_cone(f);
    ChainComplex cg = mapping_cone(g);
    ChainComplex cgf = mapping_cone(compose(g, f));
    rep.cone_f = homology_groups(cf);
    rep.cone_g = homology_groups(cg);
    rep.cone_gf = homology_groups(cgf);

    int lo = std::min({cf.min_degree(), cg.min_degree(), cgf.min_degree()});
    int hi = std::max({cf.max_degree(), cg.max_degree(), cgf.max_degree()});
    rep.homology_splits = true;
    for (int r = lo; r <= hi; ++r) {
        AbelianGroup lhs = rep.cone_gf.count(r) ? rep.cone_gf[r] : AbelianGroup{};
        AbelianGroup a = rep.cone_f.count(r) ? rep.cone_f[r] : AbelianGroup{};
        AbelianGroup b = rep.cone_g.count(r) ? rep.cone_g[r] : AbelianGroup{};
        if (!(lhs == direct_sum(a, b))) rep.homology_splits = false;
    }
    return rep;
}

ChainComplex random_complex(Rng& rng, int min_degree, int max_degree, int pieces) {
    ChainComplex c;
    for (int p = 0; p < pieces; ++p) {
        if (rng.coin()) {
            int k = rng.range(min_degree, max_degree);
            c = direct_sum(c, ChainComplex(k, {1}, {}));
        } else {
            int k = rng.range(min_degree + 1, max_degree);
            IntMatrix m(1, 1);
            m.at(0, 0) = rng.range(-3, 3);
            c = direct_sum(c, ChainComplex(k - 1, {1, 1}, {{k, m}}));
        }
    }
    if (c.empty()) return c;

    // scramble bases without changing the isomorphism type
    std::map<int, std::pair<IntMatrix, IntMatrix>> basis;
    for (int r = c.min_degree(); r <= c.max_degree(); ++r)
        basis[r] = random_unimodular_pair(rng, c.dim(r), 3);
    std::vector<int> dims;
    for (int r = c.min_degree(); r <= c.max_degree(); ++r) dims.push_back(c.dim(r));
    std::map<int, IntMatrix> diffs;
    for (int r = c.min_degree() + 1; r <= c.max_degree(); ++r)
        diffs[r] = basis[r - 1].first * c.d(r) * basis[r].second;
    return ChainComplex(c.min_degree(), dims, diffs);
}

std::pair<IntMatrix, IntMatrix> random_unimodular_pair(Rng& rng, int n, int ops) {
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix uinv = IntMatrix::identity(n);
    if (n < 2) return {u, uinv};
    for (int s = 0; s < ops; ++s) {
        int i = rng.range(0, n - 1);
        int j = rng.range(0, n - 2);
        if (j >= i) ++j;
        Int c = rng.coin() ? 1 : -1;
        // u: row_i += c row_j;  uinv: col_j -= c col_i
        for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
        for (int k = 0; k < n; ++k) uinv.at(k, j) -= c * uinv.at(k, i);
    }
    return {u, uinv};
}

SplitSystem random_split_system(Rng& rng) {
    ChainComplex a = random_complex(rng, 0, 2, rng.range(1, 2));
    ChainComplex k1 = random_complex(rng, 0, 2, 1);
    ChainComplex k2 = random_complex(rng, 0, 2, 1);
    if (a.empty()) a = ChainComplex::point();
    if (k1.empty()) k1 = ChainComplex::point();
    if (k2.empty()) k2 = ChainComplex::point();

    ChainComplex b = direct_sum(a, k1);
    ChainComplex cc = direct_sum(b, k2);

    std::map<int, std::pair<IntMatrix, IntMatrix>> ba, bb, bc;
    auto scramble = [&](const ChainComplex& x, std::map<int, std::pair<IntMatrix, IntMatrix>>& out) {
        for (int r = x.min_degree(); r <= x.max_degree(); ++r)
            out[r] = random_unimodular_pair(rng, x.dim(r), 2);
    };
    scramble(a, ba);
    scramble(b, bb);
    scramble(cc, bc);

    auto conjugate = [&](const ChainComplex& x,
                         std::map<int, std::pair<IntMatrix, IntMatrix>>& basis) {
        std::vector<int> dims;
        for (int r = x.min_degree(); r <= x.max_degree(); ++r) dims.push_back(x.dim(r));
        std::map<int, IntMatrix> diffs;
        for (int r = x.min_degree() + 1; r <= x.max_degree(); ++r)
            diffs[r] = basis[r - 1].first * x.d(r) * basis[r].second;
        return ChainComplex(x.min_degree(), dims, diffs);
    };
    ChainComplex a2 = conjugate(a, ba);
    ChainComplex b2 = conjugate(b, bb);
    ChainComplex c2 = conjugate(cc, bc);

    auto get = [](std::map<int, std::pair<IntMatrix, IntMatrix>>& m, int r, int n,
                  bool inv) -> IntMatrix {
        auto it = m.find(r);
        if (it == m.end()) return IntMatrix::identity(n);
        return inv ? it->second.second : it->second.first;
    };

    std::map<int, IntMatrix> fc, gc;
    for (int r = b2.min_degree(); r <= b2.max_degree(); ++r) {
        IntMatrix incl(b.dim(r), a.dim(r));
        incl.insert_block(0, 0, IntMatrix::identity(a.dim(r)));
        fc[r] = get(bb, r, b.dim(r), false) * incl * get(ba, r, a.dim(r), true);
    }
    for (int r = c2.min_degree(); r <= c2.max_degree(); ++r) {
        IntMatrix incl(cc.dim(r), b.dim(r));
        incl.insert_block(0, 0, IntMatrix::identity(b.dim(r)));
        gc[r] = get(bc, r, cc.dim(r), false) * incl * get(bb, r, b.dim(r), true);
    }
    return {ChainMap(a2, b2, fc), ChainMap(b2, c2, gc)};
}

} // namespace lchain
