#include "lchain/zxmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lchain {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool is_face(const Simplex& face, const Simplex& of) {
    return std::includes(of.begin(), of.end(), face.begin(), face.end());
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::string simplex_name(const Simplex& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << "]";
    return os.str();
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> simplices)
    : vertex_count_(vertex_count), simplices_(std::move(simplices)) {
    if (vertex_count_ < 0)
        throw std::invalid_argument("simplicial complex: negative vertex count");
    for (const auto& s : simplices_) {
        if (s.empty()) throw std::invalid_argument("simplicial complex: empty simplex");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("simplicial complex: simplex not sorted-unique");
        if (s.front() < 0 || s.back() >= vertex_count_)
            throw std::invalid_argument("simplicial complex: vertex out of range");
    }
    std::sort(simplices_.begin(), simplices_.end(), simplex_less);
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()),
                     simplices_.end());
    for (const auto& s : simplices_) {
        if (s.size() < 2) continue;
        Simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            if (!contains(face))
                throw std::invalid_argument("simplicial complex: not closed under faces");
        }
    }
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 const std::vector<Simplex>& facets) {
    std::set<Simplex> closed;
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t k = f.size();
        if (k > 20) throw std::invalid_argument("from_facets: facet too large");
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            closed.insert(std::move(sub));
        }
    }
    return SimplicialComplex(vertex_count, {closed.begin(), closed.end()});
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, simplex_less);
}

int SimplicialComplex::index_of(const Simplex& s) const {
    const auto it =
        std::lower_bound(simplices_.begin(), simplices_.end(), s, simplex_less);
    if (it == simplices_.end() || *it != s) return -1;
    return static_cast<int>(it - simplices_.begin());
}

int SimplicialComplex::dimension() const {
    if (simplices_.empty()) return -1;
    return static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_) {
        bool proper_face = false;
        for (const auto& t : simplices_)
            if (t.size() > s.size() && is_face(s, t)) {
                proper_face = true;
                break;
            }
        if (!proper_face) out.push_back(s);
    }
    return out;
}

bool SimplicialComplex::is_pure(int n) const {
    for (const auto& s : maximal_simplices())
        if (static_cast<int>(s.size()) - 1 != n) return false;
    return !simplices_.empty();
}

bool SimplicialComplex::is_connected() const {
    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> used(vertex_count_, false);
    for (const auto& s : simplices_) {
        for (int v : s) used[v] = true;
        for (std::size_t i = 1; i < s.size(); ++i) parent[find(s[i])] = find(s[0]);
    }
    int roots = 0;
    for (int v = 0; v < vertex_count_; ++v)
        if (used[v] && find(v) == v) ++roots;
    return roots <= 1;
}

SimplicialComplex full_simplex(int dim) {
    Simplex top(dim + 1);
    std::iota(top.begin(), top.end(), 0);
    return SimplicialComplex::from_facets(dim + 1, {top});
}

SimplicialComplex boundary_of_simplex(int dim) {
    std::vector<Simplex> facets;
    for (int drop = 0; drop <= dim; ++drop) {
        Simplex f;
        for (int v = 0; v <= dim; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(dim + 1, facets);
}

SimplicialComplex two_points() { return SimplicialComplex(2, {{0}, {1}}); }

bool certified_simply_connected(const SimplicialComplex& x) {
    if (x.simplices().empty()) return true;
    if (!x.is_connected()) return false;

    // spanning tree of the 1-skeleton, rooted anywhere
    std::map<std::pair<int, int>, int> edge_gen; // non-tree edge -> generator id
    std::set<std::pair<int, int>> tree;
    {
        std::set<int> seen;
        std::vector<int> queue;
        std::vector<std::pair<int, int>> edges;
        for (const auto& s : x.simplices())
            if (s.size() == 2) edges.push_back({s[0], s[1]});
        if (!x.simplices().empty()) {
            const int root = x.simplices().front().front();
            seen.insert(root);
            queue.push_back(root);
        }
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (const auto& [a, b] : edges) {
                const int other = a == v ? b : b == v ? a : -1;
                if (other < 0 || seen.count(other)) continue;
                tree.insert({a, b});
                seen.insert(other);
                queue.push_back(other);
            }
        }
        int next = 1;
        for (const auto& e : edges)
            if (!tree.count(e)) edge_gen[e] = next++;
    }
    const auto gen = [&](int a, int b) { // signed generator of the edge a->b
        const auto key = std::minmax(a, b);
        const auto it = edge_gen.find({key.first, key.second});
        if (it == edge_gen.end()) return 0; // tree edge, trivial
        return a < b ? it->second : -it->second;
    };

    // one relation per triangle
    std::vector<std::vector<int>> words;
    for (const auto& s : x.simplices())
        if (s.size() == 3) {
            std::vector<int> w;
            for (int g : {gen(s[0], s[1]), gen(s[1], s[2]), gen(s[2], s[0])})
                if (g != 0) w.push_back(g);
            words.push_back(std::move(w));
        }
    std::set<int> alive;
    for (const auto& [e, id] : edge_gen) alive.insert(id);

    // greedy Tietze: free/cyclic reduction, then kill generators pinned by
    // length-one relations
    const auto reduce = [](std::vector<int>& w) {
        std::vector<int> out;
        for (int g : w) {
            if (!out.empty() && out.back() == -g)
                out.pop_back();
            else
                out.push_back(g);
        }
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
        }
        w = std::move(out);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& w : words) reduce(w);
        words.erase(std::remove_if(words.begin(), words.end(),
                                   [](const auto& w) { return w.empty(); }),
                    words.end());
        int trivial = 0;
        for (const auto& w : words)
            if (w.size() == 1) {
                trivial = std::abs(w.front());
                break;
            }
        if (trivial != 0) {
            alive.erase(trivial);
            for (auto& w : words)
                w.erase(std::remove_if(w.begin(), w.end(),
                                       [&](int g) { return std::abs(g) == trivial; }),
                        w.end());
            changed = true;
        }
    }
    return alive.empty();
}

ZXModule::ZXModule(SimplicialComplex x, std::map<Simplex, int> ranks)
    : x_(std::move(x)), ranks_(std::move(ranks)) {
    for (auto it = ranks_.begin(); it != ranks_.end();) {
        if (!x_.contains(it->first))
            throw std::invalid_argument("zx module: rank at a simplex outside the space");
        if (it->second < 0) throw std::invalid_argument("zx module: negative rank");
        it = it->second == 0 ? ranks_.erase(it) : std::next(it);
    }
}

int ZXModule::rank(const Simplex& s) const {
    const auto it = ranks_.find(s);
    return it == ranks_.end() ? 0 : it->second;
}

int ZXModule::total_rank() const {
    int total = 0;
    for (const auto& [s, r] : ranks_) total += r;
    return total;
}

int ZXModule::offset(const Simplex& s) const {
    if (rank(s) == 0) return -1;
    int at = 0;
    for (const auto& t : x_.simplices()) {
        if (t == s) return at;
        at += rank(t);
    }
    return -1;
}

ZXMorphism::ZXMorphism(ZXModule source, ZXModule target,
                       std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    if (!(source_.space() == target_.space()))
        throw std::invalid_argument("zx morphism: source and target over different spaces");
    for (auto it = blocks_.begin(); it != blocks_.end();) {
        const auto& [tau, sigma] = it->first;
        const int rows = target_.rank(tau), cols = source_.rank(sigma);
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("zx morphism: block at an unsupported simplex");
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw std::invalid_argument("zx morphism: block shape mismatch");
        it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
    }
}

ZXMorphism ZXMorphism::identity(const ZXModule& m) {
    std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks;
    for (const auto& [s, r] : m.ranks()) blocks[{s, s}] = IntMatrix::identity(r);
    return {m, m, std::move(blocks)};
}

ZXMorphism ZXMorphism::zero(ZXModule source, ZXModule target) {
    return {std::move(source), std::move(target), {}};
}

IntMatrix ZXMorphism::block(const Simplex& tau, const Simplex& sigma) const {
    const auto it = blocks_.find({tau, sigma});
    if (it != blocks_.end()) return it->second;
    return IntMatrix(target_.rank(tau), source_.rank(sigma));
}

bool check_support(const ZXMorphism& f) {
    for (const auto& [key, mat] : f.blocks())
        if (!is_face(key.second, key.first)) return false;
    return true;
}

ZXMorphism compose(const ZXMorphism& g, const ZXMorphism& f) {
    if (!(g.source() == f.target()))
        throw std::invalid_argument("zx compose: middle modules do not match");
    std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks;
    for (const auto& [gkey, gmat] : g.blocks())
        for (const auto& [fkey, fmat] : f.blocks()) {
            if (gkey.second != fkey.first) continue;
            const auto key = std::make_pair(gkey.first, fkey.second);
            const IntMatrix prod = gmat * fmat;
            const auto it = blocks.find(key);
            if (it == blocks.end())
                blocks.emplace(key, prod);
            else
                it->second = it->second + prod;
        }
    return {f.source(), g.target(), std::move(blocks)};
}

ZXChainComplex::ZXChainComplex(SimplicialComplex x, int ambient_dimension,
                               std::map<int, ZXModule> modules,
                               std::map<int, ZXMorphism> differentials)
    : x_(std::move(x)), n_(ambient_dimension), modules_(std::move(modules)),
      differentials_(std::move(differentials)) {
    for (const auto& [r, m] : modules_)
        if (!(m.space() == x_))
            throw std::invalid_argument("zx complex: module over a different space");
    for (const auto& [r, d] : differentials_) {
        if (!(d.source() == module_at(r)) || !(d.target() == module_at(r - 1)))
            throw std::invalid_argument("zx complex: differential endpoints mismatch");
        if (!check_support(d))
            throw std::invalid_argument("zx complex: differential violates the support condition");
    }
    for (const auto& [r, d] : differentials_) {
        const auto below = differentials_.find(r - 1);
        if (below == differentials_.end()) continue;
        if (!compose(below->second, d).blocks().empty())
            throw std::invalid_argument("zx complex: differential does not square to zero");
    }
    for (auto it = modules_.begin(); it != modules_.end();)
        it = it->second.ranks().empty() ? modules_.erase(it) : std::next(it);
    for (auto it = differentials_.begin(); it != differentials_.end();)
        it = it->second.blocks().empty() ? differentials_.erase(it) : std::next(it);
}

int ZXChainComplex::rank(int degree, const Simplex& s) const {
    const auto it = modules_.find(degree);
    return it == modules_.end() ? 0 : it->second.rank(s);
}

ZXModule ZXChainComplex::module_at(int degree) const {
    const auto it = modules_.find(degree);
    if (it != modules_.end()) return it->second;
    return ZXModule(x_, {});
}

ChainComplex ZXChainComplex::local_complex(const Simplex& s) const {
    int lo = 0, hi = -1;
    for (const auto& [r, m] : modules_)
        if (m.rank(s) > 0) {
            if (hi < lo) lo = hi = r;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    if (hi < lo) return {};
    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(rank(r, s));
    std::map<int, IntMatrix> diffs;
    for (const auto& [r, d] : differentials_) {
        if (r <= lo || r > hi) continue;
        const IntMatrix b = d.block(s, s);
        if (!b.is_zero()) diffs[r] = b;
    }
    return {lo, std::move(dims), std::move(diffs)};
}

namespace {

// basis label (simplex per slot) of the flattened module, in canonical order
std::vector<Simplex> slot_supports(const ZXModule& m) {
    std::vector<Simplex> out;
    for (const auto& s : m.space().simplices())
        out.insert(out.end(), m.rank(s), s);
    return out;
}

IntMatrix flatten_morphism(const ZXMorphism& f) {
    IntMatrix out(f.target().total_rank(), f.source().total_rank());
    for (const auto& [key, mat] : f.blocks())
        out.insert_block(f.target().offset(key.first), f.source().offset(key.second),
                         mat);
    return out;
}

ChainComplex flatten_complex(const ZXChainComplex& c) {
    if (c.modules().empty()) return {};
    const int lo = c.modules().begin()->first;
    const int hi = c.modules().rbegin()->first;
    std::vector<int> dims;
    for (int r = lo; r <= hi; ++r) dims.push_back(c.module_at(r).total_rank());
    std::map<int, IntMatrix> diffs;
    for (const auto& [r, d] : c.differentials()) diffs[r] = flatten_morphism(d);
    return {lo, std::move(dims), std::move(diffs)};
}

void require_certificate(const SimplicialComplex& x) {
    if (!certified_simply_connected(x))
        throw std::domain_error(
            "assembly is only supported over certified simply connected spaces");
}

} // namespace

int assemble(const ZXModule& m) {
    require_certificate(m.space());
    return m.total_rank();
}

IntMatrix assemble(const ZXMorphism& f) {
    require_certificate(f.source().space());
    return flatten_morphism(f);
}

ChainComplex assemble(const ZXChainComplex& c) {
    require_certificate(c.space());
    return flatten_complex(c);
}

ZXTensor zx_tensor(const ZXChainComplex& a, const ZXChainComplex& b) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument("zx tensor: factors over different spaces");
    const ChainComplex fa = flatten_complex(a), fb = flatten_complex(b);
    std::map<int, std::vector<Simplex>> la, lb;
    for (const auto& [r, m] : a.modules()) la[r] = slot_supports(m);
    for (const auto& [r, m] : b.modules()) lb[r] = slot_supports(m);

    const ChainComplex full = tensor(fa, fb);
    const TensorLayout layout(fa, fb);
    std::map<int, std::vector<int>> keep; // total degree -> kept full indices
    for (int m = full.min_degree(); m <= full.max_degree(); ++m) {
        auto& rows = keep[m];
        for (const auto& block : layout.blocks(m)) {
            const int p = block.left_degree, q = m - p;
            const auto &sa = la[p], &sb = lb[q];
            for (int i = 0; i < block.left_dim; ++i)
                for (int j = 0; j < block.right_dim; ++j)
                    if (!simplex_intersection(sa[i], sb[j]).empty())
                        rows.push_back(layout.index(p, i, q, j));
        }
    }

    std::vector<int> dims;
    for (int m = full.min_degree(); m <= full.max_degree(); ++m)
        dims.push_back(static_cast<int>(keep[m].size()));
    std::map<int, IntMatrix> diffs;
    for (int m = full.min_degree() + 1; m <= full.max_degree(); ++m) {
        const auto &src = keep[m], &dst = keep[m - 1];
        const IntMatrix& dfull = full.d(m);
        IntMatrix sub(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::map<int, Int> column;
            for (int r = 0; r < dfull.rows(); ++r)
                if (dfull.at(r, src[c]) != 0) column[r] = dfull.at(r, src[c]);
            for (std::size_t r = 0; r < dst.size(); ++r) {
                const auto it = column.find(dst[r]);
                if (it != column.end()) {
                    sub.at(static_cast<int>(r), static_cast<int>(c)) = it->second;
                    column.erase(it);
                }
            }
            if (!column.empty())
                throw std::logic_error("zx tensor: support pairs not closed under d");
        }
        if (!sub.is_zero()) diffs[m] = std::move(sub);
    }
    ChainComplex subcomplex(full.min_degree(), std::move(dims), std::move(diffs));

    std::map<int, IntMatrix> inc;
    for (int m = subcomplex.min_degree(); m <= subcomplex.max_degree(); ++m) {
        IntMatrix comp(full.dim(m), subcomplex.dim(m));
        const auto& rows = keep[m];
        for (std::size_t c = 0; c < rows.size(); ++c)
            comp.at(rows[c], static_cast<int>(c)) = 1;
        inc[m] = std::move(comp);
    }
    ChainMap inclusion(subcomplex, full, std::move(inc));
    return {std::move(subcomplex), std::move(inclusion)};
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& x) {
    const auto& simp = x.simplices();
    const int count = static_cast<int>(simp.size());
    // chains of strict face inclusions, built by extending at the top; ids
    // ascend along a chain because the canonical order refines dimension
    std::vector<std::vector<Simplex>> ending(count);
    std::vector<Simplex> chains;
    for (int id = 0; id < count; ++id) {
        ending[id].push_back({id});
        for (int lower = 0; lower < id; ++lower) {
            if (simp[lower].size() >= simp[id].size() ||
                !is_face(simp[lower], simp[id]))
                continue;
            for (const auto& chain : ending[lower]) {
                Simplex extended = chain;
                extended.push_back(id);
                ending[id].push_back(std::move(extended));
            }
        }
        chains.insert(chains.end(), ending[id].begin(), ending[id].end());
    }
    return {SimplicialComplex(count, std::move(chains)), simp};
}

DualCellDecomposition::DualCellDecomposition(const SimplicialComplex& x, int n)
    : x_(x), n_(n), subdivision_(barycentric_subdivision(x)) {
    if (x.dimension() != n || !x.is_pure(n))
        throw std::invalid_argument("dual cells: complex is not pure of the stated dimension");
    for (const auto& sigma : x_.simplices()) {
        std::vector<Simplex> cell;
        for (const auto& chain : subdivision_.complex.simplices())
            if (is_face(sigma, subdivision_.barycenters[chain.front()]))
                cell.push_back(chain);
        cells_.emplace(sigma,
                       SimplicialComplex(subdivision_.complex.vertex_count(),
                                         std::move(cell)));
    }
}

const SimplicialComplex& DualCellDecomposition::cell(const Simplex& s) const {
    const auto it = cells_.find(s);
    if (it == cells_.end())
        throw std::invalid_argument("dual cells: unknown simplex");
    return it->second;
}

int DualCellDecomposition::cell_dimension(const Simplex& s) const {
    return cell(s).dimension();
}

SimplicialComplex DualCellDecomposition::cell_boundary(const Simplex& s) const {
    const int own = x_.index_of(s);
    std::vector<Simplex> out;
    for (const auto& chain : cell(s).simplices())
        if (chain.front() != own) out.push_back(chain);
    return SimplicialComplex(subdivision_.complex.vertex_count(), std::move(out));
}

std::map<Simplex, int> DualCellDecomposition::top_simplex_census() const {
    std::map<Simplex, int> census;
    for (const auto& sigma : x_.simplices())
        if (sigma.size() == 1) {
            int tops = 0;
            for (const auto& chain : cell(sigma).simplices())
                if (static_cast<int>(chain.size()) == n_ + 1) ++tops;
            census[sigma] = tops;
        }
    return census;
}

DualCellDecomposition dual_cells(const SimplicialComplex& x, int n) {
    return DualCellDecomposition(x, n);
}

CycleConditionReport check_cycle_conditions(const ZXChainComplex& c) {
    CycleConditionReport report;
    report.degree_bounds_ok = true;
    for (const auto& [r, m] : c.modules())
        for (const auto& [sigma, rank] : m.ranks()) {
            const int bound =
                c.ambient_dimension() - (static_cast<int>(sigma.size()) - 1);
            if (rank > 0 && (r < 0 || r > bound)) report.degree_bounds_ok = false;
        }
    report.top_locals_contractible = true;
    for (const auto& sigma : c.space().maximal_simplices())
        if (!is_acyclic(c.local_complex(sigma)))
            report.top_locals_contractible = false;
    report.assembled_acyclic = is_acyclic(flatten_complex(c));
    return report;
}

ZXModule random_zx_module(Rng& rng, const SimplicialComplex& x, int max_rank) {
    std::map<Simplex, int> ranks;
    for (const auto& s : x.simplices())
        if (rng.coin()) ranks[s] = rng.range(0, max_rank);
    return {x, std::move(ranks)};
}

ZXMorphism random_zx_morphism(Rng& rng, const ZXModule& source, const ZXModule& target) {
    std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks;
    for (const auto& [sigma, srank] : source.ranks())
        for (const auto& [tau, trank] : target.ranks()) {
            if (!is_face(sigma, tau) || rng.coin()) continue;
            IntMatrix b(trank, srank);
            for (int i = 0; i < trank; ++i)
                for (int j = 0; j < srank; ++j) b.at(i, j) = rng.range(-2, 2);
            blocks[{tau, sigma}] = std::move(b);
        }
    return {source, target, std::move(blocks)};
}

} // namespace lchain
