#include "lchain/qstruct.hpp"
#include "lchain/rng.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace lchain {

const char* flavor_name(Flavor f) {
    return f == Flavor::quadratic ? "quadratic" : "symmetric";
}

TensorSquare::TensorSquare(ChainComplex c) : base_(std::move(c)) {
    tt_ = tensor(base_, base_);
    layout_ = TensorLayout(base_, base_);
}

const IntMatrix& TensorSquare::transposition(int m) const {
    auto it = tmat_.find(m);
    if (it != tmat_.end()) return it->second;
    const int dim = layout_.dim(m);
    IntMatrix t(dim, dim);
    for (const auto& block : layout_.blocks(m)) {
        const int p = block.left_degree;
        const int q = m - p;
        const int sign = (p % 2 != 0 && q % 2 != 0) ? -1 : 1;
        for (int i = 0; i < block.left_dim; ++i)
            for (int j = 0; j < block.right_dim; ++j)
                t.at(layout_.index(q, j, p, i), layout_.index(p, i, q, j)) = sign;
    }
    return tmat_.emplace(m, std::move(t)).first->second;
}

IntVec TensorSquare::transpose_apply(int m, const IntVec& v) const {
    const int dim = layout_.dim(m);
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("transpose_apply: dimension mismatch");
    IntVec out(dim);
    for (const auto& block : layout_.blocks(m)) {
        const int p = block.left_degree;
        const int q = m - p;
        const int sign = (p % 2 != 0 && q % 2 != 0) ? -1 : 1;
        for (int i = 0; i < block.left_dim; ++i)
            for (int j = 0; j < block.right_dim; ++j) {
                const Int& x = v[layout_.index(p, i, q, j)];
                if (x == 0) continue;
                out[layout_.index(q, j, p, i)] = sign * x;
            }
    }
    return out;
}

const std::vector<HyperSlot> Hypercomplex::empty_{};

const std::vector<HyperSlot>& Hypercomplex::slots(int m) const {
    auto it = slots_.find(m);
    return it == slots_.end() ? empty_ : it->second;
}

Hypercomplex::Hypercomplex(const ChainComplex& c, Flavor f, int smax)
    : square_(c), flavor_(f), smax_(smax) {
    if (smax < 0) throw std::invalid_argument("hypercomplex: negative truncation");
    const auto& layout = square_.layout();
    const auto& tt = square_.complex();

    // slot s of degree m holds (C⊗C)_{m∓s}; enumerate the degrees where
    // anything survives
    const int lo = f == Flavor::quadratic ? tt.min_degree() : tt.min_degree() - smax_;
    const int hi = f == Flavor::quadratic ? tt.max_degree() + smax_ : tt.max_degree();
    for (int m = lo; m <= hi; ++m) {
        std::vector<HyperSlot> row;
        int offset = 0;
        for (int s = 0; s <= smax_; ++s) {
            const int td = f == Flavor::quadratic ? m - s : m + s;
            const int dim = layout.dim(td);
            if (dim == 0) continue;
            row.push_back({s, td, offset, dim});
            offset += dim;
        }
        if (!row.empty()) slots_.emplace(m, std::move(row));
    }

    auto slot_dim = [&](int m) {
        int total = 0;
        for (const auto& sl : slots(m)) total += sl.dim;
        return total;
    };
    auto find_slot = [&](int m, int s) -> const HyperSlot* {
        for (const auto& sl : slots(m)) {
            if (sl.s == s) return &sl;
        }
        return nullptr;
    };

    std::map<int, IntMatrix> diff;
    for (const auto& [m, row] : slots_) {
        const int out_dim = slot_dim(m - 1);
        if (out_dim == 0) continue;
        IntMatrix d(out_dim, slot_dim(m));
        bool nonzero = false;
        for (const auto& src : row) {
            const int td = src.tensor_degree;
            // internal differential of C⊗C, with the quadratic flavor's
            // (-1)^s twist
            if (const auto* dst = find_slot(m - 1, src.s); dst && dst->dim > 0) {
                IntMatrix blockmat = tt.d(td);
                if (f == Flavor::quadratic && src.s % 2 != 0) blockmat = -blockmat;
                d.insert_block(dst->offset, src.offset, blockmat);
                nonzero = nonzero || !blockmat.is_zero();
            }
            // the W-resolution arrow 1 ± T
            const int ws = f == Flavor::quadratic ? src.s - 1 : src.s + 1;
            if (const auto* dst = find_slot(m - 1, ws)) {
                const auto& t = square_.transposition(td);
                IntMatrix blockmat(src.dim, src.dim);
                if (f == Flavor::quadratic) {
                    // coefficient of ψ_s in (Dψ)_{s-1} is 1 + (-1)^s T
                    blockmat = IntMatrix::identity(src.dim);
                    blockmat = src.s % 2 == 0 ? blockmat + t : blockmat - t;
                } else {
                    // coefficient of φ_s in (Dφ)_{s+1} is -(-1)^m (1 + (-1)^{s+1} T)
                    blockmat = IntMatrix::identity(src.dim);
                    blockmat = src.s % 2 == 0 ? blockmat - t : blockmat + t;
                    if (m % 2 == 0) blockmat = -blockmat;
                }
                d.insert_block(dst->offset, src.offset, blockmat);
                nonzero = nonzero || !blockmat.is_zero();
            }
        }
        if (nonzero) diff.emplace(m, std::move(d));
    }

    if (!slots_.empty()) {
        const int min_m = slots_.begin()->first;
        const int max_m = slots_.rbegin()->first;
        std::vector<int> dims(max_m - min_m + 1, 0);
        for (const auto& [m, row] : slots_)
            for (const auto& sl : row) dims[m - min_m] += sl.dim;
        total_ = ChainComplex(min_m, std::move(dims), std::move(diff));
    }
}

IntVec Hypercomplex::pack(const StructureCycle& z) const {
    if ((z.flavor == Flavor::quadratic) != (flavor_ == Flavor::quadratic))
        throw std::invalid_argument("pack: flavor mismatch");
    const auto& row = slots(z.degree);
    int total = 0;
    for (const auto& sl : row) total += sl.dim;
    IntVec v(total);
    for (const auto& [s, comp] : z.components) {
        bool all_zero = true;
        for (const auto& x : comp)
            if (x != 0) all_zero = false;
        const HyperSlot* slot = nullptr;
        for (const auto& sl : row)
            if (sl.s == s) slot = &sl;
        if (slot == nullptr) {
            if (all_zero) continue;
            std::ostringstream os;
            os << "pack: nonzero component in empty slot " << s;
            throw std::invalid_argument(os.str());
        }
        if (static_cast<int>(comp.size()) != slot->dim)
            throw std::invalid_argument("pack: component dimension mismatch");
        for (int i = 0; i < slot->dim; ++i) v[slot->offset + i] = comp[i];
    }
    return v;
}

StructureCycle Hypercomplex::unpack(const IntVec& v, int degree) const {
    StructureCycle z;
    z.flavor = flavor_;
    z.degree = degree;
    const auto& row = slots(degree);
    int total = 0;
    for (const auto& sl : row) total += sl.dim;
    if (static_cast<int>(v.size()) != total)
        throw std::invalid_argument("unpack: dimension mismatch");
    for (const auto& sl : row) {
        IntVec comp(v.begin() + sl.offset, v.begin() + sl.offset + sl.dim);
        bool all_zero = true;
        for (const auto& x : comp)
            if (x != 0) all_zero = false;
        if (!all_zero) z.components.emplace(sl.s, std::move(comp));
    }
    return z;
}

int default_smax(const ChainComplex& c, Flavor f, int n) {
    if (c.total_rank() == 0) return 0;
    // exactness at degree n needs every slot that can appear in degrees
    // n and n+1; beyond that the tensor square is out of range
    const int bound = f == Flavor::quadratic ? n + 1 - 2 * c.min_degree()
                                             : 2 * c.max_degree() - n + 1;
    return std::max(0, bound);
}

AbelianGroup q_group(const ChainComplex& c, int n, Flavor f) {
    return q_group(c, n, f, default_smax(c, f, n));
}

AbelianGroup q_group(const ChainComplex& c, int n, Flavor f, int smax) {
    Hypercomplex h(c, f, smax);
    return homology(h.total(), n).group;
}

IntVec t_action(const ChainComplex& c, const IntVec& z, int m) {
    TensorSquare sq(c);
    if (static_cast<int>(z.size()) != sq.layout().dim(m))
        throw std::invalid_argument("t_action: dimension mismatch");
    return sq.transpose_apply(m, z);
}

// Evaluates the hypercomplex differential slot by slot instead of packing the
// total complex, so the tensor square is never materialized as matrices.
bool is_structure_cycle(const ChainComplex& c, const StructureCycle& z) {
    const TensorSquare sq(c);
    const auto& layout = sq.layout();
    const auto& tt = sq.complex();
    const int n = z.degree;
    const bool quad = z.flavor == Flavor::quadratic;

    int top_slot = -1;
    for (const auto& [s, comp] : z.components) {
        if (s < 0) throw std::invalid_argument("structure cycle: negative slot");
        const int td = quad ? n - s : n + s;
        if (static_cast<int>(comp.size()) != layout.dim(td))
            throw std::invalid_argument("structure cycle: component dimension mismatch");
        top_slot = std::max(top_slot, s);
    }
    auto component = [&](int s) -> IntVec {
        auto it = z.components.find(s);
        if (it != z.components.end()) return it->second;
        const int td = quad ? n - s : n + s;
        return IntVec(layout.dim(td));
    };

    for (int s = 0; s <= top_slot + 1; ++s) {
        const int td_out = quad ? n - 1 - s : n - 1 + s;
        const int out_dim = layout.dim(td_out);
        IntVec out(out_dim);
        {
            const int td_in = quad ? n - s : n + s;
            const IntVec dv = tt.d(td_in).apply(component(s));
            const int sign = quad && s % 2 != 0 ? -1 : 1;
            for (int i = 0; i < out_dim; ++i) out[i] += sign * dv[i];
        }
        if (quad) {
            // slot s picks up (1 + (-1)^{s+1} T) of the component one slot up
            if (out_dim > 0) {
                const IntVec w = component(s + 1);
                const IntVec tw = sq.transpose_apply(td_out, w);
                const int sign = s % 2 == 0 ? -1 : 1;
                for (int i = 0; i < out_dim; ++i) out[i] += w[i] + sign * tw[i];
            }
        } else if (s >= 1 && out_dim > 0) {
            // slot s picks up -(-1)^n (1 + (-1)^s T) of the component below
            const IntVec w = component(s - 1);
            const IntVec tw = sq.transpose_apply(td_out, w);
            const int tsign = s % 2 == 0 ? 1 : -1;
            const int outer = n % 2 == 0 ? -1 : 1;
            for (int i = 0; i < out_dim; ++i) out[i] += outer * (w[i] + tsign * tw[i]);
        }
        for (const auto& x : out)
            if (x != 0) return false;
    }
    return true;
}

bool classes_equal(const ChainComplex& c, const StructureCycle& a, const StructureCycle& b) {
    if (a.flavor != b.flavor || a.degree != b.degree)
        throw std::invalid_argument("classes_equal: incomparable structures");
    if (!is_structure_cycle(c, a) || !is_structure_cycle(c, b))
        throw std::invalid_argument("classes_equal: input is not a cycle");
    Hypercomplex h(c, a.flavor, default_smax(c, a.flavor, a.degree));
    const IntVec va = h.pack(a), vb = h.pack(b);
    IntVec diff(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) diff[i] = va[i] - vb[i];
    return solve(h.total().d(a.degree + 1), diff).has_value();
}

StructureCycle random_cycle(const ChainComplex& c, int n, Flavor f, std::uint64_t seed) {
    Hypercomplex h(c, f, default_smax(c, f, n));
    const IntMatrix kernel = kernel_basis(h.total().d(n));
    Rng rng(seed);
    IntVec coeffs(kernel.cols());
    for (auto& x : coeffs) x = rng.range(-2, 2);
    return h.unpack(kernel.apply(coeffs), n);
}

StructureCycle symmetrize(const ChainComplex& c, const StructureCycle& psi) {
    if (psi.flavor != Flavor::quadratic)
        throw std::invalid_argument("symmetrize: expected a quadratic structure");
    if (!is_structure_cycle(c, psi))
        throw std::invalid_argument("symmetrize: input is not a cycle");
    TensorSquare sq(c);
    const int n = psi.degree;
    StructureCycle phi;
    phi.flavor = Flavor::symmetric;
    phi.degree = n;
    const int dim = sq.layout().dim(n);
    auto it = psi.components.find(0);
    if (it != psi.components.end() && dim > 0) {
        const IntVec& psi0 = it->second;
        if (static_cast<int>(psi0.size()) != dim)
            throw std::invalid_argument("symmetrize: component dimension mismatch");
        const IntVec t = sq.transpose_apply(n, psi0);
        IntVec phi0(dim);
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
            phi0[i] = psi0[i] + t[i];
            nonzero = nonzero || phi0[i] != 0;
        }
        if (nonzero) phi.components.emplace(0, std::move(phi0));
    }
    if (!is_structure_cycle(c, phi))
        throw std::logic_error("symmetrize: output fails the cycle test");
    return phi;
}

int slant_sign(int n, int r) {
    return (r * (n + 1)) % 2 != 0 ? -1 : 1;
}

std::map<int, IntMatrix> slant_components(const ChainComplex& c, const IntVec& z, int n) {
    TensorSquare sq(c);
    const auto& layout = sq.layout();
    if (static_cast<int>(z.size()) != layout.dim(n))
        throw std::invalid_argument("slant: dimension mismatch");
    std::map<int, IntMatrix> comps;
    for (const auto& block : layout.blocks(n)) {
        const int p = block.left_degree; // = n - r
        const int r = n - p;
        // z restricted to the (n-r, r) block is a matrix Z with Z[k][j] the
        // coefficient of e_k ⊗ e_j; evaluating the dual basis vector of
        // C_{n-r} on the left leg leaves the right leg, so the component is
        // the transpose, up to the dimension-dependent sign
        IntMatrix m(block.right_dim, block.left_dim);
        const int sign = slant_sign(n, r);
        for (int k = 0; k < block.left_dim; ++k)
            for (int j = 0; j < block.right_dim; ++j)
                m.at(j, k) = sign * z[layout.index(p, k, r, j)];
        if (!m.is_zero()) comps.emplace(r, std::move(m));
    }
    return comps;
}

ChainMap slant(const ChainComplex& c, const IntVec& z, int n) {
    return ChainMap(dual(c, n), c, slant_components(c, z, n));
}

std::vector<WCoproductTerm> w_coproduct(int s) {
    std::vector<WCoproductTerm> terms;
    for (int i = 0; i <= s; ++i) {
        const int j = s - i;
        terms.push_back({i, j, i % 2 != 0, (i % 2 != 0 && j % 2 != 0) ? -1 : 1});
    }
    return terms;
}

namespace {

// Z-basis of (W⊗W)_s: T^a e_i ⊗ T^b e_j with i+j = s and a, b ∈ {0,1}
struct WWElem {
    std::map<std::array<int, 3>, Int> coords; // (i, a, b) -> coefficient

    void add(int i, int a, int b, const Int& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = coords.try_emplace({i, a, b}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) coords.erase(it);
        }
    }
};

WWElem ww_differential(const WWElem& x, int s) {
    // d(u⊗v) = du⊗v + (-1)^i u⊗dv with d(T^a e_i) = T^a (1 + (-1)^i T) e_{i-1}
    WWElem out;
    for (const auto& [key, coeff] : x.coords) {
        const auto [i, a, b] = key;
        const int j = s - i;
        if (i > 0) {
            out.add(i - 1, a, b, coeff);
            out.add(i - 1, 1 - a, b, i % 2 == 0 ? coeff : -coeff);
        }
        if (j > 0) {
            const Int signed_coeff = i % 2 == 0 ? coeff : -coeff;
            out.add(i, a, b, signed_coeff);
            out.add(i, a, 1 - b, j % 2 == 0 ? signed_coeff : -signed_coeff);
        }
    }
    return out;
}

WWElem coproduct_elem(int s) {
    WWElem out;
    for (const auto& term : w_coproduct(s))
        out.add(term.left, 0, term.twist ? 1 : 0, term.coeff);
    return out;
}

} // namespace

void verify_w_coproduct(int smax) {
    for (int s = 0; s <= smax; ++s) {
        // equivariance forces the diagonal action; the chain-map equation is
        // d(Δe_s) = Δ(de_s) = (1 + (-1)^s T⊗T)(Δe_{s-1})
        WWElem lhs = ww_differential(coproduct_elem(s), s);
        WWElem rhs;
        if (s > 0) {
            for (const auto& [key, coeff] : coproduct_elem(s - 1).coords) {
                const auto [i, a, b] = key;
                rhs.add(i, a, b, coeff);
                rhs.add(i, 1 - a, 1 - b, s % 2 == 0 ? coeff : -coeff);
            }
        }
        if (lhs.coords != rhs.coords)
            throw std::logic_error("w_coproduct: chain-map equation fails");
        // counit on either leg (augmentation of W sends T^a e_0 to 1) must
        // return e_s on the other
        WWElem left_counit, right_counit;
        for (const auto& [key, coeff] : coproduct_elem(s).coords) {
            const auto [i, a, b] = key;
            if (i == 0) left_counit.add(s, b, 0, coeff);
            if (i == s) right_counit.add(s, a, 0, coeff);
        }
        WWElem expected;
        expected.add(s, 0, 0, 1);
        if (left_counit.coords != expected.coords || right_counit.coords != expected.coords)
            throw std::logic_error("w_coproduct: counit fails");
    }
}

} // namespace lchain
