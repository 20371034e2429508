#pragma once
// Bounded chain complexes of based f.g. free Z-modules and the constructions
// the rest of the workbench is built from: cones, tensor products (with the
// basis-ordering contract callers rely on), duals, and splitting diagnostics.
#include "lchain/intmat.hpp"
#include "lchain/rng.hpp"

#include <map>
#include <vector>

namespace lchain {

class ChainComplex {
public:
    ChainComplex() = default; // zero complex

    // dims[i] is the rank in degree min_degree+i; differentials are keyed by
    // the degree of their source. Shapes are checked and d∘d = 0 is enforced.
    ChainComplex(int min_degree, std::vector<int> dims, std::map<int, IntMatrix> differentials);

    static ChainComplex point(); // Z concentrated in degree 0

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }

    int dim(int r) const;
    // d_r: C_r -> C_{r-1}, zero-shaped outside the stored range
    IntMatrix d(int r) const;

    int total_rank() const;
    long long euler_characteristic() const;

    bool operator==(const ChainComplex& o) const = default;

private:
    int min_degree_ = 0;
    std::vector<int> dims_;
    std::map<int, IntMatrix> diffs_; // only interior, nonzero-shaped entries
};

class ChainMap {
public:
    ChainMap() = default;

    // components keyed by degree; missing components are zero. Commutation
    // f∘d = d∘f is checked degreewise and violations throw.
    ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    IntMatrix component(int r) const; // shaped target.dim(r) x source.dim(r)

private:
    ChainComplex source_, target_;
    std::map<int, IntMatrix> components_;
};

HomologyData homology(const ChainComplex& c, int r);
std::map<int, AbelianGroup> homology_groups(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

// cone_r = target_r ⊕ source_{r-1}, d = [[d_T, f], [0, -d_S]]
ChainComplex mapping_cone(const ChainMap& f);

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const ChainComplex& c);

// true iff the cone of f is acyclic (equivalently: every induced map on
// homology is an isomorphism)
bool is_quasi_isomorphism(const ChainMap& f);

// Basis bookkeeping for (A ⊗ B)_m. Blocks are ordered by increasing left
// degree; inside a block the pair (i, j) sits at i * right_dim + j. Every
// consumer of tensor coordinates goes through this table.
struct TensorBlock {
    int left_degree = 0;
    int offset = 0;
    int left_dim = 0, right_dim = 0;
};

class TensorLayout {
public:
    TensorLayout() = default;
    TensorLayout(const ChainComplex& a, const ChainComplex& b);

    int dim(int m) const;
    const std::vector<TensorBlock>& blocks(int m) const;
    // absolute index of (p, i) ⊗ (p+q-p..., j); the degree is p + q
    int index(int p, int i, int q, int j) const;

private:
    std::map<int, std::vector<TensorBlock>> blocks_;
    static const std::vector<TensorBlock> empty_;
};

// d(x⊗y) = dx⊗y + (-1)^p x⊗dy on the basis order of TensorLayout
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);

// (C^{n-*})_r = dual of C_{n-r}, differential (-1)^r * transpose(d_{n-r+1})
ChainComplex dual(const ChainComplex& c, int n);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// canonical inclusion A -> A ⊕ K as a chain map
ChainMap summand_inclusion(const ChainComplex& a, const ChainComplex& k);

// Splitting diagnostics for a composite of split injections. A map splits
// degreewise when an integer retraction exists, i.e. every component has a
// left inverse over Z; that is read off the Smith form.
struct SplittingReport {
    bool f_split = false;
    bool g_split = false;
    bool homology_splits = false; // H(cone(g∘f)) ≅ H(cone f) ⊕ H(cone g) degreewise
    std::map<int, AbelianGroup> cone_f, cone_g, cone_gf;
    bool ok() const { return f_split && g_split && homology_splits; }
};

SplittingReport splitting_check(const ChainMap& f, const ChainMap& g);

// ---- randomized builders (seeded; used by property suites and selftest) ----

// direct sum of free generators and two-term pieces Z --m--> Z, conjugated by
// small unimodular basis changes in every degree; d∘d = 0 by construction
ChainComplex random_complex(Rng& rng, int min_degree, int max_degree, int pieces);

// (u, u^{-1}) as a product of a few elementary operations
std::pair<IntMatrix, IntMatrix> random_unimodular_pair(Rng& rng, int n, int ops);

struct SplitSystem {
    ChainMap f; // A -> B
    ChainMap g; // B -> C
};

// B ≅ A ⊕ K1 and C ≅ A ⊕ K1 ⊕ K2 in scrambled bases, with f and g the
// inclusions; both are split injections by construction
SplitSystem random_split_system(Rng& rng);

} // namespace lchain
