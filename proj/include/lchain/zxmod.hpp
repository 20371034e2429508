#pragma once
// Modules graded by the simplices of a finite simplicial complex, with
// morphisms constrained to point along cofaces. Chain complexes of such
// modules model sheaf-like local coefficient data: they assemble to ordinary
// complexes over simply connected spaces, tensor along intersecting supports,
// and are governed degreewise by dual-cell dimensions.
#include "lchain/chain.hpp"
#include "lchain/rng.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lchain {

// a simplex is a sorted list of vertex ids
using Simplex = std::vector<int>;

// canonical order: dimension first, then lexicographic
bool simplex_less(const Simplex& a, const Simplex& b);
bool is_face(const Simplex& face, const Simplex& of);
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
std::string simplex_name(const Simplex& s);

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // validates downward closure under faces
    SimplicialComplex(int vertex_count, std::vector<Simplex> simplices);
    static SimplicialComplex from_facets(int vertex_count,
                                         const std::vector<Simplex>& facets);

    int vertex_count() const { return vertex_count_; }
    // canonical (dimension, lex) order
    const std::vector<Simplex>& simplices() const { return simplices_; }
    bool contains(const Simplex& s) const;
    int index_of(const Simplex& s) const; // -1 when absent
    int dimension() const;                // -1 for the empty complex
    std::vector<Simplex> maximal_simplices() const;
    bool is_pure(int n) const;
    bool is_connected() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Simplex> simplices_;
};

// standard fixtures
SimplicialComplex full_simplex(int dim);
SimplicialComplex boundary_of_simplex(int dim); // S^{dim-1}
SimplicialComplex two_points();

// True when the edge-path group provably collapses: connected, and the
// presentation from a spanning tree plus triangle relations reduces to
// nothing under greedy Tietze moves. A false return means "not certified",
// not "not simply connected".
bool certified_simply_connected(const SimplicialComplex& x);

// free module graded by simplices: sigma carries a based free summand
class ZXModule {
public:
    ZXModule(SimplicialComplex x, std::map<Simplex, int> ranks);

    const SimplicialComplex& space() const { return x_; }
    const std::map<Simplex, int>& ranks() const { return ranks_; }
    int rank(const Simplex& s) const;
    int total_rank() const;
    // start of the sigma block when the grading is flattened in canonical
    // simplex order; -1 for unsupported simplices
    int offset(const Simplex& s) const;

    bool operator==(const ZXModule&) const = default;

private:
    SimplicialComplex x_;
    std::map<Simplex, int> ranks_;
};

// blocks keyed (target simplex, source simplex); the coface support
// condition is *not* a constructor invariant, so that violating morphisms
// are representable and detectable
class ZXMorphism {
public:
    ZXMorphism(ZXModule source, ZXModule target,
               std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks);
    static ZXMorphism identity(const ZXModule& m);
    static ZXMorphism zero(ZXModule source, ZXModule target);

    const ZXModule& source() const { return source_; }
    const ZXModule& target() const { return target_; }
    const std::map<std::pair<Simplex, Simplex>, IntMatrix>& blocks() const {
        return blocks_;
    }
    IntMatrix block(const Simplex& tau, const Simplex& sigma) const;

    bool operator==(const ZXMorphism&) const = default;

private:
    ZXModule source_, target_;
    // zero blocks are dropped, so equality is structural
    std::map<std::pair<Simplex, Simplex>, IntMatrix> blocks_;
};

// true iff every nonzero block points from a simplex to one of its cofaces
bool check_support(const ZXMorphism& f);
ZXMorphism compose(const ZXMorphism& g, const ZXMorphism& f);

// chain complex of graded modules; the ambient dimension n corresponds to
// the dimension of the cycle the complex is meant to carry and is not
// derived from the grading
class ZXChainComplex {
public:
    // rejects mismatched shapes, support violations in any differential,
    // and d^2 != 0
    ZXChainComplex(SimplicialComplex x, int ambient_dimension,
                   std::map<int, ZXModule> modules,
                   std::map<int, ZXMorphism> differentials);

    const SimplicialComplex& space() const { return x_; }
    int ambient_dimension() const { return n_; }
    const std::map<int, ZXModule>& modules() const { return modules_; }
    const std::map<int, ZXMorphism>& differentials() const { return differentials_; }
    int rank(int degree, const Simplex& s) const;
    ZXModule module_at(int degree) const; // empty module when absent

    // the diagonal part over one simplex; closed under d by the support
    // condition
    ChainComplex local_complex(const Simplex& s) const;

private:
    SimplicialComplex x_;
    int n_ = 0;
    std::map<int, ZXModule> modules_;
    std::map<int, ZXMorphism> differentials_;
};

// Assembly forgets the simplex grading. Only certified simply connected
// spaces are accepted: over those the covering translation data the graded
// category encodes is trivial, and forgetting the grading is the honest
// specialization.
int assemble(const ZXModule& m);
IntMatrix assemble(const ZXMorphism& f);
ChainComplex assemble(const ZXChainComplex& c);

// the sub-double-complex of the full tensor spanned by pairs of simplices
// with nonempty intersection, plus its inclusion (a chain map by support
// transitivity)
struct ZXTensor {
    ChainComplex complex;
    ChainMap inclusion;
};
ZXTensor zx_tensor(const ZXChainComplex& a, const ZXChainComplex& b);

// barycentric subdivision: one vertex per simplex, simplices are chains of
// strict face inclusions
struct BarycentricSubdivision {
    SimplicialComplex complex;
    std::vector<Simplex> barycenters; // subdivision vertex id -> original simplex
};
BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& x);

// dual cells D(sigma): subcomplexes of the subdivision spanned by chains
// whose smallest member is a coface of sigma
class DualCellDecomposition {
public:
    DualCellDecomposition(const SimplicialComplex& x, int n);

    const BarycentricSubdivision& subdivision() const { return subdivision_; }
    int ambient_dimension() const { return n_; }
    const SimplicialComplex& cell(const Simplex& s) const;
    int cell_dimension(const Simplex& s) const;
    // chains avoiding the barycenter of sigma itself; equals the union of
    // the cells of the strict cofaces
    SimplicialComplex cell_boundary(const Simplex& s) const;
    // top simplices of the subdivision contained in the cell of each vertex;
    // these partition all top simplices
    std::map<Simplex, int> top_simplex_census() const;

private:
    SimplicialComplex x_;
    int n_ = 0;
    BarycentricSubdivision subdivision_;
    std::map<Simplex, SimplicialComplex> cells_;
};

DualCellDecomposition dual_cells(const SimplicialComplex& x, int n);

// (a) every supported degree lies in [0, n - dim sigma]; (b) the local
// complexes at the maximal simplices are acyclic; (c) the assembled (grading
// forgotten) total complex is acyclic
struct CycleConditionReport {
    bool degree_bounds_ok = false;
    bool top_locals_contractible = false;
    bool assembled_acyclic = false;
    bool ok() const {
        return degree_bounds_ok && top_locals_contractible && assembled_acyclic;
    }
};
CycleConditionReport check_cycle_conditions(const ZXChainComplex& c);

// random support-respecting data for property tests
ZXModule random_zx_module(Rng& rng, const SimplicialComplex& x, int max_rank);
ZXMorphism random_zx_morphism(Rng& rng, const ZXModule& source, const ZXModule& target);

} // namespace lchain
