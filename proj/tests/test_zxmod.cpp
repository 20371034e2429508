#include "lchain/zxmod.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace lchain;

namespace {

// rank 1 at sigma in degrees [degree, degree-1] with identity differential
ZXChainComplex local_cone(const SimplicialComplex& x, int n, const Simplex& sigma,
                          int degree) {
    const ZXModule top(x, {{sigma, 1}}), bottom(x, {{sigma, 1}});
    const ZXMorphism d(top, bottom, {{{sigma, sigma}, IntMatrix::identity(1)}});
    return {x, n, {{degree, top}, {degree - 1, bottom}}, {{degree, d}}};
}

// rank 1 at sigma in a single degree, zero differential
ZXChainComplex local_unit(const SimplicialComplex& x, int n, const Simplex& sigma,
                          int degree) {
    return {x, n, {{degree, ZXModule(x, {{sigma, 1}})}}, {}};
}

} // namespace

TEST_CASE("simplicial complexes validate and order canonically") {
    const SimplicialComplex s2 = boundary_of_simplex(3);
    CHECK(s2.vertex_count() == 4);
    CHECK(s2.simplices().size() == 14); // 4 + 6 + 4
    CHECK(s2.dimension() == 2);
    CHECK(s2.contains({1, 3}));
    CHECK_FALSE(s2.contains({0, 1, 2, 3}));
    CHECK(s2.is_pure(2));
    CHECK(s2.is_connected());
    CHECK(s2.maximal_simplices().size() == 4);

    // canonical order refines dimension
    for (std::size_t i = 1; i < s2.simplices().size(); ++i)
        CHECK(simplex_less(s2.simplices()[i - 1], s2.simplices()[i]));
    CHECK(s2.index_of({0}) == 0);
    CHECK(s2.index_of({0, 1}) == 4);
    CHECK(s2.index_of({9}) == -1);

    CHECK_THROWS_AS(SimplicialComplex(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(1, {{0, 1}, {0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(2, {{}}), std::invalid_argument);

    CHECK_FALSE(two_points().is_connected());
    CHECK(two_points().dimension() == 0);
    const SimplicialComplex mixed(4, {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2},
                                      {0, 1, 2}, {2, 3}});
    CHECK_FALSE(mixed.is_pure(2));
}

TEST_CASE("simple connectivity certificates") {
    CHECK(certified_simply_connected(full_simplex(0)));
    CHECK(certified_simply_connected(full_simplex(2)));
    CHECK(certified_simply_connected(full_simplex(3)));
    CHECK(certified_simply_connected(boundary_of_simplex(3)));
    CHECK(certified_simply_connected(boundary_of_simplex(4)));
    CHECK(certified_simply_connected(SimplicialComplex()));

    // the circle has a free edge-path group, two points are disconnected
    CHECK_FALSE(certified_simply_connected(boundary_of_simplex(2)));
    CHECK_FALSE(certified_simply_connected(two_points()));
}

TEST_CASE("graded modules keep per-simplex ranks") {
    const SimplicialComplex x = boundary_of_simplex(3);
    const ZXModule m(x, {{{0}, 2}, {{0, 1}, 1}, {{1}, 0}});
    CHECK(m.rank({0}) == 2);
    CHECK(m.rank({1}) == 0);
    CHECK(m.ranks().size() == 2); // zero ranks are dropped
    CHECK(m.total_rank() == 3);
    CHECK(m.offset({0}) == 0);
    CHECK(m.offset({0, 1}) == 2); // canonical order puts vertices first
    CHECK(m.offset({2}) == -1);

    CHECK_THROWS_AS(ZXModule(x, {{{0, 1, 2, 3}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ZXModule(x, {{{0}, -1}}), std::invalid_argument);
}

TEST_CASE("morphism blocks respect shapes, support is a separate check") {
    const SimplicialComplex x = boundary_of_simplex(3);
    const ZXModule a(x, {{{0}, 1}, {{0, 1}, 2}});
    const ZXModule b(x, {{{0}, 1}, {{0, 1}, 1}, {{0, 1, 2}, 1}});

    CHECK(check_support(ZXMorphism::identity(a)));
    CHECK(check_support(ZXMorphism::zero(a, b)));

    const ZXMorphism up(a, b, {{{{0, 1}, {0}}, IntMatrix::from_rows({{3}})}});
    CHECK(check_support(up));

    // a block dropping from an edge to a vertex is representable but flagged
    const ZXMorphism down(a, b, {{{{0}, {0, 1}}, IntMatrix::from_rows({{1, 2}})}});
    CHECK_FALSE(check_support(down));

    CHECK_THROWS_AS(ZXMorphism(a, b, {{{{0, 1}, {0}}, IntMatrix::from_rows({{1, 2}})}}),
                    std::invalid_argument); // shape mismatch
    CHECK_THROWS_AS(ZXMorphism(a, b, {{{{2}, {0}}, IntMatrix::from_rows({{1}})}}),
                    std::invalid_argument); // unsupported target simplex
    const ZXModule other(full_simplex(2), {});
    CHECK_THROWS_AS(ZXMorphism(a, other, {}), std::invalid_argument);
}

TEST_CASE("composition preserves support and is associative") {
    const SimplicialComplex x = boundary_of_simplex(3);
    Rng rng(0x2e551);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 40; ++trial) {
        const ZXModule a = random_zx_module(rng, x, 2);
        const ZXModule b = random_zx_module(rng, x, 2);
        const ZXModule c = random_zx_module(rng, x, 2);
        const ZXMorphism f = random_zx_morphism(rng, a, b);
        const ZXMorphism g = random_zx_morphism(rng, b, c);
        if (f.blocks().empty() || g.blocks().empty()) continue;
        CHECK(check_support(f));
        CHECK(check_support(compose(g, f)));
        CHECK(compose(g, ZXMorphism::identity(b)) == g);
        CHECK(compose(ZXMorphism::identity(b), f) == f);

        const ZXModule d = random_zx_module(rng, x, 2);
        const ZXMorphism h = random_zx_morphism(rng, c, d);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        ++done;
    }
    CHECK(done >= 40);
    CHECK_THROWS_AS(compose(random_zx_morphism(rng, random_zx_module(rng, x, 1),
                                               random_zx_module(rng, x, 1)),
                            ZXMorphism::identity(ZXModule(x, {{{0}, 3}}))),
                    std::invalid_argument);
}

TEST_CASE("chain complexes of graded modules enforce their axioms") {
    const SimplicialComplex x = boundary_of_simplex(3);
    const Simplex sigma{0, 1, 2};

    CHECK_NOTHROW(local_cone(x, 4, sigma, 2));
    CHECK_NOTHROW(local_unit(x, 4, sigma, 1));

    // support violation inside a differential
    {
        const ZXModule top(x, {{{0, 1}, 1}});
        const ZXModule bottom(x, {{{0}, 1}});
        const ZXMorphism d(top, bottom, {{{{0}, {0, 1}}, IntMatrix::from_rows({{1}})}});
        CHECK_THROWS_AS(ZXChainComplex(x, 3, {{1, top}, {0, bottom}}, {{1, d}}),
                        std::invalid_argument);
    }
    // d^2 != 0
    {
        const ZXModule m(x, {{sigma, 1}});
        const ZXMorphism d(m, m, {{{sigma, sigma}, IntMatrix::from_rows({{1}})}});
        CHECK_THROWS_AS(
            ZXChainComplex(x, 4, {{2, m}, {1, m}, {0, m}}, {{2, d}, {1, d}}),
            std::invalid_argument);
    }
    // differential endpoints must match the module grading
    {
        const ZXModule m(x, {{sigma, 1}});
        const ZXMorphism d(m, m, {{{sigma, sigma}, IntMatrix::from_rows({{1}})}});
        CHECK_THROWS_AS(ZXChainComplex(x, 4, {{1, m}}, {{1, d}}),
                        std::invalid_argument);
    }

    const ZXChainComplex cone = local_cone(x, 4, sigma, 2);
    const ChainComplex local = cone.local_complex(sigma);
    CHECK(local.min_degree() == 1);
    CHECK(local.max_degree() == 2);
    CHECK(local.d(2) == IntMatrix::identity(1));
    CHECK(cone.local_complex({0}).empty());
    CHECK(cone.rank(2, sigma) == 1);
}

TEST_CASE("assembly needs a certificate and is functorial") {
    const SimplicialComplex x = boundary_of_simplex(3);

    CHECK(assemble(ZXModule(x, {{{2}, 1}})) == 1);
    CHECK(assemble(ZXModule(x, {{{0}, 2}, {{1, 2}, 3}})) == 5);

    CHECK_THROWS_AS(assemble(ZXModule(two_points(), {{{0}, 1}})), std::domain_error);
    CHECK_THROWS_AS(assemble(ZXModule(boundary_of_simplex(2), {{{0}, 1}})),
                    std::domain_error);

    Rng rng(0xfefe12);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 30; ++trial) {
        const ZXModule a = random_zx_module(rng, x, 2);
        const ZXModule b = random_zx_module(rng, x, 2);
        const ZXModule c = random_zx_module(rng, x, 2);
        const ZXMorphism f = random_zx_morphism(rng, a, b);
        const ZXMorphism g = random_zx_morphism(rng, b, c);
        if (f.blocks().empty() || g.blocks().empty()) continue;
        CHECK(assemble(compose(g, f)) == assemble(g) * assemble(f));
        CHECK(assemble(ZXMorphism::identity(a)) == IntMatrix::identity(a.total_rank()));
        ++done;
    }
    CHECK(done >= 30);

    // an assembled local cone is contractible
    const ZXChainComplex cone = local_cone(x, 4, {0, 1, 2}, 2);
    CHECK(is_acyclic(assemble(cone)));
    const ChainComplex unit = assemble(local_unit(x, 4, {0, 1}, 1));
    CHECK(unit.dim(1) == 1);
    CHECK_FALSE(is_acyclic(unit));
}

TEST_CASE("tensor over the space keeps only intersecting supports") {
    // over a point the construction is the ordinary tensor
    {
        const SimplicialComplex pt = full_simplex(0);
        const ZXTensor t = zx_tensor(local_cone(pt, 2, {0}, 1), local_unit(pt, 2, {0}, 0));
        const ChainComplex full = tensor(assemble(local_cone(pt, 2, {0}, 1)),
                                         assemble(local_unit(pt, 2, {0}, 0)));
        CHECK(t.complex == full);
    }
    // disjoint points: all cross terms are excluded
    {
        const SimplicialComplex pts = two_points();
        const ZXModule diag(pts, {{{0}, 1}, {{1}, 1}});
        const ZXChainComplex c(pts, 0, {{0, diag}}, {});
        const ZXTensor t = zx_tensor(c, c);
        CHECK(t.complex.dim(0) == 2); // 0x0 and 1x1 survive out of 4
        CHECK(t.inclusion.component(0).rows() == 4);
        CHECK(t.inclusion.component(0).cols() == 2);
    }
    // modules concentrated on a common top simplex reproduce the full tensor
    {
        const SimplicialComplex x = full_simplex(2);
        const Simplex top{0, 1, 2};
        const ZXChainComplex a = local_cone(x, 3, top, 1);
        const ZXChainComplex b = local_unit(x, 3, top, 1);
        const ZXTensor t = zx_tensor(a, b);
        CHECK(t.complex == tensor(assemble(a), assemble(b)));
    }
    // mixed supports over the sphere: d^2 = 0 and the inclusion being a chain
    // map are enforced by construction; spot-check the dimension drop
    {
        const SimplicialComplex x = boundary_of_simplex(3);
        const ZXModule m(x, {{{0}, 1}, {{1}, 1}, {{0, 1}, 1}});
        const ZXChainComplex c(x, 2, {{0, m}}, {});
        const ZXTensor t = zx_tensor(c, c);
        // pairs with empty intersection: (0)x(1) and (1)x(0)
        CHECK(t.complex.dim(0) == 7);
    }
    CHECK_THROWS_AS(zx_tensor(local_unit(full_simplex(1), 1, {0}, 0),
                              local_unit(full_simplex(2), 1, {0}, 0)),
                    std::invalid_argument);
}

TEST_CASE("dual cells of the tetrahedron boundary") {
    const SimplicialComplex s2 = boundary_of_simplex(3);
    const DualCellDecomposition dec = dual_cells(s2, 2);

    int cells_by_dim[3] = {0, 0, 0};
    Int euler = 0;
    for (const auto& sigma : s2.simplices()) {
        const int dim = dec.cell_dimension(sigma);
        CHECK(dim == 2 - (static_cast<int>(sigma.size()) - 1));
        ++cells_by_dim[dim];
        euler += (dim % 2 == 0) ? 1 : -1;
    }
    CHECK(cells_by_dim[2] == 4); // one per vertex
    CHECK(cells_by_dim[1] == 6); // one per edge
    CHECK(cells_by_dim[0] == 4); // one per triangle
    CHECK(euler == 2);

    // the 24 flags split evenly among the four vertex cells
    const auto census = dec.top_simplex_census();
    CHECK(census.size() == 4);
    int total = 0;
    for (const auto& [v, count] : census) {
        CHECK(count == 6);
        total += count;
    }
    int flags = 0;
    for (const auto& chain : dec.subdivision().complex.simplices())
        if (chain.size() == 3) ++flags;
    CHECK(flags == 24);
    CHECK(total == flags);

    // boundary of a cell is the union of the cells of strict cofaces
    for (const auto& sigma : s2.simplices()) {
        std::set<Simplex> expect;
        for (const auto& tau : s2.simplices())
            if (tau.size() > sigma.size() && is_face(sigma, tau))
                for (const auto& chain : dec.cell(tau).simplices())
                    expect.insert(chain);
        const auto got = dec.cell_boundary(sigma).simplices();
        CHECK(std::set<Simplex>(got.begin(), got.end()) == expect);
    }

    CHECK_THROWS_AS(dual_cells(boundary_of_simplex(3), 3), std::invalid_argument);
    const SimplicialComplex mixed(4, {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2},
                                      {0, 1, 2}, {2, 3}});
    CHECK_THROWS_AS(dual_cells(mixed, 2), std::invalid_argument);
}

TEST_CASE("dual cell dimensions on the four-sphere boundary") {
    const SimplicialComplex s3 = boundary_of_simplex(4);
    const DualCellDecomposition dec = dual_cells(s3, 3);
    Int euler = 0;
    for (const auto& sigma : s3.simplices()) {
        const int dim = dec.cell_dimension(sigma);
        CHECK(dim == 3 - (static_cast<int>(sigma.size()) - 1));
        euler += (dim % 2 == 0) ? 1 : -1;
    }
    CHECK(euler == 0); // odd-dimensional sphere
    const auto census = dec.top_simplex_census();
    int total = 0;
    for (const auto& [v, count] : census) total += count;
    int flags = 0;
    for (const auto& chain : dec.subdivision().complex.simplices())
        if (chain.size() == 4) ++flags;
    CHECK(total == flags);
    CHECK(flags == 120);
}

TEST_CASE("cycle condition report") {
    const SimplicialComplex x = boundary_of_simplex(3);

    const ZXChainComplex zero(x, 2, {}, {});
    CHECK(check_cycle_conditions(zero).ok());

    // a locally contractible top component passes
    const CycleConditionReport good =
        check_cycle_conditions(local_cone(x, 4, {0, 1, 2}, 2));
    CHECK(good.degree_bounds_ok);
    CHECK(good.top_locals_contractible);
    CHECK(good.assembled_acyclic);

    // homology at the top simplex fails contractibility and acyclicity
    const CycleConditionReport bad =
        check_cycle_conditions(local_unit(x, 4, {0, 1, 2}, 1));
    CHECK(bad.degree_bounds_ok);
    CHECK_FALSE(bad.top_locals_contractible);
    CHECK_FALSE(bad.assembled_acyclic);
    CHECK_FALSE(bad.ok());

    // degree above n - dim sigma breaks the bound condition only
    const CycleConditionReport high =
        check_cycle_conditions(local_cone(x, 2, {0, 1, 2}, 2));
    CHECK_FALSE(high.degree_bounds_ok);
    CHECK(high.top_locals_contractible);

    const CycleConditionReport negative =
        check_cycle_conditions(local_cone(x, 4, {0, 1, 2}, 0));
    CHECK_FALSE(negative.degree_bounds_ok);
}
