#include "lchain/qstruct.hpp"
#include "lchain/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lchain;

namespace {

ChainComplex two_term(int m) {
    return ChainComplex(0, {1, 1}, {{1, IntMatrix::from_rows({{m}})}});
}

ChainComplex circle() {
    // S^1: Z in degrees 0 and 1, zero differential
    return ChainComplex(0, {1, 1}, {});
}

bool vec_is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

TEST_CASE("transposition is a chain involution") {
    Rng rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        TensorSquare sq(random_complex(rng, -1, 2, 3));
        const auto& tt = sq.complex();
        for (int m = tt.min_degree(); m <= tt.max_degree(); ++m) {
            const IntMatrix& t = sq.transposition(m);
            CHECK(t * t == IntMatrix::identity(sq.layout().dim(m)));
            if (m > tt.min_degree()) {
                // T d = d T: the involution is a map of complexes
                CHECK(sq.transposition(m - 1) * tt.d(m) == tt.d(m) * t);
            }
        }
    }
}

TEST_CASE("hypercomplex differentials square to zero by construction") {
    // the ChainComplex constructor enforces d∘d = 0, so building one is the test
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 3);
        for (int smax : {0, 1, 2, 4}) {
            CHECK_NOTHROW(Hypercomplex(c, Flavor::quadratic, smax));
            CHECK_NOTHROW(Hypercomplex(c, Flavor::symmetric, smax));
        }
    }
}

TEST_CASE("quadratic groups of the point") {
    // For Z concentrated in degree 0 the hypercomplex is Z in each slot with
    // the arrows alternating 0, 2, 0, 2, ... so the groups are the homology
    // of ... -> Z --2--> Z --0--> Z: Z, Z/2, 0, Z/2, 0, Z/2, ...
    ChainComplex pt = ChainComplex::point();
    CHECK(q_group(pt, 0, Flavor::quadratic) == AbelianGroup{1, {}});
    CHECK(q_group(pt, 1, Flavor::quadratic) == AbelianGroup{0, {2}});
    CHECK(q_group(pt, 2, Flavor::quadratic) == AbelianGroup{0, {}});
    CHECK(q_group(pt, 3, Flavor::quadratic) == AbelianGroup{0, {2}});
    CHECK(q_group(pt, 4, Flavor::quadratic) == AbelianGroup{0, {}});
    CHECK(q_group(pt, -1, Flavor::quadratic) == AbelianGroup{0, {}});
}

TEST_CASE("symmetric groups of the point") {
    ChainComplex pt = ChainComplex::point();
    CHECK(q_group(pt, 0, Flavor::symmetric) == AbelianGroup{1, {}});
    for (int n = 1; n <= 4; ++n)
        CHECK(q_group(pt, n, Flavor::symmetric) == AbelianGroup{0, {}});
}

TEST_CASE("truncation is stable beyond the default") {
    Rng rng(501);
    for (int trial = 0; trial < 8; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 2);
        if (c.empty()) continue;
        for (int n = -1; n <= 5; ++n) {
            for (Flavor f : {Flavor::quadratic, Flavor::symmetric}) {
                const int s0 = default_smax(c, f, n);
                const AbelianGroup base = q_group(c, n, f, s0);
                CHECK(q_group(c, n, f, s0 + 1) == base);
                CHECK(q_group(c, n, f, s0 + 2) == base);
            }
        }
    }
}

TEST_CASE("structure groups ignore contractible summands") {
    Rng rng(902);
    for (int trial = 0; trial < 6; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 2);
        ChainComplex d = random_complex(rng, 0, 1, 2);
        // C ⊕ cone(id_D) is chain-equivalent to C, and both structure groups
        // only see the equivalence class
        ChainComplex fat = direct_sum(c, mapping_cone(identity_map(d)));
        for (int n = 0; n <= 3; ++n) {
            CHECK(q_group(fat, n, Flavor::quadratic) == q_group(c, n, Flavor::quadratic));
            CHECK(q_group(fat, n, Flavor::symmetric) == q_group(c, n, Flavor::symmetric));
        }
    }
}

TEST_CASE("random cycles are cycles and survive a pack/unpack round trip") {
    Rng rng(33);
    int nonzero_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 3);
        for (Flavor f : {Flavor::quadratic, Flavor::symmetric}) {
            const int n = rng.range(0, 4);
            StructureCycle z = random_cycle(c, n, f, 1000 + trial);
            CHECK(is_structure_cycle(c, z));
            if (!z.components.empty()) ++nonzero_seen;
            Hypercomplex h(c, f, default_smax(c, f, n));
            CHECK(h.unpack(h.pack(z), n) == z);
        }
    }
    CHECK(nonzero_seen > 10); // the sampler is not degenerate
}

TEST_CASE("class equality is boundary equality") {
    ChainComplex pt = ChainComplex::point();
    // degree-1 quadratic structures on the point: slot s holds Z in tensor
    // degree 0 when s <= 1; cycles in degree 1 live in slot 1
    StructureCycle a{Flavor::quadratic, 1, {{1, {Int(1)}}}};
    StructureCycle b{Flavor::quadratic, 1, {{1, {Int(3)}}}};
    StructureCycle zero{Flavor::quadratic, 1, {}};
    CHECK(is_structure_cycle(pt, a));
    // the group is Z/2: 1 and 3 agree, 1 and 0 do not
    CHECK(classes_equal(pt, a, b));
    CHECK_FALSE(classes_equal(pt, a, zero));
    CHECK(classes_equal(pt, StructureCycle{Flavor::quadratic, 1, {{1, {Int(2)}}}}, zero));

    StructureCycle not_cycle{Flavor::quadratic, 2, {{2, {Int(1)}}}};
    CHECK_FALSE(is_structure_cycle(pt, not_cycle));
    CHECK_THROWS_AS(classes_equal(pt, not_cycle, not_cycle), std::invalid_argument);
    CHECK_THROWS_AS(classes_equal(pt, a, StructureCycle{Flavor::symmetric, 1, {}}),
                    std::invalid_argument);
}

TEST_CASE("symmetrization doubles the point generator") {
    ChainComplex pt = ChainComplex::point();
    StructureCycle psi{Flavor::quadratic, 0, {{0, {Int(1)}}}};
    StructureCycle phi = symmetrize(pt, psi);
    CHECK(phi.flavor == Flavor::symmetric);
    CHECK(phi.components.at(0) == IntVec{Int(2)});
    CHECK(is_structure_cycle(pt, phi));
    CHECK_THROWS_AS(symmetrize(pt, phi), std::invalid_argument);
}

TEST_CASE("symmetrization of random quadratic cycles gives symmetric cycles") {
    Rng rng(71);
    for (int trial = 0; trial < 12; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 3);
        const int n = rng.range(0, 3);
        StructureCycle psi = random_cycle(c, n, Flavor::quadratic, 400 + trial);
        StructureCycle phi = symmetrize(c, psi); // throws on sign-convention bugs
        CHECK(is_structure_cycle(c, phi));
    }
}

TEST_CASE("slant of the point structure is the identity") {
    ChainComplex pt = ChainComplex::point();
    ChainMap f = slant(pt, {Int(1)}, 0);
    CHECK(f.component(0) == IntMatrix::identity(1));
    CHECK(is_quasi_isomorphism(f));
}

TEST_CASE("slant components read the matrix blocks transposed") {
    // C = circle, n = 1: (C⊗C)_1 has blocks (0,1) and (1,0); a structure with
    // coefficient a on e0⊗e1 and b on e1⊗e0 pairs the degree-r dual basis to
    // degree r of C
    ChainComplex c = circle();
    TensorLayout layout(c, c);
    IntVec z(layout.dim(1));
    z[layout.index(0, 0, 1, 0)] = 5; // e0 ⊗ e1
    z[layout.index(1, 0, 0, 0)] = 7; // e1 ⊗ e0
    auto comps = slant_components(c, z, 1);
    // degree-1 component: dual of C_0 lands on the right leg of e0⊗e1
    CHECK(comps.at(1) == IntMatrix::from_rows({{5}}));
    CHECK(comps.at(0) == IntMatrix::from_rows({{7}}));
}

TEST_CASE("slant of symmetric cycles is a chain map") {
    // This pins down the sign interplay between the dual differential and the
    // slant: the degree-0 part of a symmetric cycle has vanishing tensor
    // differential, and its slant must commute with both differentials.
    // Checked with n of both parities; the even case is the delicate one.
    Rng rng(8008);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 50; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 3);
        const int n = rng.range(0, 4);
        StructureCycle phi = random_cycle(c, n, Flavor::symmetric, 7000 + trial);
        auto it = phi.components.find(0);
        if (it == phi.components.end() || vec_is_zero(it->second)) continue;
        CHECK_NOTHROW(slant(c, it->second, n)); // ChainMap ctor checks commutation
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("slant of symmetrized quadratic cycles is a chain map") {
    Rng rng(4141);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        ChainComplex c = random_complex(rng, 0, 2, 3);
        const int n = rng.range(0, 4);
        StructureCycle psi = random_cycle(c, n, Flavor::quadratic, 5000 + trial);
        StructureCycle phi = symmetrize(c, psi);
        auto it = phi.components.find(0);
        if (it == phi.components.end() || vec_is_zero(it->second)) continue;
        CHECK_NOTHROW(slant(c, it->second, n));
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("t_action matches the transposition matrix and fixes symmetrized data") {
    ChainComplex c = two_term(2);
    TensorLayout layout(c, c);
    // degree 2 of C⊗C is the single block (1,1), one basis vector e1⊗e1 with
    // T(e1⊗e1) = -e1⊗e1
    IntVec z(layout.dim(2));
    z[layout.index(1, 0, 1, 0)] = 1;
    IntVec tz = t_action(c, z, 2);
    CHECK(tz[layout.index(1, 0, 1, 0)] == -1);

    // degree 1: T swaps the (0,1) and (1,0) blocks without signs
    IntVec w(layout.dim(1));
    w[layout.index(0, 0, 1, 0)] = 3;
    IntVec tw = t_action(c, w, 1);
    CHECK(tw[layout.index(1, 0, 0, 0)] == 3);
    CHECK(tw[layout.index(0, 0, 1, 0)] == 0);
}

TEST_CASE("circle symmetric structure in degree 1") {
    // the fundamental structure of S^1: φ_0 = e1⊗e0 + e0⊗e1 is a cycle whose
    // slant is a quasi-isomorphism (degree-1 duality for the circle)
    ChainComplex c = circle();
    TensorLayout layout(c, c);
    IntVec phi0(layout.dim(1));
    phi0[layout.index(1, 0, 0, 0)] = 1;
    phi0[layout.index(0, 0, 1, 0)] = 1;
    StructureCycle phi{Flavor::symmetric, 1, {{0, phi0}}};
    CHECK(is_structure_cycle(c, phi));
    CHECK(is_quasi_isomorphism(slant(c, phi0, 1)));

    // symmetric groups of the circle: Q^1 contains this class; check the
    // group sizes directly
    CHECK(q_group(c, 1, Flavor::symmetric) == AbelianGroup{1, {2}});
}

TEST_CASE("equivariant coproduct on the resolution verifies") {
    CHECK_NOTHROW(verify_w_coproduct(12));
    // spot-check the closed form
    auto d3 = w_coproduct(3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[1].left == 1);
    CHECK(d3[1].right == 2);
    CHECK(d3[1].twist == true);
    CHECK(d3[1].coeff == 1);
    CHECK(d3[2].coeff == 1); // (-1)^{2*1}
    auto d4 = w_coproduct(4);
    CHECK(d4[1].coeff == -1); // (-1)^{1*3}
    CHECK(d4[3].coeff == -1); // (-1)^{3*1}
    CHECK(d4[2].coeff == 1);
}

TEST_CASE("quadratic groups of the circle") {
    // W ⊗_{Z[Z2]} (C⊗C) for C = S^1; the groups are 2-periodic up to the
    // dimension shift and can be checked against the skew/symmetric split
    ChainComplex c = circle();
    CHECK(q_group(c, 0, Flavor::quadratic) == AbelianGroup{1, {}});
    CHECK(q_group(c, 1, Flavor::quadratic) == AbelianGroup{1, {2}});
    CHECK(q_group(c, 2, Flavor::quadratic) == AbelianGroup{0, {2}});
    CHECK(q_group(c, 3, Flavor::quadratic) == AbelianGroup{0, {2}});
}

TEST_CASE("pack rejects malformed input") {
    ChainComplex pt = ChainComplex::point();
    Hypercomplex h(pt, Flavor::quadratic, 2);
    CHECK_THROWS_AS(h.pack(StructureCycle{Flavor::symmetric, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(h.pack(StructureCycle{Flavor::quadratic, 0, {{0, {Int(1), Int(2)}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(h.pack(StructureCycle{Flavor::quadratic, 0, {{5, {Int(1)}}}}),
                    std::invalid_argument);
    // zero components in empty slots are tolerated
    CHECK_NOTHROW(h.pack(StructureCycle{Flavor::quadratic, 0, {{5, {}}}}));
}
