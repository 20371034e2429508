#include "lchain/json_io.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace lchain;

TEST_CASE("matrices round-trip with unbounded entries") {
    IntMatrix m(2, 3);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(1, 2) = Int("-987654321098765432109876543210");
    const Json j = to_json(m);
    CHECK(j[0][0] == "123456789012345678901234567890");
    CHECK(matrix_from_json(j) == m);

    CHECK(matrix_from_json(Json::array()) == IntMatrix(0, 0));
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1"],["2","3"]])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["oops"]])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("3")), std::invalid_argument);

    // plain JSON integers are tolerated on input
    CHECK(matrix_from_json(Json::parse("[[4]]")) == IntMatrix::from_rows({{4}}));
}

TEST_CASE("chain complexes round-trip") {
    const ChainComplex c(-1, {1, 2, 1},
                         {{0, IntMatrix::from_rows({{2, 0}})},
                          {1, IntMatrix::from_rows({{0}, {5}})}});
    const Json j = to_json(c);
    CHECK(j.at("min_degree") == -1);
    CHECK(complex_from_json(j) == c);

    // absent differentials are zero
    const ChainComplex z = complex_from_json(
        Json::parse(R"({"min_degree": 0, "dims": [1, 1]})"));
    CHECK(z.d(1).is_zero());
    CHECK_THROWS_AS(
        complex_from_json(Json::parse(
            R"({"min_degree": 0, "dims": [1, 1], "differentials": {"x": [["1"]]}})")),
        std::invalid_argument);
}

TEST_CASE("structures and poincare bundles round-trip") {
    const PoincareComplex e8 = e8_quadratic();
    const Json j = to_json(e8);
    const PoincareComplex back = poincare_from_json(j);
    CHECK(back.complex() == e8.complex());
    CHECK(back.dimension() == 0);
    CHECK(back.structure() == e8.structure());
    CHECK(l_class(back).value == 1);

    const PoincareComplex circle = circle_symmetric();
    const PoincareComplex cback = poincare_from_json(to_json(circle));
    CHECK(cback.structure() == circle.structure());
    CHECK(verify_poincare(cback));

    CHECK_THROWS_AS(
        structure_from_json(Json::parse(R"({"flavor": "odd", "degree": 0, "components": {}})")),
        std::invalid_argument);
}

TEST_CASE("simplicial and graded data round-trip") {
    const SimplicialComplex s2 = boundary_of_simplex(3);
    CHECK(simplicial_from_json(to_json(s2)) == s2);

    const ZXModule top(s2, {{{0, 1, 2}, 1}});
    const ZXModule bottom(s2, {{{0, 1, 2}, 1}, {{0}, 2}});
    const ZXMorphism d(top, bottom,
                       {{{{0, 1, 2}, {0, 1, 2}}, IntMatrix::from_rows({{5}})}});
    const ZXChainComplex c(s2, 4, {{2, top}, {1, bottom}}, {{2, d}});
    const ZXChainComplex back = zx_from_json(to_json(c));
    CHECK(back.space() == c.space());
    CHECK(back.ambient_dimension() == 4);
    CHECK(back.modules() == c.modules());
    CHECK(back.differentials() == c.differentials());

    const Json groups = to_json(AbelianGroup{1, {Int(2)}});
    CHECK(groups.at("free_rank") == 1);
    CHECK(groups.at("torsion")[0] == "2");

    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), std::invalid_argument);
}
