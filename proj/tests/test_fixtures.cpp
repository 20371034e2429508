#include "lchain/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>

using namespace lchain;

#ifndef LCHAIN_SOURCE_DIR
#define LCHAIN_SOURCE_DIR "."
#endif

namespace {

std::string fixture_dir() {
    if (const char* env = std::getenv("LCHAIN_FIXTURES")) return env;
    return std::string(LCHAIN_SOURCE_DIR) + "/fixtures";
}

} // namespace

TEST_CASE("shipped fixture files match the generator") {
    const std::string dir = fixture_dir();
    for (const auto& [name, doc] : fixture_library()) {
        INFO("fixture ", name);
        CHECK(load_json_file(dir + "/" + name + ".json") == doc);
    }
}

TEST_CASE("fixture files load into working objects") {
    const std::string dir = fixture_dir();

    const PoincareComplex e8 = poincare_from_json(load_json_file(dir + "/e8.json"));
    CHECK(l_class(e8).value == 1);

    const PoincareComplex det2 =
        poincare_from_json(load_json_file(dir + "/det2.json"));
    CHECK_FALSE(verify_poincare(det2));

    const ChainComplex cone2 =
        complex_from_json(load_json_file(dir + "/cone2.json"));
    CHECK(homology(cone2, 0).group == AbelianGroup{0, {Int(2)}});
    CHECK(homology(cone2, 1).group == AbelianGroup{});

    const ZXChainComplex zx = zx_from_json(load_json_file(dir + "/zx_cone.json"));
    CHECK(check_cycle_conditions(zx).ok());
    CHECK(is_acyclic(assemble(zx)));
}
