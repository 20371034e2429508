#pragma once
// JSON (de)serialization for the core value types. Integers are carried as
// decimal strings so unbounded values survive the trip; matrices are arrays
// of arrays of such strings.
#include "lchain/poincare.hpp"
#include "lchain/zxmod.hpp"

#include <json.hpp>

namespace lchain {

using Json = nlohmann::json;

Json to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntVec& v);
IntVec vector_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// { "min_degree": int, "dims": [int...], "differentials": { "r": matrix } }
Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

// { "source": complex, "target": complex, "components": { "r": matrix } }
Json to_json(const ChainMap& f);
ChainMap map_from_json(const Json& j);

// { "flavor": "quadratic"|"symmetric", "degree": n, "components": { "s": vector } }
Json to_json(const StructureCycle& z);
StructureCycle structure_from_json(const Json& j);

// { "complex": ..., "dimension": n, "structure": ... }
Json to_json(const PoincareComplex& p);
PoincareComplex poincare_from_json(const Json& j);

Json to_json(const AbelianGroup& g);

// { "vertices": n, "simplices": [[v...]...] }
Json to_json(const SimplicialComplex& x);
SimplicialComplex simplicial_from_json(const Json& j);

// simplices are keyed by their space-separated vertex list, e.g. "0 1 2"
std::string simplex_key(const Simplex& s);
Simplex simplex_from_key(const std::string& key);

// { "space": ..., "ambient": n, "modules": { "r": { "v v ...": rank } },
//   "differentials": { "r": { "tau|sigma": matrix } } }
Json to_json(const ZXChainComplex& c);
ZXChainComplex zx_from_json(const Json& j);

Json load_json_file(const std::string& path); // throws invalid_argument with path

// The shipped example inputs, keyed by file stem. Each document carries a
// "description" field; the deserializers ignore it.
std::map<std::string, Json> fixture_library();

} // namespace lchain
