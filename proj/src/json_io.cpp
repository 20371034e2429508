#include "lchain/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lchain {

std::string simplex_key(const Simplex& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    return os.str();
}

Simplex simplex_from_key(const std::string& key) {
    Simplex s;
    std::istringstream is(key);
    int v = 0;
    while (is >> v) s.push_back(v);
    if (s.empty()) throw std::invalid_argument("json: empty simplex key");
    return s;
}

namespace {
int int_key(const std::string& key) {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("json: bad integer key '" + key + "'");
    return v;
}

} // namespace

Json to_json(const Int& v) { return v.str(); }

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (!j.is_string())
        throw std::invalid_argument("json: integer entries must be decimal strings");
    try {
        return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw std::invalid_argument("json: malformed integer '" + j.get<std::string>() + "'");
    }
}

Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

IntVec vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: vector must be an array");
    IntVec out;
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    for (const auto& row : j) {
        if (!row.is_array())
            throw std::invalid_argument("json: matrix rows must be arrays");
        if (cols < 0)
            cols = static_cast<int>(row.size());
        else if (cols != static_cast<int>(row.size()))
            throw std::invalid_argument("json: ragged matrix");
    }
    IntMatrix m(rows, cols < 0 ? 0 : cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < m.cols(); ++k) m.at(i, k) = int_from_json(j[i][k]);
    return m;
}

Json to_json(const ChainComplex& c) {
    Json diffs = Json::object();
    for (int r = c.min_degree() + 1; r <= c.max_degree(); ++r)
        if (!c.d(r).is_zero()) diffs[std::to_string(r)] = to_json(c.d(r));
    Json dims = Json::array();
    for (int r = c.min_degree(); r <= c.max_degree(); ++r) dims.push_back(c.dim(r));
    return {{"min_degree", c.min_degree()}, {"dims", dims}, {"differentials", diffs}};
}

ChainComplex complex_from_json(const Json& j) {
    const int min_degree = j.at("min_degree").get<int>();
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) dims.push_back(d.get<int>());
    std::map<int, IntMatrix> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, mat] : j.at("differentials").items())
            diffs[int_key(key)] = matrix_from_json(mat);
    return {min_degree, std::move(dims), std::move(diffs)};
}

Json to_json(const ChainMap& f) {
    Json comps = Json::object();
    for (int r = f.source().min_degree(); r <= f.source().max_degree(); ++r) {
        const IntMatrix m = f.component(r);
        if (!m.is_zero()) comps[std::to_string(r)] = to_json(m);
    }
    return {{"source", to_json(f.source())},
            {"target", to_json(f.target())},
            {"components", comps}};
}

ChainMap map_from_json(const Json& j) {
    ChainComplex source = complex_from_json(j.at("source"));
    ChainComplex target = complex_from_json(j.at("target"));
    std::map<int, IntMatrix> comps;
    if (j.contains("components"))
        for (const auto& [key, mat] : j.at("components").items())
            comps[int_key(key)] = matrix_from_json(mat);
    return {std::move(source), std::move(target), std::move(comps)};
}

Json to_json(const StructureCycle& z) {
    Json comps = Json::object();
    for (const auto& [s, v] : z.components) comps[std::to_string(s)] = to_json(v);
    return {{"flavor", flavor_name(z.flavor)},
            {"degree", z.degree},
            {"components", comps}};
}

StructureCycle structure_from_json(const Json& j) {
    const std::string f = j.at("flavor").get<std::string>();
    if (f != "quadratic" && f != "symmetric")
        throw std::invalid_argument("json: flavor must be quadratic or symmetric");
    StructureCycle z;
    z.flavor = f == "quadratic" ? Flavor::quadratic : Flavor::symmetric;
    z.degree = j.at("degree").get<int>();
    for (const auto& [key, v] : j.at("components").items())
        z.components[int_key(key)] = vector_from_json(v);
    return z;
}

Json to_json(const PoincareComplex& p) {
    return {{"complex", to_json(p.complex())},
            {"dimension", p.dimension()},
            {"structure", to_json(p.structure())}};
}

PoincareComplex poincare_from_json(const Json& j) {
    return {complex_from_json(j.at("complex")), j.at("dimension").get<int>(),
            structure_from_json(j.at("structure"))};
}

Json to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(to_json(t));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"name", g.to_string()}};
}

Json to_json(const SimplicialComplex& x) {
    Json simplices = Json::array();
    for (const auto& s : x.simplices()) simplices.push_back(s);
    return {{"vertices", x.vertex_count()}, {"simplices", simplices}};
}

SimplicialComplex simplicial_from_json(const Json& j) {
    std::vector<Simplex> simplices;
    for (const auto& s : j.at("simplices")) simplices.push_back(s.get<Simplex>());
    return {j.at("vertices").get<int>(), std::move(simplices)};
}

Json to_json(const ZXChainComplex& c) {
    Json modules = Json::object();
    for (const auto& [r, m] : c.modules()) {
        Json ranks = Json::object();
        for (const auto& [s, rank] : m.ranks()) ranks[simplex_key(s)] = rank;
        modules[std::to_string(r)] = std::move(ranks);
    }
    Json diffs = Json::object();
    for (const auto& [r, d] : c.differentials()) {
        Json blocks = Json::object();
        for (const auto& [key, mat] : d.blocks())
            blocks[simplex_key(key.first) + "|" + simplex_key(key.second)] =
                to_json(mat);
        diffs[std::to_string(r)] = std::move(blocks);
    }
    return {{"space", to_json(c.space())},
            {"ambient", c.ambient_dimension()},
            {"modules", modules},
            {"differentials", diffs}};
}

ZXChainComplex zx_from_json(const Json& j) {
    const SimplicialComplex x = simplicial_from_json(j.at("space"));
    std::map<int, ZXModule> modules;
    for (const auto& [key, ranks] : j.at("modules").items()) {
        std::map<Simplex, int> r;
        for (const auto& [skey, rank] : ranks.items())
            r[simplex_from_key(skey)] = rank.get<int>();
        modules.emplace(int_key(key), ZXModule(x, std::move(r)));
    }
    std::map<int, ZXMorphism> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, blocks] : j.at("differentials").items()) {
            const int r = int_key(key);
            std::map<std::pair<Simplex, Simplex>, IntMatrix> b;
            for (const auto& [pkey, mat] : blocks.items()) {
                const auto bar = pkey.find('|');
                if (bar == std::string::npos)
                    throw std::invalid_argument("json: block key must be 'tau|sigma'");
                b[{simplex_from_key(pkey.substr(0, bar)),
                   simplex_from_key(pkey.substr(bar + 1))}] = matrix_from_json(mat);
            }
            const auto source = modules.find(r);
            const auto target = modules.find(r - 1);
            diffs.emplace(r, ZXMorphism(source == modules.end() ? ZXModule(x, {})
                                                                : source->second,
                                        target == modules.end() ? ZXModule(x, {})
                                                                : target->second,
                                        std::move(b)));
        }
    return {x, j.at("ambient").get<int>(), std::move(modules), std::move(diffs)};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

namespace {

Json described(Json j, const std::string& note) {
    j["description"] = note;
    return j;
}

} // namespace

std::map<std::string, Json> fixture_library() {
    std::map<std::string, Json> lib;

    lib["e8"] = described(to_json(e8_quadratic()),
                          "E8 Gram matrix as a rank-8 even unimodular quadratic form "
                          "of signature 8; its class generates L_0(Z)");
    lib["hyperbolic"] = described(to_json(hyperbolic_quadratic()),
                                  "standard rank-2 hyperbolic quadratic form; trivial "
                                  "class in L_0(Z)");
    lib["arf"] = described(to_json(arf_quadratic()),
                           "rank-2 symplectic quadratic form with q(e) = q(f) = 1; "
                           "Arf invariant 1 generates L_2(Z)");
    lib["hyperbolic_arf"] = described(to_json(hyperbolic_arf_quadratic()),
                                      "rank-2 symplectic quadratic form with "
                                      "q(e) = q(f) = 0; Arf invariant 0");
    lib["point"] = described(to_json(point_symmetric()),
                             "unit symmetric form (1) on Z concentrated in degree 0");
    lib["det2"] = described(to_json(det2_symmetric()),
                            "symmetric form (2): a structure cycle whose duality map "
                            "fails to be a quasi-isomorphism");
    lib["circle"] = described(to_json(circle_symmetric()),
                              "circle as a 1-dimensional symmetric Poincare complex");
    lib["circle_quadratic"] = described(to_json(circle_quadratic()),
                                        "circle with a quadratic refinement; the class "
                                        "lands in the trivial group L_1(Z)");

    lib["cone2"] = described(
        to_json(ChainComplex(0, {1, 1}, {{1, IntMatrix::from_rows({{2}})}})),
        "Z --2--> Z in degrees 1, 0; H_0 = Z/2 and H_1 = 0");

    lib["boundary_delta3"] = described(to_json(boundary_of_simplex(3)),
                                       "boundary of the 3-simplex: a simplicial 2-sphere");
    lib["boundary_delta4"] = described(to_json(boundary_of_simplex(4)),
                                       "boundary of the 4-simplex: a simplicial 3-sphere");

    {
        const SimplicialComplex s2 = boundary_of_simplex(3);
        const ZXModule one(s2, {{{0}, 1}});
        const ZXChainComplex cone(
            s2, 2, {{1, one}, {0, one}},
            {{1, ZXMorphism(one, one, {{{{0}, {0}}, IntMatrix::identity(1)}})}});
        lib["zx_cone"] = described(to_json(cone),
                                   "mapping cone of the identity supported at a single "
                                   "vertex of the simplicial 2-sphere");
    }

    return lib;
}

} // namespace lchain
