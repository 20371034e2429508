// Command-line front end. Inputs are JSON files; bare names such as `e8`
// resolve into the fixture directory (LCHAIN_FIXTURES, default ./fixtures).
// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
#include "lchain/acceptance.hpp"
#include "lchain/json_io.hpp"
#include "lchain/poincare.hpp"
#include "lchain/spheres.hpp"
#include "lchain/zxmod.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace lchain;

struct CliError {
    int code;
    std::string message;
};

std::string resolve_input(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    if (arg.find('/') == std::string::npos &&
        arg.find(".json") == std::string::npos) {
        const char* env = std::getenv("LCHAIN_FIXTURES");
        const std::string candidate =
            std::string(env ? env : "fixtures") + "/" + arg + ".json";
        if (fs::exists(candidate)) return candidate;
    }
    return arg;
}

// Everything up to and including object construction counts as input
// handling: failures there are the caller's fault, not a failed theorem.
template <typename Fn>
auto parsing(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

Json load_input(const std::string& arg) {
    return parsing([&] { return load_json_file(resolve_input(arg)); });
}

std::vector<Int> parse_ints(const std::string& csv, std::size_t count,
                            const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw CliError{2, what + ": empty entry in '" + csv + "'"};
        const auto last = token.find_last_not_of(" \t");
        try {
            out.emplace_back(token.substr(first, last - first + 1));
        } catch (const std::exception&) {
            throw CliError{2, what + ": '" + token + "' is not an integer"};
        }
    }
    if (out.size() != count)
        throw CliError{2, what + ": expected " + std::to_string(count) +
                              " comma-separated integers, got '" + csv + "'"};
    return out;
}

bool json_mode = false;

void emit(const Json& doc, const std::string& text) {
    if (json_mode)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

void write_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw CliError{2, "cannot write " + path};
    out << doc.dump(2) << "\n";
}

Json group_json(const AbelianGroup& g) {
    Json j = to_json(g);
    j["name"] = g.to_string();
    return j;
}

// ---- subcommand bodies ------------------------------------------------------

int run_lgroups(int max) {
    if (max < 0) throw CliError{2, "--max must be nonnegative"};
    Json quad = Json::array(), sym = Json::array();
    std::ostringstream text;
    text << " n  L_n(Z)  L^n(Z)\n";
    for (int n = 0; n <= max; ++n) {
        const std::string q = l_group_name(Flavor::quadratic, n);
        const std::string s = l_group_name(Flavor::symmetric, n);
        quad.push_back(q);
        sym.push_back(s);
        text << std::setw(2) << n << "  " << std::left << std::setw(6) << q
             << "  " << s << "\n"
             << std::right;
    }
    emit({{"max", max}, {"quadratic", quad}, {"symmetric", sym}}, text.str());
    return 0;
}

int run_homology(const std::string& file, int degree, bool has_degree) {
    const ChainComplex c =
        parsing([&] { return complex_from_json(load_input(file)); });
    std::ostringstream text;
    Json groups = Json::object();
    const int lo = has_degree ? degree : c.min_degree();
    const int hi = has_degree ? degree : c.max_degree();
    for (int r = lo; r <= hi; ++r) {
        const AbelianGroup g = homology(c, r).group;
        groups[std::to_string(r)] = group_json(g);
        text << "H_" << r << " = " << g.to_string() << "\n";
    }
    emit({{"min_degree", lo}, {"max_degree", hi}, {"homology", groups}},
         text.str());
    return 0;
}

int run_qgroup(const std::string& file, int n, const std::string& flavor,
               int smax) {
    const ChainComplex c =
        parsing([&] { return complex_from_json(load_input(file)); });
    const Flavor f =
        flavor == "symmetric" ? Flavor::symmetric : Flavor::quadratic;
    const AbelianGroup g =
        smax < 0 ? q_group(c, n, f) : q_group(c, n, f, smax);
    const std::string name =
        (f == Flavor::quadratic ? "Q_" : "Q^") + std::to_string(n);
    emit({{"flavor", flavor_name(f)},
          {"n", n},
          {"group", group_json(g)}},
         name + " = " + g.to_string() + "\n");
    return 0;
}

int run_lclass(const std::string& file) {
    const PoincareComplex p =
        parsing([&] { return poincare_from_json(load_input(file)); });
    const LClass c = l_class(p); // throws -> exit 1 with the reason
    std::ostringstream text;
    text << "flavor = " << flavor_name(c.flavor) << "\n"
         << "dimension = " << p.dimension() << "\n"
         << "group = " << c.group << "\n"
         << "class = " << c.to_string() << "\n";
    emit({{"flavor", flavor_name(c.flavor)},
          {"dimension", p.dimension()},
          {"group", c.group},
          {"value", c.value.str()}},
         text.str());
    return 0;
}

int run_product(const std::string& afile, const std::string& bfile,
                const std::string& out) {
    const PoincareComplex a =
        parsing([&] { return poincare_from_json(load_input(afile)); });
    const PoincareComplex b =
        parsing([&] { return poincare_from_json(load_input(bfile)); });
    const PoincareComplex p = product(a, b);
    if (!out.empty()) write_file(out, to_json(p));
    std::ostringstream text;
    text << "flavor = " << flavor_name(p.flavor()) << "\n"
         << "dimension = " << p.dimension() << "\n"
         << "verified = true\n";
    if (!out.empty()) text << "written to " << out << "\n";
    emit(to_json(p), text.str());
    return 0;
}

int run_cone(const std::string& file, const std::string& out) {
    const ChainMap f = parsing([&] { return map_from_json(load_input(file)); });
    const ChainComplex c = mapping_cone(f);
    const bool qiso = is_quasi_isomorphism(f);
    if (!out.empty()) write_file(out, to_json(c));
    std::ostringstream text;
    Json groups = Json::object();
    if (!c.empty())
        for (int r = c.min_degree(); r <= c.max_degree(); ++r) {
            const AbelianGroup g = homology(c, r).group;
            groups[std::to_string(r)] = group_json(g);
            text << "H_" << r << "(cone) = " << g.to_string() << "\n";
        }
    text << "quasi-isomorphism = " << (qiso ? "true" : "false") << "\n";
    if (!out.empty()) text << "written to " << out << "\n";
    emit({{"cone", to_json(c)},
          {"homology", groups},
          {"quasi_isomorphism", qiso}},
         text.str());
    return 0;
}

int run_dual(const std::string& file, int n, const std::string& out) {
    const ChainComplex c =
        parsing([&] { return complex_from_json(load_input(file)); });
    const ChainComplex d = dual(c, n);
    if (!out.empty()) write_file(out, to_json(d));
    std::ostringstream text;
    Json groups = Json::object();
    if (!d.empty())
        for (int r = d.min_degree(); r <= d.max_degree(); ++r) {
            const AbelianGroup g = homology(d, r).group;
            groups[std::to_string(r)] = group_json(g);
            text << "H_" << r << " = " << g.to_string() << "\n";
        }
    if (!out.empty()) text << "written to " << out << "\n";
    emit({{"dual", to_json(d)}, {"homology", groups}}, text.str());
    return 0;
}

int run_splitting_check(std::uint64_t seed, int trials) {
    if (trials < 0) throw CliError{2, "--trials must be nonnegative"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const SplitSystem sys = random_split_system(rng);
        const SplittingReport report = splitting_check(sys.f, sys.g);
        if (!report.ok()) {
            std::ostringstream text;
            text << "trial " << t << " fails (seed " << seed << ")\n"
                 << "f splits = " << report.f_split << ", g splits = "
                 << report.g_split
                 << ", homology splits = " << report.homology_splits << "\n";
            for (const auto& [r, g] : report.cone_gf)
                text << "H_" << r << "(cone gf) = " << g.to_string() << "\n";
            emit({{"seed", seed},
                  {"trials", trials},
                  {"failed_trial", t}},
                 text.str());
            return 1;
        }
    }
    emit({{"seed", seed}, {"trials", trials}, {"failures", 0}},
         "all " + std::to_string(trials) + " split systems pass (seed " +
             std::to_string(seed) + ")\n");
    return 0;
}

Json telem_json(const TElem& t) {
    return {{"p", t.p()},
            {"q", t.q()},
            {"x", t.x().value().str()},
            {"y", t.y().value().str()},
            {"z", t.z().value().str()}};
}

int run_spheres_binary(const std::string& verb, int p, int q,
                       const std::string& a_csv, const std::string& b_csv) {
    const auto av = parse_ints(a_csv, 3, "--a");
    const auto bv = parse_ints(b_csv, 3, "--b");
    const TElem a = parsing([&] { return TElem(p, q, av[0], av[1], av[2]); });
    const TElem b = parsing([&] { return TElem(p, q, bv[0], bv[1], bv[2]); });
    const TElem r = verb == "add"       ? add(a, b)
                    : verb == "whitney" ? whitney(a, b)
                                        : pairing(a, b);
    emit(telem_json(r), r.to_string() + "\n");
    return 0;
}

int run_spheres_compose(int p, int q, const std::string& f_csv,
                        const std::string& g_csv, bool reconcile) {
    const auto fv = parse_ints(f_csv, 2, "--f");
    const auto gv = parse_ints(g_csv, 2, "--g");
    const SElem f = parsing([&] { return SElem(p, q, fv[0], fv[1]); });
    const SElem g = parsing([&] { return SElem(p, q, gv[0], gv[1]); });
    if (!reconcile) {
        const SElem c = compose_structures(f, g);
        const TElem t = inverse_pullback_invariant(f, g);
        emit({{"composite", {{"x", c.x().value().str()},
                             {"y", c.y().value().str()}}},
              {"normal_invariant", telem_json(t)}},
             "composite structure = " + c.to_string() + "\n" +
                 "normal invariant of the inverse pullback = " + t.to_string() +
                 "\n");
        return 0;
    }
    const ReconcileReport report = reconcile_check(f, g);
    emit({{"lhs", telem_json(report.lhs)},
          {"rhs", telem_json(report.rhs)},
          {"agree", report.ok}},
         "lhs = " + report.lhs.to_string() + "\nrhs = " +
             report.rhs.to_string() + "\nagree = " +
             (report.ok ? "true" : "false") + "\n");
    return report.ok ? 0 : 1;
}

int run_spheres_demo(int p, int q, const std::string& xs,
                     const std::string& ys) {
    if (p != 4 || q != 4)
        throw CliError{2, "demo-nonadditivity is stated for --p 4 --q 4"};
    const Int x = parse_ints(xs, 1, "--x")[0];
    const Int y = parse_ints(ys, 1, "--y")[0];
    const auto [lhs, rhs] = nonadditivity_demo(x, y);
    const ObstructionDecomposition d = composite_obstruction_demo(x, y);
    std::ostringstream text;
    text << "lhs = " << lhs.value() << "\n"
         << "rhs = " << rhs.value() << "\n"
         << "decomposition = " << d.first.value() << " + " << d.second.value()
         << " + (" << d.cross.value() << ") = " << d.total.value() << "\n";
    emit({{"lhs", lhs.value().str()},
          {"rhs", rhs.value().str()},
          {"decomposition",
           {{"first", d.first.value().str()},
            {"second", d.second.value().str()},
            {"cross", d.cross.value().str()},
            {"total", d.total.value().str()}}}},
         text.str());
    return 0;
}

// Lenient support audit: walks the raw JSON so that files the strict loader
// rejects still get a located diagnosis.
int run_zx_support(const std::string& file) {
    const Json j = load_input(file);
    const SimplicialComplex x = parsing([&] {
        return simplicial_from_json(j.at("space"));
    });
    std::ostringstream text;
    Json violations = Json::array();
    const Json diffs = j.contains("differentials") ? j.at("differentials")
                                                   : Json::object();
    for (const auto& [r, blocks] : diffs.items())
        for (const auto& [key, mat] : blocks.items()) {
            (void)mat;
            const auto bar = key.find('|');
            if (bar == std::string::npos)
                throw CliError{2, "block key '" + key + "' is not 'tau|sigma'"};
            const Simplex tau = parsing([&] {
                return simplex_from_key(key.substr(0, bar));
            });
            const Simplex sigma = parsing([&] {
                return simplex_from_key(key.substr(bar + 1));
            });
            if (!x.contains(tau) || !x.contains(sigma))
                throw CliError{2, "block '" + key +
                                      "' uses simplices outside the space"};
            if (!is_face(sigma, tau)) {
                violations.push_back({{"degree", r}, {"block", key}});
                text << "degree " << r << ", block '" << key
                     << "': target simplex is not a coface of the source\n";
            }
        }
    const bool ok = violations.empty();
    if (ok) text << "support condition holds\n";
    emit({{"ok", ok}, {"violations", violations}}, text.str());
    return ok ? 0 : 1;
}

int run_zx_assemble(const std::string& file, const std::string& out) {
    const ZXChainComplex c =
        parsing([&] { return zx_from_json(load_input(file)); });
    const ChainComplex a = assemble(c); // uncertified spaces -> exit 2
    if (!out.empty()) write_file(out, to_json(a));
    std::ostringstream text;
    Json groups = Json::object();
    if (!a.empty())
        for (int r = a.min_degree(); r <= a.max_degree(); ++r) {
            const AbelianGroup g = homology(a, r).group;
            groups[std::to_string(r)] = group_json(g);
            text << "H_" << r << " = " << g.to_string() << "\n";
        }
    if (!out.empty()) text << "written to " << out << "\n";
    emit({{"assembled", to_json(a)}, {"homology", groups}}, text.str());
    return 0;
}

int run_zx_dual_cells(const std::string& file, int n) {
    const SimplicialComplex x =
        parsing([&] { return simplicial_from_json(load_input(file)); });
    const int dim = n < 0 ? x.dimension() : n;
    const DualCellDecomposition d = dual_cells(x, dim);
    std::map<int, int> counts;
    int euler = 0, flags = 0;
    for (const Simplex& s : x.simplices()) {
        const int k = d.cell_dimension(s);
        ++counts[k];
        euler += (k % 2 == 0) ? 1 : -1;
    }
    for (const auto& [vertex, c] : d.top_simplex_census()) flags += c;
    std::ostringstream text;
    Json by_dim = Json::object();
    for (const auto& [k, c] : counts) {
        by_dim[std::to_string(k)] = c;
        text << "cells of dimension " << k << ": " << c << "\n";
    }
    text << "euler characteristic = " << euler << "\n"
         << "top simplices of the subdivision = " << flags << "\n";
    emit({{"ambient_dimension", dim},
          {"cells_by_dimension", by_dim},
          {"euler_characteristic", euler},
          {"subdivision_top_simplices", flags}},
         text.str());
    return 0;
}

int run_zx_cycle_check(const std::string& file) {
    const ZXChainComplex c =
        parsing([&] { return zx_from_json(load_input(file)); });
    const CycleConditionReport report = check_cycle_conditions(c);
    std::ostringstream text;
    text << "degree bounds = " << (report.degree_bounds_ok ? "ok" : "violated")
         << "\n"
         << "top local complexes contractible = "
         << (report.top_locals_contractible ? "ok" : "violated") << "\n"
         << "assembled complex acyclic = "
         << (report.assembled_acyclic ? "ok" : "violated") << "\n";
    emit({{"degree_bounds_ok", report.degree_bounds_ok},
          {"top_locals_contractible", report.top_locals_contractible},
          {"assembled_acyclic", report.assembled_acyclic},
          {"ok", report.ok()}},
         text.str());
    return report.ok() ? 0 : 1;
}

int guarded(const std::function<int()>& run) {
    try {
        return run();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chain-level surgery arithmetic"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::function<int()> action;

    // lgroups
    auto* lgroups = app.add_subcommand("lgroups", "L-group tables over Z");
    int lg_max = 11;
    lgroups->add_option("--max", lg_max, "largest n to print");
    lgroups->callback([&] { action = [&] { return run_lgroups(lg_max); }; });

    // homology
    auto* hom = app.add_subcommand("homology", "homology of a chain complex");
    std::string hom_file;
    int hom_degree = 0;
    hom->add_option("file", hom_file, "chain complex JSON")->required();
    auto* hom_deg_opt =
        hom->add_option("--degree", hom_degree, "restrict to one degree");
    hom->callback([&, hom_deg_opt] {
        action = [&, hom_deg_opt] {
            return run_homology(hom_file, hom_degree, hom_deg_opt->count() > 0);
        };
    });

    // qgroup
    auto* qg = app.add_subcommand("qgroup", "Q-group of a chain complex");
    std::string qg_file, qg_flavor = "quadratic";
    int qg_n = 0, qg_smax = -1;
    qg->add_option("file", qg_file, "chain complex JSON")->required();
    qg->add_option("--n", qg_n, "degree")->required();
    qg->add_option("--flavor", qg_flavor)
        ->check(CLI::IsMember({"quadratic", "symmetric"}));
    qg->add_option("--smax", qg_smax, "resolution truncation override");
    qg->callback([&] {
        action = [&] { return run_qgroup(qg_file, qg_n, qg_flavor, qg_smax); };
    });

    // lclass
    auto* lc = app.add_subcommand("lclass", "L-class of a Poincare complex");
    std::string lc_file;
    lc->add_option("file", lc_file, "Poincare complex JSON")->required();
    lc->callback([&] { action = [&] { return run_lclass(lc_file); }; });

    // product
    auto* prod = app.add_subcommand("product", "product of Poincare complexes");
    std::string prod_a, prod_b, prod_out;
    prod->add_option("a", prod_a, "left factor JSON")->required();
    prod->add_option("b", prod_b, "right factor JSON")->required();
    prod->add_option("--out", prod_out, "write the product bundle here");
    prod->callback([&] {
        action = [&] { return run_product(prod_a, prod_b, prod_out); };
    });

    // cone
    auto* cone = app.add_subcommand("cone", "mapping cone of a chain map");
    std::string cone_file, cone_out;
    cone->add_option("file", cone_file, "chain map JSON")->required();
    cone->add_option("--out", cone_out, "write the cone complex here");
    cone->callback(
        [&] { action = [&] { return run_cone(cone_file, cone_out); }; });

    // dual
    auto* du = app.add_subcommand("dual", "n-dual of a chain complex");
    std::string du_file, du_out;
    int du_n = 0;
    du->add_option("file", du_file, "chain complex JSON")->required();
    du->add_option("--n", du_n, "duality dimension")->required();
    du->add_option("--out", du_out, "write the dual complex here");
    du->callback(
        [&] { action = [&] { return run_dual(du_file, du_n, du_out); }; });

    // splitting-check
    auto* sp = app.add_subcommand(
        "splitting-check", "cone homology splitting on random split systems");
    std::uint64_t sp_seed = 0;
    int sp_trials = 100;
    sp->add_option("--seed", sp_seed, "random seed");
    sp->add_option("--trials", sp_trials, "number of systems");
    sp->callback([&] {
        action = [&] { return run_splitting_check(sp_seed, sp_trials); };
    });

    // spheres
    auto* sph = app.add_subcommand(
        "spheres", "structure arithmetic on a product of spheres");
    sph->require_subcommand(1);
    int sph_p = 4, sph_q = 4;
    sph->add_option("--p", sph_p, "first sphere dimension");
    sph->add_option("--q", sph_q, "second sphere dimension");
    std::string sph_a, sph_b, sph_f, sph_g, sph_x, sph_y;
    for (const char* verb : {"add", "whitney", "pairing"}) {
        auto* v = sph->add_subcommand(
            verb, std::string(verb) + " two normal invariants");
        v->add_option("--a", sph_a, "first element x,y,z")->required();
        v->add_option("--b", sph_b, "second element x,y,z")->required();
        v->callback([&, verb] {
            action = [&, verb] {
                return run_spheres_binary(verb, sph_p, sph_q, sph_a, sph_b);
            };
        });
    }
    auto* comp = sph->add_subcommand("compose", "compose two structures");
    comp->add_option("--f", sph_f, "structure x,y")->required();
    comp->add_option("--g", sph_g, "pushed-forward structure x,y")->required();
    comp->callback([&] {
        action = [&] {
            return run_spheres_compose(sph_p, sph_q, sph_f, sph_g, false);
        };
    });
    auto* rec = sph->add_subcommand(
        "reconcile", "compare the composite and Whitney routes");
    rec->add_option("--f", sph_f, "structure x,y")->required();
    rec->add_option("--g", sph_g, "pushed-forward structure x,y")->required();
    rec->callback([&] {
        action = [&] {
            return run_spheres_compose(sph_p, sph_q, sph_f, sph_g, true);
        };
    });
    auto* demo = sph->add_subcommand(
        "demo-nonadditivity",
        "assembled Whitney sum versus the sum of assembled classes");
    demo->add_option("--x", sph_x, "first coefficient")->required();
    demo->add_option("--y", sph_y, "second coefficient")->required();
    demo->callback([&] {
        action = [&] { return run_spheres_demo(sph_p, sph_q, sph_x, sph_y); };
    });

    // zx
    auto* zx = app.add_subcommand("zx", "graded modules over a complex");
    zx->require_subcommand(1);
    std::string zx_file, zx_out;
    int zx_n = -1;
    auto* zsup = zx->add_subcommand("support", "audit the support condition");
    zsup->add_option("file", zx_file, "graded complex JSON")->required();
    zsup->callback(
        [&] { action = [&] { return run_zx_support(zx_file); }; });
    auto* zasm = zx->add_subcommand("assemble", "forget the grading");
    zasm->add_option("file", zx_file, "graded complex JSON")->required();
    zasm->add_option("--out", zx_out, "write the assembled complex here");
    zasm->callback(
        [&] { action = [&] { return run_zx_assemble(zx_file, zx_out); }; });
    auto* zdc = zx->add_subcommand("dual-cells", "dual cell decomposition");
    zdc->add_option("file", zx_file, "simplicial complex JSON")->required();
    zdc->add_option("--n", zx_n, "ambient dimension (default: dimension)");
    zdc->callback(
        [&] { action = [&] { return run_zx_dual_cells(zx_file, zx_n); }; });
    auto* zcc = zx->add_subcommand("cycle-check", "algebraic cycle conditions");
    zcc->add_option("file", zx_file, "graded complex JSON")->required();
    zcc->callback(
        [&] { action = [&] { return run_zx_cycle_check(zx_file); }; });

    // selftest
    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    st->callback([&] {
        action = [] { return run_acceptance(std::cout) == 0 ? 0 : 1; };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    json_mode = format == "json";
    return guarded(action);
}
