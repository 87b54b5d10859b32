// affdev command-line tool: validate developments, recognize (non-)affine
// equivalence, run the suspension certificate, fit the embedded-polyhedron
// oracle, and generate test geometry.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "affdev/affdev.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // NotAffineEquivalent, for scripting
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) affdev::raise(affdev::Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) affdev::raise(affdev::Errc::ParseError, "cannot write '" + path + "'");
    out << text;
}

affdev::Development load_development(const std::string& path, bool validate = true)
{
    affdev::Development dev = affdev::Development::parse(read_file(path));
    if (validate) {
        const auto issues = dev.validate();
        if (!issues.empty()) {
            std::string what = "'" + path + "' fails validation:";
            for (const auto& i : issues)
                what += std::string("\n  [") + to_string(i.kind) + "] " + i.detail;
            affdev::raise(affdev::Errc::ParseError, what);
        }
    }
    return dev;
}

affdev::CombinatorialMap load_map(const affdev::Development& a, const affdev::Development& b,
                                  const std::string& map_path)
{
    if (map_path.empty()) return affdev::identity_correspondence(a, b);
    nlohmann::json j = nlohmann::json::parse(read_file(map_path));
    std::map<std::string, std::string> by_id;
    for (const auto& [k, v] : j.at("vertexMap").items()) by_id[k] = v.get<std::string>();
    return affdev::build_correspondence(a, b, by_id);
}

std::vector<int> load_poly_map(const affdev::EmbeddedPolyhedron& a,
                               const affdev::EmbeddedPolyhedron& b, const std::string& map_path)
{
    if (map_path.empty()) return affdev::identity_vertex_map(a, b);
    nlohmann::json j = nlohmann::json::parse(read_file(map_path));
    std::vector<int> m(static_cast<std::size_t>(a.vertex_count()), -1);
    for (const auto& [k, v] : j.at("vertexMap").items())
        m[std::size_t(a.vertex_index(k))] = b.vertex_index(v.get<std::string>());
    for (int x : m)
        if (x < 0) affdev::raise(affdev::Errc::ParseError, "vertex map does not cover every vertex");
    return m;
}

struct SolverFlags {
    int max_depth = affdev::SolverConfig{}.max_depth;
    double tol = affdev::SolverConfig{}.eps_res;
    long node_budget = affdev::SolverConfig{}.node_budget;
    int jobs = 1;
    bool symmetric = false;
    bool json = false;
    bool no_timings = false;

    affdev::SolverConfig solver() const
    {
        affdev::SolverConfig cfg;
        cfg.max_depth = max_depth;
        cfg.eps_res = tol;
        cfg.node_budget = node_budget;
        return cfg;
    }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f)
{
    cmd->add_option("--max-depth", f.max_depth, "per-variable bisection cap");
    cmd->add_option("--tol", f.tol, "residual tolerance");
    cmd->add_option("--node-budget", f.node_budget, "solver node budget per patch");
    cmd->add_option("--jobs", f.jobs, "worker threads for patch solves");
    cmd->add_flag("--symmetric", f.symmetric,
                  "also intersect reciprocal ratio sets of the second development");
    cmd->add_flag("--json", f.json, "emit the evidence document as JSON");
    cmd->add_flag("--no-timings", f.no_timings, "zero out timing fields (stable output)");
}

int run_validate(const std::string& path)
{
    affdev::Development dev = affdev::Development::parse(read_file(path));
    const auto issues = dev.validate();
    if (issues.empty()) {
        std::cout << "valid: " << dev.face_count() << " faces, " << dev.gluings().size()
                  << " gluings, " << dev.vertex_count() << " vertices, "
                  << (dev.closed() ? "closed" : "with boundary") << "\n";
    } else {
        for (const auto& i : issues)
            std::cout << "[" << to_string(i.kind) << "] " << i.detail << "\n";
    }
    return kExitOk;  // reporting problems is a success
}

int run_recognize(const std::string& a_path, const std::string& b_path,
                  const std::string& map_path, const SolverFlags& f)
{
    const affdev::Development a = load_development(a_path);
    const affdev::Development b = load_development(b_path);
    const affdev::CombinatorialMap map = load_map(a, b, map_path);
    affdev::RecognizeConfig cfg;
    cfg.solver = f.solver();
    cfg.symmetric = f.symmetric;
    cfg.jobs = f.jobs;
    const affdev::Verdict v = affdev::recognize(a, b, map, cfg);
    if (f.json)
        std::cout << affdev::report_json(v, !f.no_timings).dump(2) << "\n";
    else
        std::cout << affdev::report_text(v);
    return v.kind == affdev::VerdictKind::NotAffineEquivalent ? kExitNegative : kExitOk;
}

int run_suspension(const std::string& a_path, const std::string& b_path,
                   const std::string& map_path, const SolverFlags& f, bool all_pairings)
{
    const affdev::Development a = load_development(a_path);
    const affdev::Development b = load_development(b_path);
    const affdev::CombinatorialMap map = load_map(a, b, map_path);
    const affdev::SolverConfig cfg = f.solver();

    std::vector<affdev::SuspensionStructure> structures;
    if (all_pairings) {
        structures = affdev::detect_all_suspensions(a);
        if (structures.empty())
            affdev::raise(affdev::Errc::NotASuspension, "'" + a_path + "' is not a suspension");
    } else {
        auto s = affdev::detect_suspension(a);
        if (!s) affdev::raise(affdev::Errc::NotASuspension, "'" + a_path + "' is not a suspension");
        structures.push_back(*s);
    }

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool negative = false;
    for (const auto& s : structures) {
        const affdev::SuspensionCertificate cert =
            affdev::suspension_certificate(a, b, map, cfg, &s);
        negative = negative || cert.verdict == affdev::VerdictKind::NotAffineEquivalent;
        nlohmann::ordered_json e;
        e["southPole"] = a.vertex(s.south).id;
        e["northPole"] = a.vertex(s.north).id;
        e["equatorSize"] = s.n();
        e["verdict"] = to_string(cert.verdict);
        e["solver"] = to_string(cert.solve.status);
        if (!f.no_timings) e["nodes"] = cert.solve.nodes;
        out.push_back(std::move(e));
        if (!f.json)
            std::cout << "poles (" << a.vertex(s.south).id << ", " << a.vertex(s.north).id
                      << "): " << to_string(cert.verdict) << " [solver "
                      << to_string(cert.solve.status) << "]\n";
    }
    if (f.json) std::cout << out.dump(2) << "\n";
    return negative ? kExitNegative : kExitOk;
}

int run_oracle(const std::string& a_path, const std::string& b_path, const std::string& map_path)
{
    const affdev::EmbeddedPolyhedron a = affdev::EmbeddedPolyhedron::parse(read_file(a_path));
    const affdev::EmbeddedPolyhedron b = affdev::EmbeddedPolyhedron::parse(read_file(b_path));
    const std::vector<int> map = load_poly_map(a, b, map_path);
    const auto fit = affdev::oracle_affine_equivalent(a, b, map);
    if (!fit) {
        std::cout << "no affine map fits the correspondence\n";
        return kExitNegative;
    }
    const auto& m = fit->linear.m;
    std::printf("affine map found, det = %.17g\n", fit->det());
    std::printf("  [ %.17g %.17g %.17g ]   [ %.17g ]\n", m[0], m[1], m[2], fit->translation.x);
    std::printf("  [ %.17g %.17g %.17g ] + [ %.17g ]\n", m[3], m[4], m[5], fit->translation.y);
    std::printf("  [ %.17g %.17g %.17g ]   [ %.17g ]\n", m[6], m[7], m[8], fit->translation.z);
    return kExitOk;
}

struct GenerateFlags {
    std::string kind;
    int n = 3;
    double radius = 1.0, side = 1.0, height = 1.0;
    double south_height = 1.0, north_height = 1.0;
    double perturb_edge = 0.0;
    std::uint64_t seed = 1;
    std::string poly_out, dev_out, poly2_out, dev2_out;
    std::string pair_kind;
};

affdev::EmbeddedPolyhedron build_kind(const std::string& kind, const GenerateFlags& g)
{
    using namespace affdev;
    if (kind == "bipyramid") {
        if (g.perturb_edge > 0.0) {
            if (g.n != 3)
                raise(Errc::InvalidParams, "the perturbed variant is defined for n = 3");
            return make_perturbed_bipyramid3(g.perturb_edge);
        }
        if (g.n == 3 && g.radius == 1.0 && g.south_height == 1.0 && g.north_height == 1.0)
            return make_unit_bipyramid3();  // unit edges unless sized explicitly
        return make_bipyramid(g.n, g.radius, g.south_height, g.north_height);
    }
    if (kind == "prism") return make_prism(g.n, g.side, g.height);
    if (kind == "antiprism") return make_antiprism(g.n, g.radius, g.height);
    if (kind == "trapezohedron") return make_trapezohedron(g.n);
    if (kind == "suspension") return make_random_convex_suspension(g.n, g.seed);
    raise(Errc::InvalidParams, "unknown generator kind '" + kind + "'");
}

int run_generate(const GenerateFlags& g)
{
    using namespace affdev;
    if (g.kind == "affine-pair") {
        if (g.pair_kind.empty())
            raise(Errc::InvalidParams, "affine-pair needs --of <kind>");
        EmbeddedPolyhedron p = build_kind(g.pair_kind, g);
        Rng rng(g.seed);
        const AffineMap3D map = random_affine_map(rng);
        EmbeddedPolyhedron q = apply_affine(p, map);
        if (!g.poly_out.empty()) write_file(g.poly_out, p.serialize());
        if (!g.dev_out.empty()) write_file(g.dev_out, extract_development(p).serialize());
        if (!g.poly2_out.empty()) write_file(g.poly2_out, q.serialize());
        if (!g.dev2_out.empty()) write_file(g.dev2_out, extract_development(q).serialize());
        std::cout << "affine pair of " << g.pair_kind << " written (det = " << map.det() << ")\n";
        return kExitOk;
    }
    EmbeddedPolyhedron p = build_kind(g.kind, g);
    if (!g.poly_out.empty()) write_file(g.poly_out, p.serialize());
    if (!g.dev_out.empty()) write_file(g.dev_out, extract_development(p).serialize());
    std::cout << g.kind << ": " << p.vertex_count() << " vertices, " << p.face_count()
              << " faces\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"recognize affine (non-)equivalence of polyhedra from natural developments"};
    app.require_subcommand(1);

    std::string path_a, path_b, map_path;
    SolverFlags flags;
    bool all_pairings = false;
    GenerateFlags gen;

    auto* validate = app.add_subcommand("validate", "check a development file");
    validate->add_option("file", path_a, "development JSON")->required();

    auto* recognize = app.add_subcommand("recognize", "run the full recognition pipeline");
    recognize->add_option("first", path_a, "development JSON")->required();
    recognize->add_option("second", path_b, "development JSON")->required();
    recognize->add_option("--map", map_path, "vertex bijection JSON (default: match ids)");
    add_solver_flags(recognize, flags);

    auto* susp = app.add_subcommand("suspension", "run the suspension certificate");
    susp->add_option("first", path_a, "development JSON")->required();
    susp->add_option("second", path_b, "development JSON")->required();
    susp->add_option("--map", map_path, "vertex bijection JSON (default: match ids)");
    susp->add_flag("--all-pairings", all_pairings, "try every valid pole pairing");
    add_solver_flags(susp, flags);

    auto* oracle = app.add_subcommand("oracle", "fit an affine map between embedded polyhedra");
    oracle->add_option("first", path_a, "polyhedron JSON")->required();
    oracle->add_option("second", path_b, "polyhedron JSON")->required();
    oracle->add_option("--map", map_path, "vertex bijection JSON (default: match ids)");

    auto* generate = app.add_subcommand("generate", "emit test geometry");
    generate
        ->add_option("kind", gen.kind,
                     "bipyramid | prism | antiprism | trapezohedron | suspension | affine-pair")
        ->required();
    generate->add_option("--of", gen.pair_kind, "base kind for affine-pair");
    generate->add_option("--n", gen.n, "gonality");
    generate->add_option("--radius", gen.radius, "circumradius");
    generate->add_option("--side", gen.side, "side length (prism base)");
    generate->add_option("--height", gen.height, "height");
    generate->add_option("--south-height", gen.south_height, "south pole height");
    generate->add_option("--north-height", gen.north_height, "north pole height");
    generate->add_option("--perturb-edge", gen.perturb_edge,
                         "stretch one pole edge of the unit 3-bipyramid to this length");
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--poly", gen.poly_out, "write the polyhedron here");
    generate->add_option("--dev", gen.dev_out, "write the extracted development here");
    generate->add_option("--poly2", gen.poly2_out, "write the image polyhedron here");
    generate->add_option("--dev2", gen.dev2_out, "write the image development here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(path_a);
        if (*recognize) return run_recognize(path_a, path_b, map_path, flags);
        if (*susp) return run_suspension(path_a, path_b, map_path, flags, all_pairings);
        if (*oracle) return run_oracle(path_a, path_b, map_path);
        if (*generate) return run_generate(gen);
    } catch (const affdev::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case affdev::Errc::Internal: return kExitInternal;
        default: return kExitInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
