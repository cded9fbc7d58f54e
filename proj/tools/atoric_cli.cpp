// atoric: implicit equations of almost-toric hypersurfaces.
//
//   atoric newton <instance> [--format text|json]
//   atoric implicitize <instance> [--format text|json] [--method multimodular|exact]
//   atoric degree <instance> [--method polygon|tropical|ps|all] [--seed N]
//   atoric verify <instance> [--poly file] [--trials N] [--seed N]
//   atoric gen --n N --d D --k K [--seed N] [--out file]
//
// Exit codes: 0 ok, 1 input error, 2 not a hypersurface, 3 internal
// inconsistency, 4 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "atoric/degree.hpp"
#include "atoric/errors.hpp"
#include "atoric/implicitize.hpp"
#include "atoric/instance_io.hpp"

namespace {

using namespace atoric;

enum Exit : int { kOk = 0, kInput = 1, kNotHypersurface = 2, kInconsistent = 3, kVerifyFailed = 4 };

std::string vector_text(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + ")";
}

NewtonPolygon newton_polygon(const ToricInput& inst, const Analysis& a) {
    NewtonPolygon polygon = assemble_polygon(a.edges, a.pluecker);
    polygon.lattice_points = lattice_points(polygon, inst.A);
    return polygon;
}

int cmd_newton(const std::string& path, const std::string& format) {
    const ToricInput inst = read_instance_file(path);
    const Analysis a = analyze(inst);
    if (a.edges.classification == Classification::NotHypersurface) {
        std::cout << "not a hypersurface\n";
        return kNotHypersurface;
    }
    const NewtonPolygon polygon = newton_polygon(inst, a);
    if (format == "json") {
        std::cout << polygon_json(polygon) << "\n";
        return kOk;
    }
    std::cout << "classification: " << to_string(polygon.classification) << "\n";
    std::cout << "vertices:\n";
    for (const auto& v : polygon.vertices) std::cout << "  " << vector_text(v) << "\n";
    std::cout << "edges:\n";
    for (const auto& e : polygon.edges) std::cout << "  " << vector_text(e) << "\n";
    std::cout << "lattice points: " << polygon.lattice_points.size() << "\n";
    return kOk;
}

int cmd_implicitize(const std::string& path, const std::string& format, const std::string& method) {
    const ToricInput inst = read_instance_file(path);
    InterpolationOptions options;
    options.method = method == "exact" ? SolveMethod::exact : SolveMethod::multimodular;

    const auto start = std::chrono::steady_clock::now();
    const ImplicitizationResult result = implicitize(inst, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto& p = result.polynomial;
    if (format == "json") {
        std::cout << polynomial_json(p) << "\n";
        if (result.multiplicity > 1) std::cerr << "multiplicity " << result.multiplicity << ", ";
        std::cerr << "degree " << p.total_degree() << ", " << p.terms.size() << " terms, " << seconds << " s\n";
    } else {
        std::cout << p.to_string() << "\n";
        std::cout << "degree: " << p.total_degree() << "\n";
        std::cout << "terms: " << p.terms.size() << "\n";
        if (result.multiplicity > 1) std::cout << "multiplicity: " << result.multiplicity << "\n";
        std::cout << "time: " << seconds << " s\n";
    }
    if (result.orientation_fallback) std::cerr << "note: polygon orientation was reversed\n";
    return kOk;
}

int cmd_degree(const std::string& path, const std::string& method, std::uint64_t seed) {
    const ToricInput inst = read_instance_file(path);
    const Analysis a = analyze(inst);
    if (a.edges.classification == Classification::NotHypersurface) {
        std::cout << "not a hypersurface\n";
        return kNotHypersurface;
    }
    const bool all = method == "all";
    std::vector<std::string> shown;
    std::vector<Rational> values;

    if (all || method == "polygon") {
        const Integer deg = degree_from_polygon(assemble_polygon(a.edges, a.pluecker));
        shown.push_back(deg.get_str());
        values.emplace_back(deg);
    }
    if (all || method == "tropical") {
        try {
            const TropicalDegree t = degree_tropical(a.pluecker, a.valuation, seed);
            shown.push_back(t.degree.get_str());
            values.emplace_back(t.degree);
        } catch (const GenericityError& e) {
            if (!all) throw;
            shown.push_back("n/a");
        }
    }
    if (all || method == "ps") {
        const PSDegree ps = degree_ps(inst.A, a.pluecker, a.valuation, ps_context(a.pluecker));
        shown.push_back(ps.degree.get_str());
        values.push_back(ps.degree);
    }

    for (std::size_t i = 0; i < shown.size(); ++i) std::cout << (i ? " " : "") << shown[i];
    if (all) {
        bool agree = true;
        for (const auto& v : values) agree = agree && v == values.front();
        std::cout << (agree ? " agree" : " disagree") << "\n";
        return agree ? kOk : kInconsistent;
    }
    std::cout << "\n";
    return shown.front() == "n/a" ? kInconsistent : kOk;
}

int cmd_verify(const std::string& path, const std::string& poly_path, std::size_t trials, std::uint64_t seed) {
    const ToricInput inst = read_instance_file(path);
    ImplicitPolynomial p;
    if (poly_path.empty()) {
        p = implicitize(inst).polynomial;
    } else {
        std::ifstream in(poly_path, std::ios::binary);
        if (!in) throw InputError("cannot open " + poly_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        p = parse_polynomial_json(buf.str());
        if (p.nvars != inst.ambient()) throw InputError("polynomial has the wrong number of variables");
    }
    const VanishingReport report = verify_vanishing(p, inst, trials, seed);
    std::cout << "symbolic: " << (report.symbolic_ok ? "pass" : "fail") << "\n";
    std::cout << "random: " << (report.random_ok ? "pass" : "fail") << " (" << report.trials << " points)\n";
    if (report.witness) std::cout << "witness: " << *report.witness << "\n";
    std::cout << (report.passed() ? "pass" : "fail") << "\n";
    return report.passed() ? kOk : kVerifyFailed;
}

int cmd_gen(unsigned n, unsigned d, unsigned k, std::uint64_t seed, const std::string& out) {
    const std::string text = gen_instance(n, d, k, seed);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw InputError("cannot write " + out);
        file << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Implicit equations of almost-toric hypersurfaces"};
    app.require_subcommand(1);

    std::string instance, format = "text", method, poly;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    unsigned n = 0, d = 0, k = 0;
    std::string out;

    auto* newton = app.add_subcommand("newton", "Newton polygon of the implicit equation");
    newton->add_option("instance", instance, "instance JSON file")->required();
    newton->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* implicit = app.add_subcommand("implicitize", "compute the implicit equation");
    implicit->add_option("instance", instance, "instance JSON file")->required();
    implicit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    std::string solve = "multimodular";
    implicit->add_option("--method", solve, "linear solver")->check(CLI::IsMember({"multimodular", "exact"}));

    auto* degree = app.add_subcommand("degree", "degree of the hypersurface");
    degree->add_option("instance", instance, "instance JSON file")->required();
    method = "all";
    degree->add_option("--method", method)->check(CLI::IsMember({"polygon", "tropical", "ps", "all"}));
    degree->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "check that a polynomial vanishes on the hypersurface");
    verify->add_option("instance", instance, "instance JSON file")->required();
    verify->add_option("--poly", poly, "polynomial JSON (default: implicitize the instance)");
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);

    auto* gen = app.add_subcommand("gen", "random instance");
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    gen->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*newton) return cmd_newton(instance, format);
        if (*implicit) return cmd_implicitize(instance, format, solve);
        if (*degree) return cmd_degree(instance, method, seed);
        if (*verify) return cmd_verify(instance, poly, trials, seed);
        if (*gen) return cmd_gen(n, d, k, seed, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const NotHypersurfaceError& e) {
        std::cout << "not a hypersurface\n";
        return kNotHypersurface;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInconsistent;
    }
    return kInput;
}
