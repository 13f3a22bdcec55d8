// Command-line verification harness for the pentagram map: generates
// polygons, runs the exact checks behind each theorem, cross-validates the
// three F-polynomial routes, and emits machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentagram/cluster.hpp"
#include "pentagram/polygon.hpp"
#include "pentagram/polygon_io.hpp"
#include "pentagram/report.hpp"
#include "pentagram/verify.hpp"

namespace {

using namespace pentagram;

struct CommonFlags {
    std::string out;
    std::string format = "text";
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--out", flags.out, "write the report to this path instead of stdout");
    cmd->add_option("--format", flags.format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", flags.timing,
                  "include wall time in the report (reports are otherwise byte-identical "
                  "across runs)");
}

int emit(const VerificationReport& rep, const CommonFlags& flags) {
    std::string body =
        flags.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (flags.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(flags.out);
        if (!f) {
            std::cerr << "error: cannot write " << flags.out << "\n";
            return 2;
        }
        f << body;
    }
    return rep.all_passed() ? 0 : 1;
}

template <class Fn>
int run_report(Fn&& fn, const CommonFlags& flags) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = fn();
    auto t1 = std::chrono::steady_clock::now();
    if (flags.timing)
        rep.timing_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return emit(rep, flags);
}

int write_json(const nlohmann::ordered_json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return 2;
    }
    f << j.dump(2) << "\n";
    return 0;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot read " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pentagram-map dynamics: verification harness and toolbox"};
    app.require_subcommand(1);

    int n = 0, k = 0, trials = 0, jindex = 0, bound = 12;
    std::uint64_t seed = 2024;
    std::string mode = "closed", in_path, out_path;
    bool closed_flag = false;
    CommonFlags flags;

    auto* tk = app.add_subcommand("verify-tk", "iterated y-parameters vs the closed formula");
    tk->add_option("--n", n, "polygon size (default: sweep 5..9)");
    tk->add_option("--k", k, "max iterate depth (default 5)");
    tk->add_option("--trials", trials, "random polygons per configuration (default 25)");
    tk->add_option("--seed", seed, "base seed");
    add_common(tk, flags);

    auto* tkx = app.add_subcommand("verify-tkx", "iterated x-coordinates vs the closed formula");
    tkx->add_option("--n", n, "polygon size (default: sweep 5..9)");
    tkx->add_option("--k", k, "max iterate depth (default 5)");
    tkx->add_option("--trials", trials, "random polygons per configuration (default 25)");
    tkx->add_option("--seed", seed, "base seed");
    add_common(tkx, flags);

    auto* fp = app.add_subcommand("verify-fpoly",
                                  "F-polynomial route equality, positivity, structure sweeps");
    fp->add_option("--n", n, "ring half-width (default 8)");
    fp->add_option("--k", k, "enumeration depth (default 5, budget 6)");
    add_common(fp, flags);

    auto* col = app.add_subcommand("verify-collapse", "axis-aligned collapse theorems");
    col->add_option("--mode", mode, "closed or twisted")
        ->check(CLI::IsMember({"closed", "twisted"}));
    col->add_option("--n", n, "half the vertex count (default: sweep 3..5)");
    col->add_option("--trials", trials, "polygons per size (default 10)");
    col->add_option("--seed", seed, "base seed");
    add_common(col, flags);

    auto* cl = app.add_subcommand("verify-cluster", "seed mutations, B0, the seed chain");
    cl->add_option("--n", n, "rank half-width (default 8)");
    cl->add_option("--seed", seed, "base seed");
    add_common(cl, flags);

    auto* gen = app.add_subcommand("gen", "generate a random twisted polygon as JSON");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "seed");
    gen->add_flag("--closed", closed_flag, "identity monodromy");
    gen->add_option("--bound", bound, "coordinate bound (default 12)");
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* map = app.add_subcommand("map", "apply T^k to a polygon JSON; emit result + y/x tables");
    map->add_option("--in", in_path, "input polygon JSON")->required();
    map->add_option("--k", k, "number of pentagram steps (default 1)");
    map->add_option("--out", out_path, "output path (default stdout)");

    auto* fpp = app.add_subcommand("fpoly", "print F_{j,k} in canonical text form");
    fpp->add_option("--j", jindex, "index shift j (default 0)");
    fpp->add_option("--k", k, "depth k")->required();
    fpp->add_option("--n", n, "ring half-width (default 8)");
    fpp->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tk->parsed())
            return run_report(
                [&] { return verify_tk(n, k ? k : 5, trials ? trials : 25, seed); }, flags);
        if (tkx->parsed())
            return run_report(
                [&] { return verify_tkx(n, k ? k : 5, trials ? trials : 25, seed); }, flags);
        if (fp->parsed())
            return run_report([&] { return verify_fpoly(n ? n : 8, k ? k : 5); }, flags);
        if (col->parsed())
            return run_report(
                [&] {
                    return verify_collapse(mode == "closed", n, trials ? trials : 10, seed);
                },
                flags);
        if (cl->parsed())
            return run_report([&] { return verify_cluster(n ? n : 8, seed); }, flags);

        if (gen->parsed()) {
            TwistedPolygon p = random_polygon(n, seed, closed_flag, bound);
            return write_json(polygon_to_json(p), out_path);
        }
        if (map->parsed()) {
            TwistedPolygon p = polygon_from_json(read_json(in_path));
            TwistedPolygon q = pentagram_iterate(p, k ? k : 1);
            nlohmann::ordered_json j;
            j["polygon"] = polygon_to_json(q);
            j["y"] = rat_list_to_json(y_params(q));
            j["x"] = rat_list_to_json(x_coords(q));
            return write_json(j, out_path);
        }
        if (fpp->parsed()) {
            YPattern yp(n ? n : 8);
            std::string text = yp.F(jindex, k).str() + "\n";
            if (out_path.empty()) {
                std::cout << text;
                return 0;
            }
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            f << text;
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const generation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const geometry_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const algebra_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
