// SPDX-License-Identifier: Apache-2.0
//
// graphcx: batch front-end for the graph-complex engine.
//   basis     enumerate canonical basis slices, export .gcg bundles
//   op        apply boundary / coboundary / phi / theta / mu to files
//   homology  homology rank tables (csv or json)
//   verify    run the verification suites
//   fmt       canonicalize and pretty-print a .gcg file

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphcx/brackets.hpp"
#include "graphcx/enumerate.hpp"
#include "graphcx/homology.hpp"
#include "graphcx/io.hpp"
#include "graphcx/verify.hpp"

namespace fs = std::filesystem;
using namespace graphcx;

namespace {

int run_basis(const std::string& operad, int loops, int vertices, const std::string& out_dir) {
    Operad op = operad_from_name(operad);
    const int vmax = std::max(1, 2 * loops - 2);
    const int vlo = vertices > 0 ? vertices : 1;
    const int vhi = vertices > 0 ? vertices : vmax;

    ojson manifest;
    manifest["operad"] = operad;
    manifest["loops"] = loops;
    manifest["conventions"] = conventions_json();
    ojson slices = ojson::array();
    for (int V = vlo; V <= vhi; ++V) {
        BasisSlice slice = enumerate_basis(op, loops, V);
        ojson one;
        one["vertices"] = V;
        one["count"] = slice.size();
        ojson files = ojson::array();
        if (!out_dir.empty()) {
            fs::path dir = fs::path(out_dir) / (operad + "_n" + std::to_string(loops) + "_V" + std::to_string(V));
            fs::create_directories(dir);
            int idx = 0;
            for (const auto& cg : slice.elements) {
                char name[32];
                std::snprintf(name, sizeof(name), "graph_%04d.gcg", ++idx);
                fs::path file = dir / name;
                write_gcg(file.string(), with_default_orientation(cg.graph));
                files.push_back(fs::relative(file, out_dir).string());
            }
        }
        if (!out_dir.empty()) one["files"] = files;
        slices.push_back(one);
    }
    manifest["slices"] = slices;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream mf(fs::path(out_dir) / "manifest.json", std::ios::binary);
        mf << manifest.dump(2) << "\n";
    }
    std::cout << manifest.dump(2) << "\n";
    return 0;
}

int run_op(const std::string& name, int arity, const std::vector<std::string>& inputs,
           const std::string& out_path) {
    std::vector<ojson> results;
    for (const auto& path : inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + path);
        ojson j = ojson::parse(in);
        Operad op = Operad::Comm;
        if (name == "boundary" || name == "coboundary") {
            Chain c = chain_from_json(j, &op);
            Chain r = (name == "boundary") ? boundary(c) : coboundary(c);
            results.push_back(chain_json(r, op));
        } else if (name == "phi") {
            SymTensor t = tensor_from_json(j, &op);
            results.push_back(tensor_json(fusion_coderivation(arity, t), op));
        } else if (name == "theta") {
            SymTensor t = tensor_from_json(j, &op);
            results.push_back(tensor_json(fission_derivation(arity, t), op));
        } else if (name == "mu") {
            SymTensor t = tensor_from_json(j, &op);
            results.push_back(chain_json(fusion_homotopy(arity, t), op));
        } else {
            throw CLI::ValidationError("op", "unknown operator '" + name + "'");
        }
    }
    ojson out = results.size() == 1 ? results.front() : ojson(results);
    if (!out_path.empty()) {
        std::ofstream of(out_path, std::ios::binary);
        if (!of) throw std::runtime_error("cannot write " + out_path);
        of << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int run_homology(const std::string& operad, int loops, const std::string& format) {
    HomologyTable t = homology_table(operad_from_name(operad), loops);
    if (format == "csv") std::cout << homology_csv(t);
    else std::cout << homology_json(t).dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, const verify::Options& opt) {
    std::vector<std::string> names =
        (suite == "all") ? verify::suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    for (const auto& name : names) {
        verify::Result r = verify::run_suite(name, opt);
        all_pass = all_pass && r.pass;
        std::cout << "suite " << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                  << r.checks << " checks)\n";
        if (!r.notes.empty()) std::cout << "  note: " << r.notes << "\n";
        if (!r.pass) std::cout << "  first counterexample: " << r.witness << "\n";
        ojson verdict;
        verdict["suite"] = r.suite;
        verdict["pass"] = r.pass;
        verdict["checks"] = r.checks;
        verdict["seed"] = opt.seed;
        verdict["trials"] = opt.trials;
        verdict["maxLoops"] = opt.max_loops;
        if (!r.witness.empty()) verdict["witness"] = r.witness;
        if (!r.notes.empty()) verdict["notes"] = r.notes;
        std::cout << verdict.dump() << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_fmt(const std::string& path) {
    OrientedGraph og = read_gcg(path);
    Canonicalized cc = canonicalize(og);
    ojson j = gcg_json(with_default_orientation(cc.canon.graph));
    j["canonical"] = ojson{{"encoding", cc.canon.encoding},
                           {"coefficient", cc.coeff},
                           {"zeroFlag", cc.canon.zero_flag}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphcx: exact-arithmetic engine for graph complexes of cyclic operads"};
    app.require_subcommand(1);

    std::string operad = "comm", out_dir, out_path, format = "json", op_name, suite = "all";
    std::string fmt_in;
    int loops = 2, vertices = 0, arity = 2;
    std::vector<std::string> inputs;
    verify::Options vopt;

    auto* basis = app.add_subcommand("basis", "enumerate basis slices");
    basis->add_option("--operad", operad)->check(CLI::IsMember({"comm", "assoc"}))->required();
    basis->add_option("--loops", loops)->check(CLI::PositiveNumber)->required();
    basis->add_option("--vertices", vertices)->check(CLI::PositiveNumber);
    basis->add_option("--out", out_dir);

    auto* opcmd = app.add_subcommand("op", "apply an operator to chain/tensor files");
    opcmd->add_option("operator", op_name)
        ->check(CLI::IsMember({"boundary", "coboundary", "phi", "theta", "mu"}))
        ->required();
    opcmd->add_option("--n", arity)->check(CLI::PositiveNumber);
    opcmd->add_option("--in", inputs)->required()->expected(-1);
    opcmd->add_option("--out", out_path);

    auto* hom = app.add_subcommand("homology", "homology rank tables");
    hom->add_option("--operad", operad)->check(CLI::IsMember({"comm", "assoc"}))->required();
    hom->add_option("--loops", loops)->check(CLI::PositiveNumber)->required();
    hom->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"dsquare", "canonical", "theorem1", "theorem2", "theorem3",
                               "homotopy", "adjoint", "all"}));
    ver->add_option("--max-loops", vopt.max_loops)->check(CLI::PositiveNumber);
    ver->add_option("--seed", vopt.seed);
    ver->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber);

    auto* fmt = app.add_subcommand("fmt", "canonicalize and pretty-print a .gcg file");
    fmt->add_option("--in", fmt_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    }

    try {
        if (basis->parsed()) return run_basis(operad, loops, vertices, out_dir);
        if (opcmd->parsed()) return run_op(op_name, arity, inputs, out_path);
        if (hom->parsed()) return run_homology(operad, loops, format);
        if (ver->parsed()) return run_verify(suite, vopt);
        if (fmt->parsed()) return run_fmt(fmt_in);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
