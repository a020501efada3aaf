// taffy: rod-stirring devices as braids, loop coordinates, and torus maps.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "taffy/catalog.hpp"
#include "taffy/errors.hpp"
#include "taffy/loop.hpp"
#include "taffy/orbit.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"taffy puller analysis: braids, loop growth, Table reproduction"};
    app.require_subcommand(1);

    // taffy list
    auto* list_cmd = app.add_subcommand("list", "catalog names and rod counts");

    // taffy analyze <name> [--tol T] [--json]
    std::string analyze_name;
    double analyze_tol = 1e-4;
    int analyze_iters = 60;
    bool analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one device");
    analyze_cmd->add_option("name", analyze_name, "device name or spec-file path")->required();
    analyze_cmd->add_option("--tol", analyze_tol, "entropy tolerance");
    analyze_cmd->add_option("--max-iter", analyze_iters, "entropy iteration cap");
    analyze_cmd->add_flag("--json", analyze_json, "emit JSON");

    // taffy braid "<letters>" --strands N [--entropy] [--burau] [--charpoly] [--tol T]
    std::string braid_letters;
    int braid_strands = 0;
    bool braid_entropy = false, braid_burau = false, braid_charpoly = false;
    double braid_tol = 1e-4;
    int braid_iters = 60;
    auto* braid_cmd = app.add_subcommand("braid", "analyze a raw braid word");
    braid_cmd->add_option("letters", braid_letters, "whitespace-separated signed letters")->required();
    braid_cmd->add_option("--strands", braid_strands, "strand count")->required();
    braid_cmd->add_flag("--entropy", braid_entropy, "loop-growth entropy");
    braid_cmd->add_flag("--burau", braid_burau, "Burau matrix at -1");
    braid_cmd->add_flag("--charpoly", braid_charpoly, "characteristic polynomial");
    braid_cmd->add_option("--tol", braid_tol, "entropy tolerance");
    braid_cmd->add_option("--max-iter", braid_iters, "entropy iteration cap");

    // taffy compile <spec-file> [--duration num/den] [--samples K]
    std::string compile_file, compile_duration;
    int compile_samples = 512;
    auto* compile_cmd = app.add_subcommand("compile", "compile a device spec file to a braid word");
    compile_cmd->add_option("spec-file", compile_file, "JSON device spec")->required();
    compile_cmd->add_option("--duration", compile_duration, "fraction of the period, e.g. 1/2");
    compile_cmd->add_option("--samples", compile_samples, "initial sampling density");

    // taffy table [--csv PATH | --json PATH] [--tol T] [--extra-braids FILE] [--strict]
    std::string table_csv, table_json, table_extra;
    double table_tol = 1e-4;
    int table_iters = 60;
    bool table_strict = false;
    auto* table_cmd = app.add_subcommand("table", "full catalog report");
    table_cmd->add_option("--csv", table_csv, "write CSV to PATH");
    table_cmd->add_option("--json", table_json, "write JSON to PATH");
    table_cmd->add_option("--tol", table_tol, "entropy tolerance");
    table_cmd->add_option("--max-iter", table_iters, "entropy iteration cap");
    table_cmd->add_option("--extra-braids", table_extra, "JSON file of appendix braids");
    table_cmd->add_flag("--strict", table_strict, "nonzero exit on any per-device error");

    // taffy spec <name> [--out FILE]
    std::string spec_name, spec_out;
    auto* spec_cmd = app.add_subcommand("spec", "print or write a bundled device spec file");
    spec_cmd->add_option("name", spec_name, "bundled device name")->required();
    spec_cmd->add_option("--out", spec_out, "write to FILE instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (*list_cmd) {
        for (const taffy::DeviceInfo& d : taffy::device_registry()) {
            std::cout << d.name << "  rods=" << d.rods;
            if (d.fixed) std::cout << " (" << d.fixed << " fixed)";
            std::cout << "  p=" << taffy::format_fraction(d.p);
            if (!d.has_motion) std::cout << "  [braid word required]";
            std::cout << "\n";
        }
        return 0;
    }

    if (*analyze_cmd) {
        taffy::AnalyzeOptions opt;
        opt.tol = analyze_tol;
        opt.max_iter = analyze_iters;
        taffy::PullerAnalysis res;
        std::ifstream probe(analyze_name);
        if (probe.good())
            res = taffy::analyze(taffy::load_spec_file(analyze_name), opt);
        else
            res = taffy::analyze(analyze_name, opt);
        std::cout << (analyze_json ? taffy::to_json(res) : taffy::to_text(res));
        return res.ok() ? 0 : 1;
    }

    if (*braid_cmd) {
        taffy::BraidWord w = taffy::BraidWord::parse(braid_strands, braid_letters);
        auto perm = taffy::permutation(w);
        std::cout << "strands: " << w.n_strands() << "  length: " << w.length() << "\n";
        std::cout << "permutation:";
        for (std::size_t i = 0; i < perm.size(); ++i)
            std::cout << " " << i + 1 << "->" << perm[i] + 1;
        std::cout << "\n";
        if (braid_burau) {
            taffy::IntMatrix m = taffy::burau_minus_one(w);
            std::cout << "burau(-1):\n";
            for (std::size_t r = 0; r < m.size(); ++r) {
                std::cout << "  [";
                for (std::size_t c = 0; c < m.size(); ++c)
                    std::cout << (c ? " " : "") << m.at(r, c).get_str();
                std::cout << "]\n";
            }
        }
        if (braid_charpoly) {
            std::cout << "charpoly: " << taffy::char_poly(taffy::burau_minus_one(w)).str() << "\n";
            std::cout << "spectral radius bound: " << taffy::spectral_radius_bound(w) << "\n";
        }
        if (braid_entropy) {
            taffy::EntropyEstimate e = taffy::entropy(w, braid_tol, braid_iters);
            std::cout << "entropy: " << e.value << (e.converged ? "" : "  (not converged)")
                      << "  iterations: " << e.iterations << "  residual: " << e.residual << "\n";
        }
        return 0;
    }

    if (*compile_cmd) {
        taffy::RodMotionSpec spec = taffy::load_spec_file(compile_file);
        taffy::Rat duration = compile_duration.empty() ? spec.period_fraction
                                                       : taffy::parse_fraction(compile_duration);
        taffy::BraidWord w = taffy::compile_braid(spec, duration, compile_samples);
        std::cout << "strands: " << w.n_strands() << "\n";
        std::cout << "word: " << w.str() << "\n";
        return 0;
    }

    if (*table_cmd) {
        taffy::AnalyzeOptions opt;
        opt.tol = table_tol;
        opt.max_iter = table_iters;
        std::map<std::string, taffy::BraidWord> extra;
        if (!table_extra.empty()) {
            std::ifstream in(table_extra);
            if (!in) throw taffy::Error("cannot open " + table_extra);
            std::ostringstream buf;
            buf << in.rdbuf();
            extra = taffy::parse_extra_braids(buf.str());
        }
        auto rows = taffy::table(opt, extra);
        if (!table_csv.empty()) {
            std::ofstream out(table_csv, std::ios::binary);
            out << taffy::to_csv(rows);
        }
        if (!table_json.empty()) {
            std::ofstream out(table_json, std::ios::binary);
            out << taffy::to_json(rows);
        }
        if (table_csv.empty() && table_json.empty())
            for (const auto& r : rows) std::cout << taffy::to_text(r);
        bool any_error = std::any_of(rows.begin(), rows.end(),
                                     [](const taffy::PullerAnalysis& r) { return !r.ok(); });
        return (table_strict && any_error) ? 1 : 0;
    }

    if (*spec_cmd) {
        std::string json = taffy::spec_to_json(taffy::catalog_spec(spec_name));
        if (spec_out.empty()) {
            std::cout << json;
        } else {
            std::ofstream out(spec_out, std::ios::binary);
            out << json;
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const taffy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
