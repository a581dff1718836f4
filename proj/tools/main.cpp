// crystalline: Hodge/Newton polygons, strata, and Artin-Schreier dimensions
// for F^n-crystals over finite fields. Thin shell over the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystalline.h"

namespace {

int exit_code(crx_status s) {
    switch (s) {
        case CRX_OK: return 0;
        case CRX_E_PARSE: return 2;
        case CRX_E_NOT_A_CRYSTAL: return 3;
        case CRX_E_PRECISION: return 4;
        default: return 1;
    }
}

int die(crx_status s) {
    std::cerr << "error: " << crx_last_error() << "\n";
    return exit_code(s);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        std::exit(1);
    }
    out << text;
}

struct OwnedOptions {
    crx_options* p = crx_options_new();
    ~OwnedOptions() { crx_options_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for F^n-crystals over finite fields"};
    app.require_subcommand(1);

    std::string input, output, plot_path, step1;
    int degree = 2, jobs = 1, precision = 0, precision_cap = 24;
    long long seed = 20260501;
    bool cross_check = false, list = false;
    std::vector<std::string> suites;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("-i,--input", input, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("-o,--output", output, "output file (default: stdout)");
    };
    auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision", precision, "working precision m (default: as stored)");
        cmd->add_option("--precision-cap", precision_cap, "escalation ceiling for m")
            ->check(CLI::PositiveNumber);
    };

    auto* cmd_polygon = app.add_subcommand("polygon", "Hodge/Newton polygons of one crystal");
    add_io(cmd_polygon, true);
    add_precision(cmd_polygon);

    auto* cmd_strata = app.add_subcommand("strata", "stratify a crystal family over affine space");
    add_io(cmd_strata, true);
    add_precision(cmd_strata);
    cmd_strata->add_option("-D,--degree", degree, "closed-point degree bound")->check(CLI::PositiveNumber);
    cmd_strata->add_option("-j,--jobs", jobs, "parallel point evaluations")->check(CLI::PositiveNumber);
    cmd_strata->add_option("--plot", plot_path, "write overlaid polygon SVG to this path");
    cmd_strata->add_option("--verify-step1", step1, "check the break-point identities for P0 = a,b");

    auto* cmd_asdim = app.add_subcommand("asdim", "Artin-Schreier solution dimension / strata");
    add_io(cmd_asdim, true);
    cmd_asdim->add_option("-D,--degree", degree, "closed-point degree bound (family input)")
        ->check(CLI::PositiveNumber);
    cmd_asdim->add_option("-j,--jobs", jobs, "parallel point evaluations")->check(CLI::PositiveNumber);
    cmd_asdim->add_flag("--cross-check", cross_check, "compare with the oracle and corollary-3 p-rank");

    auto* cmd_verify = app.add_subcommand("verify", "run the built-in verification suites");
    add_io(cmd_verify, false);
    cmd_verify->add_option("--suite", suites, "run only the named suites (repeatable)");
    cmd_verify->add_flag("--list", list, "print suite names and exit");
    cmd_verify->add_option("--seed", seed, "seed for the randomized suites");

    CLI11_PARSE(app, argc, argv);

    OwnedOptions opt;
    crx_options_set_int(opt.p, "degree", degree);
    crx_options_set_int(opt.p, "jobs", jobs);
    crx_options_set_int(opt.p, "precision", precision);
    crx_options_set_int(opt.p, "precision_cap", precision_cap);
    crx_options_set_int(opt.p, "seed", seed);
    crx_options_set_int(opt.p, "cross_check", cross_check ? 1 : 0);
    crx_options_set_int(opt.p, "plot", plot_path.empty() ? 0 : 1);
    for (const auto& s : suites) crx_options_set_str(opt.p, "suite", s.c_str());
    if (!step1.empty()) {
        long long a = 0, b = 0;
        if (std::sscanf(step1.c_str(), "%lld,%lld", &a, &b) != 2) {
            std::cerr << "error: --verify-step1 expects a,b\n";
            return 2;
        }
        crx_options_set_int(opt.p, "step1", 1);
        crx_options_set_int(opt.p, "step1_a", a);
        crx_options_set_int(opt.p, "step1_b", b);
    }

    char* json = nullptr;
    char* svg = nullptr;
    crx_status st = CRX_OK;

    if (cmd_polygon->parsed()) {
        st = crx_polygon_report(slurp(input).c_str(), opt.p, &json);
        if (st != CRX_OK) return die(st);
        emit(json, output);
    } else if (cmd_strata->parsed()) {
        st = crx_strata_report(slurp(input).c_str(), opt.p, &json, &svg);
        if (st != CRX_OK) return die(st);
        emit(json, output);
        if (!plot_path.empty() && svg) emit(svg, plot_path);
    } else if (cmd_asdim->parsed()) {
        st = crx_asdim_report(slurp(input).c_str(), opt.p, &json);
        if (st != CRX_OK) return die(st);
        emit(json, output);
    } else if (cmd_verify->parsed()) {
        if (list) {
            st = crx_suite_list(&json);
            if (st != CRX_OK) return die(st);
            emit(json, output);
        } else {
            int passed = 0;
            st = crx_verify_run(opt.p, &json, &passed);
            if (st != CRX_OK) return die(st);
            emit(json, output);
            if (!passed) {
                crx_string_free(json);
                return 1;
            }
        }
    }
    crx_string_free(json);
    crx_string_free(svg);
    return 0;
}
