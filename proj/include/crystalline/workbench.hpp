#pragma once

#include <string>
#include <vector>

#include "crystalline/serialize.hpp"

namespace crystalline {

// Options shared by the command-level entry points (mirrors the CLI flags).
struct WorkbenchOptions {
    int degree = 2;          // closed-point degree bound
    int jobs = 1;            // parallel point evaluations
    int precision = 0;       // starting m override; 0 = use the stored precision
    int precision_cap = 24;  // escalation ceiling for m
    unsigned long long seed = 20260501;
    bool cross_check = false;
    bool plot = false;
    bool has_step1 = false;
    long long step1_a = 1;
    long long step1_b = 0;
    std::vector<std::string> suites;  // empty = all
};

// Polygon report for one crystal: {precision, hodge, newton, break_points,
// p_rank}. On InsufficientPrecision the input is re-read with doubled m
// (canonical-lift reinterpretation) until the cap; then PrecisionOverflow.
Json run_polygon(const Json& input, const WorkbenchOptions& opt);

// Stratification report for a family file, with the same escalation rule.
// With opt.plot, *svg_out receives the overlaid polygons of the observed
// strata. With opt.has_step1 the report gains a "step1" section.
Json run_strata(const Json& input, const WorkbenchOptions& opt, std::string* svg_out);

// Artin-Schreier dimension report: {dimension} plus oracle and corollary-3
// comparisons under opt.cross_check. Family inputs (with "vars") instead get
// the Y_t stratification.
Json run_asdim(const Json& input, const WorkbenchOptions& opt);

// Run the named (or all) verification suites: {seed, suites: [...], passed}.
Json run_verify(const WorkbenchOptions& opt);

}  // namespace crystalline
