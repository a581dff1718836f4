// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <string>

#include "crystalline/verify.hpp"

namespace {

constexpr unsigned long long kSeed = 20260501;

struct Criterion {
    int number;
    const char* description;
    const char* suite;
    double budget_seconds;  // 0 = no explicit budget
};

const Criterion kCriteria[] = {
    {1, "worked example reproduction (S_nu1 = {t=0}, rest S_nu2, p in {2,3,5})", "worked_example", 10.0},
    {2, "E(a/b) pure of slope a/b over F_2 and F_4", "standard_e", 0},
    {3, "Mazur: Newton above Hodge with equal endpoints on 200 crystals", "mazur", 0},
    {4, "oracle equivalence on 100 basis-changed E-sums", "oracle", 0},
    {5, "iterate scaling and exterior-square slope sums", "iterate_exterior", 0},
    {6, "break-point integrality across suites", "breakpoints", 0},
    {7, "Step-1 identities on the worked family and 25 seeded families", "step1", 0},
    {8, "corollary 3: p-rank = AS dimension = brute force", "corollary3", 60.0},
    {9, "p-rank equivalences for twist 1", "prank", 0},
    {10, "precision robustness and undersized-m error", "precision", 0},
};

}  // namespace

int main() {
    int failures = 0;
    for (const auto& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        crystalline::SuiteResult r = crystalline::run_suite(c.suite, kSeed);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = r.passed;
        std::string note = r.detail;
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            note = "exceeded time budget: " + std::to_string(secs) + "s";
        }
        std::printf("criterion %2d: %s  [%s] (%.2fs)%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.description, secs, ok ? "" : " -- ", ok ? "" : note.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
