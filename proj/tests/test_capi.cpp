#include <doctest.h>

#include <cstring>
#include <string>

#include "crystalline.h"

namespace {

struct Opts {
    crx_options* p = crx_options_new();
    ~Opts() { crx_options_free(p); }
};

const char* kE12 =
    R"({"p":2,"d":1,"m":4,"n":1,"rank":2,"matrix":[[[0],[2]],[[1],[0]]]})";

}  // namespace

TEST_CASE("polygon report through the C API") {
    Opts o;
    char* out = nullptr;
    REQUIRE(crx_polygon_report(kE12, o.p, &out) == CRX_OK);
    std::string s(out);
    crx_string_free(out);
    CHECK(s.find("\"newton\"") != std::string::npos);
    CHECK(s.find("\"hodge\"") != std::string::npos);
    CHECK(s.find("\"p_rank\": 0") != std::string::npos);
}

TEST_CASE("parse errors carry diagnostics") {
    Opts o;
    char* out = nullptr;
    CHECK(crx_polygon_report("{ \"p\": 2, ", o.p, &out) == CRX_E_PARSE);
    CHECK(std::strlen(crx_last_error()) > 0);
    CHECK(std::string(crx_last_error()).find("line") != std::string::npos);
}

TEST_CASE("not-a-crystal and precision statuses") {
    Opts o;
    char* out = nullptr;
    const char* zero = R"({"p":2,"d":1,"m":2,"n":1,"rank":1,"matrix":[[[0]]]})";
    CHECK(crx_polygon_report(zero, o.p, &out) == CRX_E_NOT_A_CRYSTAL);
    // cap below what escalation would need
    crx_options_set_int(o.p, "precision_cap", 1);
    const char* thin = R"({"p":2,"d":1,"m":1,"n":1,"rank":2,"matrix":[[[0],[0]],[[1],[0]]]})";
    crx_status st = crx_polygon_report(thin, o.p, &out);
    CHECK((st == CRX_E_PRECISION || st == CRX_E_NOT_A_CRYSTAL));
}

TEST_CASE("option validation") {
    Opts o;
    CHECK(crx_options_set_int(o.p, "degree", 2) == CRX_OK);
    CHECK(crx_options_set_int(o.p, "no_such_key", 1) == CRX_E_INVALID);
    CHECK(crx_options_set_str(o.p, "suite", "mazur") == CRX_OK);
    CHECK(crx_options_set_str(o.p, "no_such_key", "x") == CRX_E_INVALID);
}

TEST_CASE("suite list and a fast verify run") {
    char* out = nullptr;
    REQUIRE(crx_suite_list(&out) == CRX_OK);
    std::string names(out);
    crx_string_free(out);
    CHECK(names.find("mazur") != std::string::npos);
    CHECK(names.find("wittring") != std::string::npos);

    Opts o;
    crx_options_set_str(o.p, "suite", "standard_e");
    int passed = 0;
    REQUIRE(crx_verify_run(o.p, &out, &passed) == CRX_OK);
    crx_string_free(out);
    CHECK(passed == 1);
}

TEST_CASE("asdim with cross check") {
    Opts o;
    crx_options_set_int(o.p, "cross_check", 1);
    const char* inst = R"({"p":2,"d":1,"n":2,"A":[[[1],[0]],[[0],[1]]]})";
    char* out = nullptr;
    REQUIRE(crx_asdim_report(inst, o.p, &out) == CRX_OK);
    std::string s(out);
    crx_string_free(out);
    CHECK(s.find("\"dimension\": 2") != std::string::npos);
    CHECK(s.find("\"oracle_dimension\": 2") != std::string::npos);
    CHECK(s.find("\"corollary3_p_rank\": 2") != std::string::npos);
}

TEST_CASE("strata with svg") {
    Opts o;
    crx_options_set_int(o.p, "plot", 1);
    crx_options_set_int(o.p, "degree", 2);
    const char* fam = R"({"p":2,"d":1,"m":5,"n":1,"rank":2,"vars":["t"],
        "matrix":[[[{"exponents":[1],"coeff":[1]}],[{"exponents":[0],"coeff":[2]}]],
                  [[{"exponents":[0],"coeff":[2]}],[]]]})";
    char* out = nullptr;
    char* svg = nullptr;
    REQUIRE(crx_strata_report(fam, o.p, &out, &svg) == CRX_OK);
    std::string s(out);
    crx_string_free(out);
    CHECK(s.find("newton_strata") != std::string::npos);
    REQUIRE(svg != nullptr);
    CHECK(std::string(svg).find("<svg") != std::string::npos);
    crx_string_free(svg);
}
