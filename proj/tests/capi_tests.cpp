// Exercises the shared-library surface only: everything goes through the C
// header, never the C++ headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recollement/recollement.h"

#include <string>

TEST_CASE("version and builtin listing") {
    CHECK(std::string(rcl_version()) == "0.1.0");
    REQUIRE(rcl_builtin_count() == 7);
    bool found_t2 = false;
    for (size_t i = 0; i < rcl_builtin_count(); ++i)
        if (std::string(rcl_builtin_name(i)) == "T2_F2") found_t2 = true;
    CHECK(found_t2);
    CHECK(rcl_builtin_name(99) == nullptr);
}

TEST_CASE("algebra handles") {
    rcl_algebra* a = nullptr;
    REQUIRE(rcl_algebra_builtin("T2_F2", &a) == RCL_OK);
    CHECK(rcl_algebra_dim(a) == 3);
    CHECK(rcl_algebra_characteristic(a) == 2);
    CHECK(std::string(rcl_algebra_basis_label(a, 0)) == "e11");
    CHECK(rcl_algebra_basis_label(a, 3) == nullptr);
    rcl_algebra_free(a);

    rcl_algebra* bad = nullptr;
    CHECK(rcl_algebra_builtin("nope", &bad) == RCL_ERR_NOT_FOUND);
    CHECK(std::string(rcl_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("algebra from text and parse failure") {
    const char* doc = R"({"kind": "structure_constants", "p": 2,
                          "basis": ["e"], "unit": [1], "table": [[[1]]]})";
    rcl_algebra* a = nullptr;
    REQUIRE(rcl_algebra_from_text(doc, &a) == RCL_OK);
    CHECK(rcl_algebra_dim(a) == 1);

    rcl_report* rep = nullptr;
    REQUIRE(rcl_run(a, "analyze", nullptr, &rep) == RCL_OK);
    CHECK(rcl_report_failed_count(rep) == 0);
    rcl_report_free(rep);
    rcl_algebra_free(a);

    rcl_algebra* bad = nullptr;
    CHECK(rcl_algebra_from_text("{oops", &bad) == RCL_ERR_PARSE);
    CHECK(rcl_algebra_from_file("/no/such/path.json", &bad) == RCL_ERR_IO);
}

TEST_CASE("running commands and reading reports") {
    rcl_algebra* a = nullptr;
    REQUIRE(rcl_algebra_builtin("F2xF2", &a) == RCL_OK);

    rcl_options* o = rcl_options_new();
    CHECK(rcl_options_set_dim_bound(o, 2) == RCL_OK);
    CHECK(rcl_options_set_seed(o, 11) == RCL_OK);
    CHECK(rcl_options_set_mode(o, "brute") == RCL_OK);
    CHECK(rcl_options_set_mode(o, "banana") == RCL_ERR_BAD_ARGUMENT);

    rcl_report* rep = nullptr;
    REQUIRE(rcl_run(a, "jans-check", o, &rep) == RCL_OK);
    CHECK(rcl_report_failed_count(rep) == 0);
    REQUIRE(rcl_report_check_count(rep) >= 3);
    CHECK(std::string(rcl_report_check_name(rep, 0)) == "jans.counts");
    CHECK(rcl_report_check_passed(rep, 0) == 1);
    CHECK(std::string(rcl_report_check_claim(rep, 0)).find("idempotent ideals") !=
          std::string::npos);
    std::string json = rcl_report_json(rep);
    CHECK(json.find("\"idempotent_ideals\": 4") != std::string::npos);
    rcl_report_free(rep);

    // unknown command
    rcl_report* none = nullptr;
    CHECK(rcl_run(a, "explode", o, &none) == RCL_ERR_BAD_ARGUMENT);

    rcl_options_free(o);
    rcl_algebra_free(a);
}

TEST_CASE("determinism through the C surface") {
    rcl_algebra* a = nullptr;
    REQUIRE(rcl_algebra_builtin("T2_F2", &a) == RCL_OK);
    rcl_options* o = rcl_options_new();
    rcl_options_set_idempotent(o, "e11");
    rcl_options_set_seed(o, 5);

    std::string first, second;
    for (std::string* s : {&first, &second}) {
        rcl_report* rep = nullptr;
        REQUIRE(rcl_run(a, "verify-recollement", o, &rep) == RCL_OK);
        *s = rcl_report_json(rep);
        rcl_report_free(rep);
    }
    CHECK(first == second);
    rcl_options_free(o);
    rcl_algebra_free(a);
}

TEST_CASE("error codes map through") {
    rcl_algebra* a = nullptr;
    REQUIRE(rcl_algebra_builtin("T2_F2", &a) == RCL_OK);
    rcl_options* o = rcl_options_new();
    rcl_options_set_idempotent(o, "e12"); // not idempotent
    rcl_report* rep = nullptr;
    CHECK(rcl_run(a, "verify-recollement", o, &rep) == RCL_ERR_NOT_IDEMPOTENT);
    rcl_options_free(o);
    rcl_algebra_free(a);
}
