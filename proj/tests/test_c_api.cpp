#include "dwindex/dwindex.h"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("space lifecycle") {
    const double square[] = {1, 0, 0, 1, -1, 0, 0, -1};
    dw_space* s = nullptr;
    REQUIRE(dw_space_build(square, 4, 2, 1e-9, &s) == DW_OK);
    CHECK(dw_space_dim(s) == 2);
    CHECK(dw_space_vertex_count(s) == 4);
    CHECK(dw_space_facet_count(s) == 4);
    const double x[] = {0.5, 0.5};
    double n = 0.0;
    CHECK(dw_space_norm(s, x, 2, &n) == DW_OK);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dw_space_norm(s, x, 3, &n) == DW_ERR_DIMENSION_MISMATCH);

    char* json = nullptr;
    REQUIRE(dw_space_to_json(s, &json) == DW_OK);
    dw_space* back = nullptr;
    CHECK(dw_space_from_json(json, &back) == DW_OK);
    CHECK(dw_space_facet_count(back) == 4);
    dw_string_free(json);
    dw_space_free(back);
    dw_space_free(s);
}

TEST_CASE("error statuses") {
    const double bad[] = {1, 0, 0, 1, -1, 0};
    dw_space* s = nullptr;
    CHECK(dw_space_build(bad, 3, 2, 1e-9, &s) == DW_ERR_NON_SYMMETRIC);
    CHECK(s == nullptr);
    CHECK(std::strlen(dw_last_error_message()) > 0);
    CHECK(dw_space_build(nullptr, 3, 2, 1e-9, &s) == DW_ERR_NULL_ARGUMENT);
    CHECK(dw_space_from_json("{oops", &s) == DW_ERR_PARSE);
    CHECK(dw_space_gallery("drum", 2, 0, 0, 1, nullptr, &s) == DW_ERR_BAD_PARAMETER);
    const double flat[] = {1, 0, -1, 0, 2, 0, -2, 0};
    CHECK(dw_space_build(flat, 4, 2, 1e-9, &s) == DW_ERR_DEGENERATE);
    for (int k = 0; k <= DW_ERR_INTERNAL; ++k) CHECK(std::strlen(dw_status_string(static_cast<dw_status>(k))) > 0);
}

TEST_CASE("radius and index through the C layer") {
    dw_space* hex = nullptr;
    REQUIRE(dw_space_gallery("regular-polygon", 3, 0, 0, 1, nullptr, &hex) == DW_OK);
    const double id[] = {1, 0, 0, 1};
    dw_operator* op = nullptr;
    REQUIRE(dw_operator_create(id, 2, &op) == DW_OK);
    double v = 0.0;
    CHECK(dw_radius_value(hex, op, DW_KIND_DWSTAR, &v) == DW_OK);
    CHECK(v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dw_sampled_radius(hex, op, DW_KIND_DW, 1000, 42, &v) == DW_OK);
    CHECK(v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    char* json = nullptr;
    REQUIRE(dw_radius_json(hex, op, DW_KIND_DW, 100, 42, &json) == DW_OK);
    CHECK(std::string(json).find("\"oracle\"") != std::string::npos);
    dw_string_free(json);

    REQUIRE(dw_index_estimate_json(hex, DW_KIND_DW, 64, 42, 1e-6, &json) == DW_OK);
    CHECK(std::string(json).find("\"witness\"") != std::string::npos);
    dw_string_free(json);
    CHECK(dw_index_estimate_json(hex, DW_KIND_OPNORM, 4, 42, 1e-6, &json) == DW_ERR_BAD_PARAMETER);

    REQUIRE(dw_certify_json(hex, -1, &json) == DW_OK);
    CHECK(std::string(json).find("\"lower_bound\"") != std::string::npos);
    dw_string_free(json);
    CHECK(dw_certify_json(hex, 40, &json) == DW_ERR_BAD_PARAMETER);

    dw_radius_kind kind{};
    CHECK(dw_radius_kind_parse("dwstar", &kind) == DW_OK);
    CHECK(kind == DW_KIND_DWSTAR);
    CHECK(dw_radius_kind_parse("x", &kind) == DW_ERR_BAD_PARAMETER);

    const double three[] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    dw_operator* big = nullptr;
    REQUIRE(dw_operator_create(three, 3, &big) == DW_OK);
    CHECK(dw_radius_value(hex, big, DW_KIND_DW, &v) == DW_ERR_DIMENSION_MISMATCH);
    dw_operator_free(big);
    dw_operator_free(op);
    dw_space_free(hex);
}

TEST_CASE("shell through the C layer") {
    dw_complex_operator* op = nullptr;
    REQUIRE(dw_complex_operator_nonconvex(2, &op) == DW_OK);
    CHECK(dw_complex_operator_dim(op) == 2);
    dw_shell* shell = nullptr;
    REQUIRE(dw_shell_sample(op, 4.0, 5000, 42, &shell) == DW_OK);
    CHECK(dw_shell_size(shell) == 5000);
    double xyz[6] = {};
    CHECK(dw_shell_points(shell, xyz, 2) == 2);
    CHECK(xyz[2] > 0.0);
    double spacing = 0.0;
    CHECK(dw_shell_median_spacing(shell, &spacing) == DW_OK);
    CHECK(spacing > 0.0);
    char* json = nullptr;
    REQUIRE(dw_shell_witness_json(shell, 0.0, &json) == DW_OK);
    CHECK(std::string(json).find("\"found\"") != std::string::npos);
    dw_string_free(json);
    REQUIRE(dw_shell_summary_json(shell, &json) == DW_OK);
    dw_string_free(json);
    CHECK(dw_shell_write_csv(shell, "/nonexistent/dir/x.csv") == DW_ERR_IO);
    dw_shell_free(shell);
    dw_complex_operator_free(op);
}

TEST_CASE("reproduce negative control") {
    char* json = nullptr;
    int pass = 1;
    REQUIRE(dw_reproduce_json(42, 2.5, &json, &pass) == DW_OK);
    CHECK(pass == 0);
    const std::string text(json);
    dw_string_free(json);
    const auto row = text.find("\"pyramid-prism-index\"");
    REQUIRE(row != std::string::npos);
    const auto status = text.find("\"status\"", row);
    CHECK(text.compare(status, 16, "\"status\": \"FAIL\"") == 0);
}
