#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "simcore.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    simcore_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("partition handles") {
    simcore_partition* p = nullptr;
    REQUIRE(simcore_partition_parse("5,4,2,1,1", &p) == SIMCORE_OK);
    CHECK(simcore_partition_size(p) == 13);
    CHECK(simcore_partition_length(p) == 5);
    char* json = nullptr;
    REQUIRE(simcore_partition_json(p, &json) == SIMCORE_OK);
    CHECK(take(json) == "[5,4,2,1,1]");

    simcore_partition* conj = nullptr;
    REQUIRE(simcore_partition_conjugate(p, &conj) == SIMCORE_OK);
    REQUIRE(simcore_partition_json(conj, &json) == SIMCORE_OK);
    CHECK(take(json) == "[5,3,2,2,1]");

    simcore_partition* reduced = nullptr;
    REQUIRE(simcore_partition_core_reduce(p, 6, &reduced) == SIMCORE_OK);
    REQUIRE(simcore_partition_json(reduced, &json) == SIMCORE_OK);
    CHECK(take(json) == "[3,1,1,1,1]");

    int flag = -1;
    REQUIRE(simcore_partition_is_core(reduced, 6, &flag) == SIMCORE_OK);
    CHECK(flag == 1);

    simcore_partition_free(p);
    simcore_partition_free(conj);
    simcore_partition_free(reduced);
}

TEST_CASE("parse errors set a message and return a status") {
    simcore_partition* p = nullptr;
    CHECK(simcore_partition_parse("1,2", &p) == SIMCORE_ERR_DOMAIN);
    CHECK(std::string(simcore_last_error()).find("decreasing") != std::string::npos);
    CHECK(simcore_partition_parse("a,b", &p) == SIMCORE_ERR_BADARG);
    simcore_partition* empty = nullptr;
    REQUIRE(simcore_partition_parse("", &empty) == SIMCORE_OK);
    CHECK(simcore_partition_size(empty) == 0);
    simcore_partition_free(empty);
}

TEST_CASE("stats record") {
    simcore_partition* p = nullptr;
    REQUIRE(simcore_partition_parse("7,6,2,2,2,2", &p) == SIMCORE_OK);
    char* json = nullptr;
    REQUIRE(simcore_partition_stats_json(p, 7, 8, &json) == SIMCORE_OK);
    CHECK(take(json) ==
          "{\"partition\":[7,6,2,2,2,2],\"ell\":6,\"sl\":13,\"sl_prime\":8,\"maj_a\":21}");
    simcore_partition_free(p);
}

TEST_CASE("family counts and listings") {
    int64_t formula = 0, enumerated = 0;
    REQUIRE(simcore_cores_count(2, 3, 0, &formula, &enumerated) == SIMCORE_OK);
    CHECK(formula == 2);
    CHECK(enumerated == 2);
    REQUIRE(simcore_cores_count(8, 13, 1, &formula, &enumerated) == SIMCORE_OK);
    CHECK(formula == 210);
    CHECK(enumerated == 210);
    CHECK(simcore_cores_count(2, 4, 0, &formula, &enumerated) == SIMCORE_ERR_DOMAIN);

    char* out = nullptr;
    REQUIRE(simcore_cores_list(2, 3, 0, 0, "json", &out) == SIMCORE_OK);
    CHECK(take(out) == "[[1],[]]");
    REQUIRE(simcore_cores_list(2, 3, 0, 1, "json", &out) == SIMCORE_OK);
    std::string with_stats = take(out);
    CHECK(with_stats.find("\"sl\":1") != std::string::npos);
    REQUIRE(simcore_cores_list(2, 3, 0, 0, "csv", &out) == SIMCORE_OK);
    std::string csv = take(out);
    CHECK(csv.find("partition,size,length,sl,sl_prime,maj_a,maj_c\r\n") == 0);
    CHECK(csv.find("\"1\",1,1,1,0,0,") != std::string::npos);
    CHECK(simcore_cores_list(3, 2, 0, 0, "json", &out) == SIMCORE_ERR_DOMAIN);
}

TEST_CASE("q-Catalan endpoints") {
    char* out = nullptr;
    REQUIRE(simcore_qcatalan_json(3, 4, &out) == SIMCORE_OK);
    CHECK(take(out) == "[1,0,1,1,1,0,1]");
    int64_t v = 0;
    REQUIRE(simcore_qcatalan_eval(3, 4, -1, &v) == SIMCORE_OK);
    CHECK(v == 3);
    CHECK(simcore_qcatalan_json(2, 4, &out) == SIMCORE_ERR_DOMAIN);
}

TEST_CASE("Shi endpoints") {
    char* out = nullptr;
    REQUIRE(simcore_shi_coords('A', 3, "-1,1,6", &out) == SIMCORE_OK);
    CHECK(take(out) ==
          "{\"window\":[-1,1,6],\"coords\":[[\"e1-e2\",0],[\"e1-e3\",2],[\"e2-e3\",1]],"
          "\"descents\":[\"s2\"]}");
    REQUIRE(simcore_shi_coords('C', 2, "-4,-2,7,9", &out) == SIMCORE_OK);
    std::string c = take(out);
    CHECK(c.find("[\"e1-e2\",0]") != std::string::npos);
    CHECK(c.find("[\"e1+e2\",2]") != std::string::npos);
    CHECK(c.find("[\"2e1\",2]") != std::string::npos);
    CHECK(c.find("[\"2e2\",1]") != std::string::npos);
    CHECK(c.find("\"descents\":[\"s1\"]") != std::string::npos);

    REQUIRE(simcore_shi_alcoves('A', 3, 1, "minimal", "json", &out) == SIMCORE_OK);
    std::string alcoves = take(out);
    CHECK(alcoves.find("\"window\":[1,2,3]") != std::string::npos);
    CHECK(alcoves.find("\"minimal\":true") != std::string::npos);
    CHECK(simcore_shi_coords('B', 3, "1,2,3", &out) == SIMCORE_ERR_DOMAIN);
    CHECK(simcore_shi_coords('A', 3, "1,3,2", &out) == SIMCORE_ERR_DOMAIN);
}

TEST_CASE("verification endpoint") {
    char* out = nullptr;
    int ok = 0;
    REQUIRE(simcore_verify("skew", 3, -1, -1, &ok, &out) == SIMCORE_OK);
    std::string report = take(out);
    CHECK(ok == 1);
    CHECK(report.find("\"claim\": \"skew-catalan\"") != std::string::npos);
    CHECK(report.find("EXPERIMENTAL-verified") != std::string::npos);
    CHECK(simcore_verify("nonsense", -1, -1, -1, &ok, &out) == SIMCORE_ERR_DOMAIN);
    CHECK(simcore_verify("counts", 100, -1, -1, &ok, &out) == SIMCORE_ERR_LIMIT);
}
