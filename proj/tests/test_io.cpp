#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include <cyctrace/io.hpp>
#include <cyctrace/suite.hpp>

using namespace cyctrace;
using nlohmann::json;

TEST_CASE("complex JSON round trip") {
    for (auto make : {simp::make_circle, simp::make_sphere2}) {
        auto X = make(4);
        auto j = io::complex_to_json(X);
        auto Y = io::complex_from_json(j);
        CHECK(Y.trunc == X.trunc);
        CHECK(Y.counts == X.counts);
        CHECK(Y.faces == X.faces);
        CHECK(Y.degens == X.degens);
        CHECK(Y.cyclic == X.cyclic);
        CHECK(simp::validate(Y).ok());
    }
}

TEST_CASE("kind is required and checked") {
    json j = {{"truncation", 0}};
    CHECK_THROWS_AS(io::kind_of(j), SchemaError);
    json wrong = io::complex_to_json(simp::make_point(1));
    wrong["kind"] = "category";
    CHECK_THROWS_AS(io::complex_from_json(wrong), SchemaError);
}

TEST_CASE("malformed complex documents are schema errors") {
    auto j = io::complex_to_json(simp::make_circle(2));
    j["counts"] = {1, 2};  // wrong length
    CHECK_THROWS_AS(io::complex_from_json(j), SchemaError);
    auto j2 = io::complex_to_json(simp::make_circle(2));
    j2["faces"][0][2][0] = 99;  // out of range target
    CHECK_THROWS_AS(io::complex_from_json(j2), SchemaError);
}

TEST_CASE("category and monoid JSON round trips") {
    auto C = bar::monoid_category(bar::symmetric_s3());
    auto back = io::category_from_json(io::category_to_json(C));
    CHECK(back.n_obj() == C.n_obj());
    CHECK(back.n_mor() == C.n_mor());
    CHECK(back.comp == C.comp);
    CHECK(cat::validate_category(back).ok());

    auto M = bar::idempotent2();
    auto m2 = io::monoid_from_json(io::monoid_to_json(M));
    CHECK(m2.table == M.table);
    CHECK_THROWS_AS(io::builtin_monoid("nope"), SchemaError);
    CHECK(io::builtin_monoid("z5").size() == 5);
    CHECK(io::builtin_monoid("s3").size() == 6);
}

TEST_CASE("witt vector JSON round trip across rings") {
    io::with_ring("z:0", [](auto ring) {
        auto S = witt::divisor_trunc(6);
        witt::WittVec<decltype(ring)> x{S, {ring.from_int(3), ring.from_int(-1),
                                            ring.from_int(0), ring.from_int(7)}};
        auto j = io::witt_to_json(ring, x);
        auto y = io::witt_from_json(ring, j);
        CHECK(witt::witt_eq(ring, x, y));
    });
    io::with_ring("q", [](auto ring) {
        auto S = witt::divisor_trunc(2);
        witt::WittVec<decltype(ring)> x{S, {ring.parse("1/3"), ring.parse("-2/5")}};
        auto y = io::witt_from_json(ring, io::witt_to_json(ring, x));
        CHECK(witt::witt_eq(ring, x, y));
    });
    CHECK_THROWS_AS(io::with_ring("f7", [](auto) {}), SchemaError);
}

TEST_CASE("parse errors carry a byte offset") {
    const char* path = "io_test_corrupt.json";
    {
        std::ofstream f(path);
        f << "{\"kind\": \"witt\", ";
    }
    try {
        io::load_json(path);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("byte offset") != std::string::npos);
    }
    std::remove(path);
}

TEST_CASE("inspect summarizes artifacts") {
    auto s = io::inspect(io::complex_to_json(simp::make_circle(3)));
    CHECK(s.find("simplicial") != std::string::npos);
    CHECK(s.find("cyclic") != std::string::npos);
    auto m = io::inspect(io::monoid_to_json(bar::symmetric_s3()));
    CHECK(m.find("monoid") != std::string::npos);
    json unknown = {{"kind", "mystery"}};
    CHECK_THROWS_AS(io::inspect(unknown), SchemaError);
}

TEST_CASE("report JSON and determinism comparator") {
    SuiteReport rep;
    rep.version = suite::kVersion;
    rep.seed = 5;
    CheckResult demo("demo", true);
    demo.seed = 5;
    demo.ms = 12.5;
    demo.notes = {"ok: something"};
    rep.checks.push_back(demo);
    auto j = io::report_to_json(rep);
    CHECK(io::kind_of(j) == "report");
    auto j2 = j;
    j2["checks"][0]["ms"] = 99.0;
    CHECK(io::reports_equivalent(j, j2));
    j2["checks"][0]["pass"] = false;
    CHECK_FALSE(io::reports_equivalent(j, j2));
}

TEST_CASE("suite runner rejects unknown checks") {
    CHECK_THROWS_AS(suite::run_suite({"no.such.check"}, 1, suite::Bounds{}, 1),
                    std::invalid_argument);
}

TEST_CASE("small suite subset runs and reports deterministically") {
    suite::Bounds b;
    b.index_bound = 8;
    auto r1 = suite::run_suite({"indexcat.relations", "coherence.cubes"}, 42, b, 2);
    auto r2 = suite::run_suite({"indexcat.relations", "coherence.cubes"}, 42, b, 1);
    CHECK(r1.all_pass());
    CHECK(io::reports_equivalent(io::report_to_json(r1), io::report_to_json(r2)));
}
