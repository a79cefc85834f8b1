#include <doctest.h>

#include <string>

#include "graphon/densities.hpp"
#include "graphon/io.hpp"
#include "graphon/named.hpp"
#include "graphon/spectral.hpp"

using namespace graphon;

TEST_CASE("graphon JSON round trip is exact") {
    auto g = bipodal(0.2, 0.4, 0.25, 0.6);
    std::string bytes = write_graphon(g);
    auto back = read_graphon(bytes);
    REQUIRE(back.pod_count() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(back.pods[i] == g.pods[i]);
        for (int j = 0; j < 2; ++j) CHECK(back.values(i, j) == g.values(i, j));
    }
    CHECK(write_graphon(back) == bytes);  // write . read . write is idempotent

    // 17 significant digits survive values without short decimal forms
    auto awkward = constant_graphon(0.1 + 0.2);
    auto round = read_graphon(write_graphon(awkward));
    CHECK(round.values(0, 0) == awkward.values(0, 0));
}

TEST_CASE("golden document for the symmetric bipodal graphon") {
    std::string expected =
        "{\"c\":[0.5,0.5],\"format_version\":1,"
        "\"p\":[[0.29999999999999999,0.69999999999999996],"
        "[0.69999999999999996,0.29999999999999999]]}\n";
    CHECK(write_graphon(symmetric_bipodal(0.5, 0.2)) == expected);
}

TEST_CASE("reader rejects asymmetry naming the indices") {
    std::string doc =
        "{\"c\":[0.5,0.5],\"p\":[[0.3,0.700001],[0.7,0.3]]}";
    try {
        read_graphon(doc);
        FAIL("expected rejection");
    } catch (const validation_error& ex) {
        std::string msg = ex.what();
        CHECK(msg.find("p[0][1]") != std::string::npos);
        CHECK(msg.find("p[1][0]") != std::string::npos);
    }
    // asymmetry within 1e-12 is symmetrized instead
    std::string ok =
        "{\"c\":[0.5,0.5],\"p\":[[0.3,0.7000000000000001],[0.7,0.3]]}";
    auto g = read_graphon(ok);
    CHECK(g.values(0, 1) == g.values(1, 0));
}

TEST_CASE("reader rejects bad masses and ranges") {
    CHECK_THROWS_AS(read_graphon("{\"c\":[0.5,0.499],\"p\":[[0.3,0.7],[0.7,0.3]]}"),
                    validation_error);
    CHECK_THROWS_AS(read_graphon("{\"c\":[0.5,0.5],\"p\":[[1.3,0.7],[0.7,0.3]]}"),
                    validation_error);
    CHECK_THROWS_AS(read_graphon("not json"), validation_error);
    CHECK_THROWS_AS(read_graphon("{\"c\":[1.0]}"), validation_error);
}

TEST_CASE("strict mode rejects unknown fields, lenient preserves them") {
    std::string doc =
        "{\"c\":[1.0],\"p\":[[0.5]],\"custom\":42}";
    CHECK_THROWS_AS(read_graphon(doc, true), validation_error);
    auto parsed = read_graphon_document(doc, false);
    CHECK(parsed.extra_fields.find("custom") != std::string::npos);
    std::string out = write_graphon_document(parsed);
    CHECK(out.find("\"custom\":42") != std::string::npos);
}

TEST_CASE("writer refuses non-finite values") {
    MultipodalGraphon g = constant_graphon(0.5);
    OptimizerResult res;
    res.graphon = g;
    res.entropy = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(write_result(res), validation_error);
}

TEST_CASE("report serialization carries spectral and moment blocks") {
    auto g = symmetric_bipodal(0.5, 0.2);
    auto rep = density_report(g);
    auto spec = spectrum(g, rep.edge);
    std::vector<double> moments{central_moment(g, 1, 0.5), central_moment(g, 2, 0.5)};
    std::string out = write_report(rep, &spec, &moments, 0.5);
    CHECK(out.find("\"spectral\"") != std::string::npos);
    CHECK(out.find("\"moments\"") != std::string::npos);
    CHECK(out.find("\"eigenvalues\"") != std::string::npos);
    // canonical output is byte-stable
    CHECK(out == write_report(rep, &spec, &moments, 0.5));
}
