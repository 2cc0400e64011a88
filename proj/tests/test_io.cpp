#include <doctest.h>

#include <json.hpp>

#include "qce/families.hpp"
#include "qce/io.hpp"

using namespace qce;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("explicit matrix state documents") {
    json doc;
    doc["dA"] = 1;
    doc["dB"] = 2;
    doc["matrix"] = json::array({json::array({0.5, 0.0}), json::array({0.0, 0.0}),
                                 json::array({0.0, 0.0}), json::array({0.5, 0.0})});
    doc["dA"] = 2;
    doc["dB"] = 1;
    const BipartiteState state = parse_state(doc);
    CHECK(state.dim_a() == 2);
    CHECK(state.matrix()(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("family state documents") {
    json doc;
    doc["family"] = "aligned";
    doc["params"] = {{"theta", 0.5}};
    const BipartiteState state = parse_state(doc);
    CHECK((state.matrix() - aligned_mixture(0.5).matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("unknown fields are rejected") {
    json doc;
    doc["family"] = "aligned";
    doc["params"] = {{"theta", 0.5}};
    doc["extra"] = 1;
    CHECK_THROWS_AS(parse_state(doc), domain_error);

    json params_typo;
    params_typo["family"] = "x_state";
    params_typo["params"] = {{"ra", 0.0}, {"rb", 0.0}, {"jx", 0.1}, {"jy", 0.0}, {"jzz", 0.0}};
    CHECK_THROWS_AS(parse_state(params_typo), domain_error);
}

TEST_CASE("invalid matrices surface the violated invariant") {
    json doc;
    doc["dA"] = 2;
    doc["dB"] = 1;
    doc["matrix"] = json::array({json::array({0.7, 0.0}), json::array({0.0, 0.0}),
                                 json::array({0.0, 0.0}), json::array({0.7, 0.0})});
    CHECK_THROWS_AS(parse_state(doc), invalid_state_error);  // trace 1.4
}

TEST_CASE("measurement documents") {
    SUBCASE("direction form") {
        json doc;
        doc["type"] = "direction";
        doc["k"] = {0.0, 0.0, 1.0};
        const Rank1Povm povm = parse_measurement(doc);
        CHECK(povm.size() == 2);
        CHECK(povm.is_projective());
    }
    SUBCASE("povm form") {
        json doc;
        doc["type"] = "povm";
        const double s = 1.0 / std::sqrt(2.0);
        doc["elements"] = json::array(
            {json{{"r", 1.0}, {"ket", json::array({json::array({1.0, 0.0}),
                                                   json::array({0.0, 0.0})})}},
             json{{"r", 1.0}, {"ket", json::array({json::array({0.0, 0.0}),
                                                   json::array({1.0, 0.0})})}}});
        (void)s;
        const Rank1Povm povm = parse_measurement(doc);
        CHECK(povm.size() == 2);
    }
    SUBCASE("bad type is rejected") {
        json doc;
        doc["type"] = "weak";
        CHECK_THROWS_AS(parse_measurement(doc), domain_error);
    }
}

TEST_CASE("CSV output format") {
    CsvWriter csv({"a", "b"}, 42);
    csv.add_row({format_number(1.0 / 3.0), format_number(0.25)});
    csv.add_comment("note=1");
    const std::string text = csv.str();
    CHECK(text == "# seed=42\na,b\n0.333333333333,0.25\n# note=1\n");

    // 12 significant digits, byte-identical on repeat.
    CHECK(format_number(M_PI) == "3.14159265359");
    CsvWriter again({"a", "b"}, 42);
    again.add_row({format_number(1.0 / 3.0), format_number(0.25)});
    again.add_comment("note=1");
    CHECK(again.str() == text);
}

TEST_CASE("row width mismatches are rejected") {
    CsvWriter csv({"a", "b"}, 1);
    CHECK_THROWS_AS(csv.add_row({"1"}), domain_error);
}

}  // TEST_SUITE
