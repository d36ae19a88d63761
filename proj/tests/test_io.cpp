#include <doctest.h>

#include <json.hpp>

#include "qeuler/io.hpp"

using namespace qeuler;

TEST_CASE("rational literal round trips") {
    for (const char* text : {"0", "1", "-1", "7/4", "-22/7"}) {
        Rat r = rat_parse(text);
        CHECK(rat_parse(rat_str(r)) == r);
    }
    CHECK(rat_parse("4/8") == Rat(1, 2));
    CHECK_THROWS_AS(rat_parse(""), Error);
    CHECK_THROWS_AS(rat_parse("x"), Error);
    CHECK_THROWS_AS(rat_parse("1.5"), Error);
}

TEST_CASE("range parsing") {
    CHECK(parse_range("2") == std::vector<long long>{2});
    CHECK(parse_range("0..4") == std::vector<long long>({0, 1, 2, 3, 4}));
    CHECK(parse_range("1,3,5") == std::vector<long long>({1, 3, 5}));
    CHECK_THROWS_AS(parse_range("4..1"), Error);
    CHECK_THROWS_AS(parse_range("a..b"), Error);
    CHECK_THROWS_AS(parse_range(""), Error);
    CHECK_THROWS_AS(parse_range("0..9000000"), Error);
}

TEST_CASE("list and complex parsing") {
    CHECK(parse_int_list("1,2,3") == std::vector<long long>({1, 2, 3}));
    CHECK(parse_rat_list("1/2,3") == std::vector<Rat>({Rat(1, 2), Rat(3)}));
    CHECK(parse_complex("2") == std::complex<double>(2.0, 0.0));
    CHECK(parse_complex("1.5,-2") == std::complex<double>(1.5, -2.0));
    CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
    CHECK_THROWS_AS(parse_complex("zz"), Error);
}

TEST_CASE("result records serialize deterministically") {
    ResultRecord exact;
    exact.family = "plain";
    exact.n = 2;
    exact.x = "1/1";
    exact.q = "1/2";
    exact.method = "closed_form";
    exact.exact = true;
    exact.value = "-2/3";
    std::string js = to_json(exact);
    // Canonical nlohmann output: keys sorted, no incidental whitespace
    // drift, so a parse/re-dump is the identity.
    CHECK(nlohmann::json::parse(js).dump() == js);
    nlohmann::json parsed = nlohmann::json::parse(js);
    CHECK(parsed["family"] == "plain");
    CHECK(parsed["value"] == "-2/3");
    CHECK(parsed["exact"] == true);
    CHECK(!parsed.contains("re"));

    ResultRecord fl;
    fl.family = "hr[h=2,r=1]";
    fl.n = 0;
    fl.x = "0/1";
    fl.q = "1/2";
    fl.method = "series_direct";
    fl.exact = false;
    fl.re = 4.0 / 3.0;
    fl.im = 0.0;
    fl.error_bound = 1e-12;
    std::string fj = to_json(fl);
    nlohmann::json fparsed = nlohmann::json::parse(fj);
    CHECK(fparsed["re"].get<double>() == 4.0 / 3.0);
    CHECK(!fparsed.contains("value"));

    CHECK(csv_header() == "family,n,x,q,method,exact,value,re,im,error_bound");
    std::string line = to_csv(exact);
    CHECK(line.substr(0, 8) == "\"plain\",");
    CHECK(line.find("-2/3") != std::string::npos);
    std::string fline = to_csv(fl);
    CHECK(fline.find("series_direct") != std::string::npos);
}

TEST_CASE("shortest round-trip doubles") {
    for (double v : {0.0, 1.0, -1.5, 4.0 / 3.0, 1e-12, 6.02e23}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
