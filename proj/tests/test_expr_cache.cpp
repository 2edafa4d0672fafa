#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "steenrod/adem_cache.hpp"
#include "steenrod/expr.hpp"

using namespace steenrod;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/steenrod_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("element parsing") {
    CHECK(parse_element("Sq[2]*Sq[2]").value == Element{4, {{3, 1}}});
    CHECK(parse_element("Sq[1]*Sq[1]").value.is_zero());
    CHECK(parse_element("Sq[7,3,1]").value == Element::basis({7, 3, 1}));
    CHECK(parse_element("Sq[3] + Sq[2,1]").value == Element{3, {{3}, {2, 1}}});
    CHECK(parse_element("1").value == Element::unit());
    CHECK(parse_element("0").value.is_zero());
    CHECK(parse_element("0 + Sq[4]").value == Element::sq(4));
    CHECK(parse_element("  Sq[ 5 , 2 ] ").value == Element::basis({5, 2}));
    ParsedElement milnor = parse_element("M[0,1]");
    CHECK(milnor.saw_milnor);
    CHECK(milnor.value == Element{3, {{3}, {2, 1}}});
    CHECK(parse_element("M[2] + Sq[2]").value.is_zero());  // Sq(2) = Sq^2
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_element("Sq[2"), ParseError);
    CHECK_THROWS_AS(parse_element("Sq[2] Sq[3]"), ParseError);
    CHECK_THROWS_AS(parse_element("Sq[0]"), ParseError);
    CHECK_THROWS_AS(parse_element("Sq[2] + Sq[3]"), ParseError);  // inhomogeneous
    CHECK_THROWS_AS(parse_element("Sq[]*"), ParseError);
    try {
        parse_element("Sq[2] + Sq[3]");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 1 + static_cast<int>(rng() % 18);
        Seq w;
        while (d > 0) {
            int e = 1 + static_cast<int>(rng() % d);
            w.push_back(e);
            d -= e;
        }
        Element x = normalize(w);
        Element back = parse_element(to_string(x)).value;
        if (x.is_zero())
            CHECK(back.is_zero());  // "0" re-parses without a degree
        else
            CHECK(back == x);
    }
    CHECK(to_string(Element::unit()) == "1");
    CHECK(to_string(Element::zero(3)) == "0");
    CHECK(to_string(Element{3, {{3}, {2, 1}}}) == "Sq[3] + Sq[2,1]");
    CHECK(to_string(MilnorElement{3, {{0, 1}}}) == "M[0,1]");
    CHECK(to_string(MilnorElement::unit()) == "1");
}

TEST_CASE("sw polynomial parsing and printing") {
    SWPolynomial p = parse_sw_polynomial("w[4]*w[2]^2 + w[8]");
    CHECK(p.degree == 8);
    CHECK(p.terms.size() == 2);
    CHECK(to_string(p) == "w[8] + w[4]*w[2]^2");
    CHECK(parse_sw_polynomial(to_string(p)) == p);
    CHECK(parse_sw_polynomial("1") == SWPolynomial::one());
    CHECK(parse_sw_polynomial("0").is_zero());
    CHECK_THROWS_AS(parse_sw_polynomial("w[0]"), ParseError);
    CHECK_THROWS_AS(parse_sw_polynomial("w[1]", SWModel::bso), ParseError);
    CHECK_THROWS_AS(parse_sw_polynomial("w[2] + w[3]"), ParseError);
}

TEST_CASE("adem cache round-trip") {
    TempFile file("cache_roundtrip");
    std::string error;
    REQUIRE(save_adem_cache(file.path, 20, &error));
    AdemCacheLoad load = load_adem_cache(file.path);
    CHECK(load.loaded);
    CHECK(load.entries > 0);
    // Seeded expansions match recomputed ones.
    Element direct = normalize({3, 5, 2});
    adem_install_seed({});
    CHECK(normalize({3, 5, 2}) == direct);
}

TEST_CASE("corrupt or mismatched caches are ignored with a warning") {
    TempFile file("cache_corrupt");
    {
        std::ofstream out(file.path);
        out << "ADEMCACHE 999\n";
    }
    AdemCacheLoad versioned = load_adem_cache(file.path);
    CHECK_FALSE(versioned.loaded);
    CHECK_FALSE(versioned.warning.empty());
    {
        std::ofstream out(file.path);
        out << "ADEMCACHE 1\n";
        out << "4 2 : 6 0\n";  // admissible pair pretending to be a relation
    }
    AdemCacheLoad corrupt = load_adem_cache(file.path);
    CHECK_FALSE(corrupt.loaded);
    {
        std::ofstream out(file.path);
        out << "ADEMCACHE 1\n";
        out << "1 2 : 2 1\n";  // wrong degree on the right-hand side
    }
    CHECK_FALSE(load_adem_cache(file.path).loaded);
    CHECK_FALSE(load_adem_cache("/tmp/steenrod_no_such_cache_file").loaded);
    adem_install_seed({});
}

TEST_CASE("cache files are well-formed and sorted") {
    TempFile file("cache_format");
    std::string error;
    REQUIRE(save_adem_cache(file.path, 12, &error));
    std::ifstream in(file.path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "ADEMCACHE 1");
    std::pair<int, int> prev{0, 0};
    while (std::getline(in, line)) {
        std::istringstream row(line);
        int a = 0, b = 0;
        char colon = 0;
        REQUIRE((row >> a >> b >> colon));
        CHECK(colon == ':');
        CHECK(a < 2 * b);
        CHECK(a + b <= 12);
        CHECK(prev < std::make_pair(a, b));
        prev = {a, b};
    }
}
