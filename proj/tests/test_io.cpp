// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "graphcx/brackets.hpp"
#include "graphcx/enumerate.hpp"
#include "graphcx/io.hpp"
#include "helpers.hpp"

using namespace graphcx;
using namespace graphcx::testbed;

TEST_CASE("gcg files round-trip bit for bit") {
    for (Operad op : {Operad::Comm, Operad::Assoc})
        for (const auto& cg : enumerate_basis(op, 2, 2).elements) {
            OrientedGraph og = with_default_orientation(cg.graph);
            std::string text = gcg_text(og);
            CHECK(text == gcg_text(og));   // byte-stable serialization
            OrientedGraph back = gcg_from_json(ojson::parse(text));
            CHECK(gcg_text(back) == text);
            CHECK(canonicalize(back).canon.encoding == cg.encoding);
            CHECK(canonicalize(back).coeff == 1);
        }
}

TEST_CASE("gcg reader validates") {
    OrientedGraph og = with_default_orientation(theta());
    ojson j = gcg_json(og);
    j["version"] = 99;
    CHECK_THROWS_AS(gcg_from_json(j), std::invalid_argument);
    j = gcg_json(og);
    j["operad"] = "lie";
    CHECK_THROWS_AS(gcg_from_json(j), std::invalid_argument);
    j = gcg_json(og);
    j["pairing"][0][1] = 1;   // fixes a half-edge under the involution
    CHECK_THROWS_AS(gcg_from_json(j), std::invalid_argument);
}

TEST_CASE("chain files preserve coefficients and graphs") {
    CanonicalGraph th = enumerate_basis(Operad::Comm, 2, 2).elements.front();
    CanonicalGraph w3{"C3:1-2,1-2,1-3,1-3,2-3", false, decode_encoding("C3:1-2,1-2,1-3,1-3,2-3")};
    Chain c;
    c.add(th, make_rat(-3, 2));
    c.add(w3, make_rat(7, 1));
    ojson j = chain_json(c, Operad::Comm);
    Operad op;
    Chain back = chain_from_json(j, &op);
    CHECK(op == Operad::Comm);
    CHECK(back == c);
    CHECK(chain_json(back, op).dump() == j.dump());
}

TEST_CASE("chain files reject non-canonical or killed encodings") {
    auto file = [](const std::string& enc) {
        ojson j;
        j["version"] = 1;
        j["kind"] = "chain";
        j["operad"] = "comm";
        j["terms"] = ojson::array({{{"encoding", enc}, {"numerator", "1"}, {"denominator", "1"}}});
        return j;
    };
    CHECK_THROWS_AS(chain_from_json(file("C1:1-1,1-1")), std::invalid_argument);      // killed class
    CHECK_THROWS_AS(chain_from_json(file("C2:2-1,2-1,2-1")), std::invalid_argument);  // not canonical
    CHECK_NOTHROW(chain_from_json(file("C2:1-2,1-2,1-2")));
}

TEST_CASE("tensor files preserve monomials") {
    CanonicalGraph th = enumerate_basis(Operad::Comm, 2, 2).elements.front();
    SymTensor t;
    t.add({th, th}, make_rat(1, 2));
    ojson j = tensor_json(t, Operad::Comm);
    SymTensor back = tensor_from_json(j);
    CHECK(back == t);
}

TEST_CASE("homology exports are stable across recomputation") {
    HomologyTable a = homology_table(Operad::Comm, 2);
    HomologyTable b = homology_table(Operad::Comm, 2);
    CHECK(homology_csv(a) == homology_csv(b));
    CHECK(homology_json(a).dump(2) == homology_json(b).dump(2));
    CHECK(homology_csv(a).rfind("operad,loops,vertices,dim,boundary_rank,homology_rank\n", 0) == 0);
}

TEST_CASE("gcg files written to disk read back identically") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "graphcx_io_test.gcg";
    OrientedGraph og = with_default_orientation(dumbbell(Operad::Assoc));
    write_gcg(tmp.string(), og);
    OrientedGraph back = read_gcg(tmp.string());
    CHECK(gcg_text(back) == gcg_text(og));
    fs::remove(tmp);
    CHECK_THROWS_AS(read_gcg(tmp.string()), std::runtime_error);
}
