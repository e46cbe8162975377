#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filtcat/error.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/poset.hpp"

using namespace filtcat;

static PosetPtr chain3() {
    return IndexPoset::make({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
}

TEST_CASE("chain basics") {
    PosetPtr p = chain3();
    CHECK(p->size() == 3);
    CHECK(p->name(p->top()) == "2");
    CHECK(p->leq(0, 2));
    CHECK_FALSE(p->leq(2, 0));
    CHECK(p->is_chain());
    CHECK(p->covers().size() == 2);
    CHECK(p->strict_pairs().size() == 3);
}

TEST_CASE("diamond") {
    PosetPtr p = IndexPoset::make({"bot", "x", "y", "t"},
                                  {{"bot", "x"}, {"bot", "y"}, {"x", "t"}, {"y", "t"}});
    CHECK(p->name(p->top()) == "t");
    CHECK_FALSE(p->leq(p->index("x"), p->index("y")));
    CHECK_FALSE(p->is_chain());
}

TEST_CASE("directedness is required") {
    CHECK_THROWS_AS(IndexPoset::make({"a", "b"}, {}), NotDirected);
    // a fork ends in two maximal elements
    CHECK_THROWS_AS(IndexPoset::make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}), NotDirected);
}

TEST_CASE("cycles are rejected by make, collapsed by reduce_preorder") {
    CHECK_THROWS_AS(IndexPoset::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}), NotAntisymmetric);
    ReducedPreorder r = reduce_preorder({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(r.poset->size() == 1);
    CHECK(r.class_map.at("a") == r.class_map.at("b"));
}

TEST_CASE("reduce_preorder keeps posets and is idempotent") {
    ReducedPreorder r = reduce_preorder({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    CHECK(r.poset->elements() == chain3()->elements());
    CHECK(r.poset->covers() == chain3()->covers());
    ReducedPreorder again =
        reduce_preorder(r.poset->elements(), {{"0", "1"}, {"1", "2"}});
    CHECK(again.poset->elements() == r.poset->elements());
    for (auto& [k, v] : again.class_map) CHECK(k == v);
}

TEST_CASE("everything sits below top") {
    Rng rng(2);
    for (int t = 0; t < 25; ++t) {
        PosetPtr p = gen_poset(rng, 7);
        for (size_t i = 0; i < p->size(); ++i) CHECK(p->leq(i, p->top()));
    }
}

TEST_CASE("singleton") {
    PosetPtr p = IndexPoset::make({"pt"}, {});
    CHECK(p->size() == 1);
    CHECK(p->name(p->top()) == "pt");
}

TEST_CASE("numeric ids sort numerically") {
    CHECK(natural_less("2", "10"));
    CHECK_FALSE(natural_less("10", "2"));
    PosetPtr p = IndexPoset::make({"10", "2"}, {{"2", "10"}});
    CHECK(p->name(0) == "2");
}

TEST_CASE("saturating monoid") {
    IndexMonoid m(2);
    CHECK(m.add(1, 1) == 2);
    CHECK(m.add(2, 2) == 2);
    for (size_t l = 0; l <= 2; ++l) CHECK(m.add(0, l) == l);
    CHECK(m.base()->elements() == std::vector<std::string>{"0", "1", "2"});
    m.validate();

    IndexMonoid m3(3);
    CHECK(m3.add(m3.add(2, 2), 3) == m3.add(2, m3.add(2, 3)));
    m3.validate();
    for (size_t a = 0; a <= 3; ++a)
        for (size_t b = 0; b <= 3; ++b) {
            CHECK(m3.add(a, b) == (a + b <= 3 ? a + b : 3));
            CHECK(m3.plain_in_range(a, b) == (a + b <= 3));
        }
}

TEST_CASE("one point monoid") {
    IndexMonoid m(0);
    CHECK(m.add(0, 0) == 0);
    CHECK(m.base()->size() == 1);
    m.validate();
}
