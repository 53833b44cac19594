#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "knotq/enumerator.hpp"
#include "knotq/errors.hpp"
#include "knotq/links.hpp"
#include "knotq/presentation.hpp"

using knotq::CayleyTable;
using knotq::EnumerateOptions;
using knotq::EnumerationState;
using knotq::Letter;
using knotq::QuandlePresentation;
using knotq::Word;
using test_helpers::w;

TEST_CASE("figure-eight involutory quandle has five elements") {
  const auto p = knotq::parse_presentation("gens a b\nn 2\nrel a : b a b a = b\n");
  const CayleyTable t = knotq::enumerate(p);
  CHECK(t.size == 5);
  CHECK(t.components().size() == 1);
  CHECK(test_helpers::secondary_relations_hold(t));
  CHECK(test_helpers::actions_have_order_dividing_n(t));
}

TEST_CASE("one free generator is the one-element quandle") {
  const CayleyTable t =
      knotq::enumerate(QuandlePresentation({"a"}, {}, 2));
  CHECK(t.size == 1);
}

TEST_CASE("even two-bridge presentation splits into two components") {
  const CayleyTable t = knotq::enumerate(knotq::two_bridge(1, 8, 2));
  CHECK(t.size == 8);
  const auto comps = t.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 4);
}

TEST_CASE("divergent exponent hits the vertex cap") {
  const auto p = knotq::torus(2, 3, 6);
  CHECK_THROWS_AS(knotq::enumerate(p, 4000), knotq::CapExceeded);
  try {
    knotq::enumerate(p, 4000);
  } catch (const knotq::CapExceeded& e) {
    CHECK(e.count() > 4000);
  }
}

TEST_CASE("tracing a primary relation builds the intermediate path") {
  EnumerationState st(2, 1000);
  CHECK(st.created() == 2);
  st.trace(1, w("b a b a"), 2);
  st.collapse();
  CHECK(st.created() == 5);  // three interior vertices
  CHECK(st.live() == 5);
  // The chain 1 -b-> 3 -a-> 4 -b-> 5 -a-> 2, plus the seed loops.
  CHECK(st.neighbor(1, Letter{1, 1}) == 3);
  CHECK(st.neighbor(3, Letter{0, 1}) == 4);
  CHECK(st.neighbor(4, Letter{1, 1}) == 5);
  CHECK(st.neighbor(5, Letter{0, 1}) == 2);
  CHECK(st.neighbor(1, Letter{0, 1}) == 1);
  CHECK(st.neighbor(2, Letter{1, 1}) == 2);
  // Walking the same relation again adds nothing.
  st.trace(1, w("b a b a"), 2);
  st.collapse();
  CHECK(st.created() == 5);
}

TEST_CASE("tracing an involution closes the back edge without growth") {
  EnumerationState st(2, 1000);
  st.trace(1, w("a a"), 1);
  st.collapse();
  CHECK(st.created() == 2);  // the idempotence loop already closes it
  st.trace(1, w("b"), std::nullopt);
  st.collapse();
  CHECK(st.created() == 3);
  // Vertex 1 has only the forward b-edge; the involution installs the
  // back edge rather than growing the graph.
  st.trace(1, w("b b"), 1);
  st.collapse();
  CHECK(st.created() == 3);
  CHECK(st.neighbor(3, Letter{1, 1}) == 1);
  CHECK(st.neighbor(1, Letter{1, -1}) == 3);
}

TEST_CASE("collapse merges and cascades") {
  EnumerationState st(3, 1000);
  st.trace(1, w("b"), std::nullopt);    // vertex 4 = 1.b
  st.trace(1, w("c b"), std::nullopt);  // vertices 5 = 1.c, 6 = 5.b

  SUBCASE("merging edge-disjoint vertices just relabels") {
    st.enqueue_coincidence(4, 5);
    st.collapse();
    CHECK(st.live() == 5);
    CHECK(st.find(5) == 4);
    CHECK(st.neighbor(4, knotq::Letter{1, -1}) == 1);
    CHECK(st.neighbor(4, knotq::Letter{2, -1}) == 1);
  }

  SUBCASE("same label into a shared vertex identifies the sources") {
    // 1 --b--> 4 and 5 --b--> 6: merging the targets 4 and 6 leaves two
    // b-edges into the survivor, so 1 and 5 merge as well.
    st.enqueue_coincidence(4, 6);
    st.collapse();
    CHECK(st.find(6) == 4);
    CHECK(st.find(5) == 1);
    CHECK(st.live() == 4);
  }

  SUBCASE("shared labels cascade") {
    // 1 --b--> 4 and 5 --b--> 6, so merging 1 and 5 forces 4 = 6 too.
    st.enqueue_coincidence(1, 5);
    st.collapse();
    CHECK(st.find(5) == 1);
    CHECK(st.find(6) == 4);
    CHECK(st.live() == 4);
  }

  SUBCASE("empty queue is a no-op") {
    const int before = st.live();
    st.collapse();
    CHECK(st.live() == before);
  }
}

TEST_CASE("simplified and raw universal relations enumerate identically") {
  const std::vector<QuandlePresentation> cases = {
      knotq::two_bridge(3, 5, 2),
      knotq::two_bridge(1, 8, 2),
      knotq::torus(2, 3, 4),
      knotq::torus_with_axis(4),
  };
  for (const auto& p : cases) {
    EnumerateOptions raw;
    raw.simplify_universal = false;
    const CayleyTable a = knotq::enumerate(p);
    const CayleyTable b = knotq::enumerate(p, raw);
    CHECK(a.size == b.size);
    CHECK(a.action == b.action);
  }
}

TEST_CASE("secondary relation order does not change the result") {
  for (const auto& p : {knotq::two_bridge(1, 8, 2), knotq::torus_with_axis(5),
                        knotq::torus(3, 4, 2)}) {
    EnumerateOptions reversed;
    reversed.reverse_secondary_order = true;
    CHECK(knotq::enumerate(p).size == knotq::enumerate(p, reversed).size);
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto p = knotq::torus(2, 4, 3);
  const CayleyTable a = knotq::enumerate(p);
  const CayleyTable b = knotq::enumerate(p);
  CHECK(a.size == b.size);
  CHECK(a.action == b.action);
  CHECK(a.element_words == b.element_words);
}

TEST_CASE("invalid presentations are rejected") {
  QuandlePresentation bad({"a"}, {{0, Word{}, 2}}, 2);
  CHECK_THROWS_AS(knotq::enumerate(bad), knotq::InvalidPresentation);
}

TEST_CASE("dot export") {
  const CayleyTable three = knotq::enumerate(knotq::two_bridge(1, 3, 2));
  const std::string dot = knotq::to_dot(three);
  CHECK(dot.find("graph cayley") == 0);  // involutory, so undirected
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 3 + 2 + 2);
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);

  const CayleyTable one =
      knotq::enumerate(QuandlePresentation({"a"}, {}, 2));
  const std::string tiny = knotq::to_dot(one);
  CHECK(tiny.find("--") == std::string::npos);  // loops suppressed
  CHECK(knotq::to_dot(one, {.include_idempotence_loops = true}).find("--") !=
        std::string::npos);

  // Two components with eight elements altogether.
  const CayleyTable axis = knotq::enumerate(knotq::torus_with_axis(3));
  CHECK(axis.size == 8);
  CHECK(axis.components().size() == 2);
  const std::string axis_dot = knotq::to_dot(axis);
  CHECK(std::count(axis_dot.begin(), axis_dot.end(), 'n') >= 8);
}

TEST_CASE("json export") {
  const CayleyTable t = knotq::enumerate(knotq::two_bridge(3, 5, 2));
  const nlohmann::json j = knotq::cayley_to_json(t);
  CHECK(j["elements"] == 5);
  CHECK(j["generators"] == nlohmann::json({"a", "b"}));
  CHECK(j["actions"]["a"].size() == 5);
  for (int image : j["actions"]["b"]) {
    CHECK(image >= 1);
    CHECK(image <= 5);
  }
  CHECK(j["words"][0] == "a");
  CHECK(j["presentation"]["n"] == 2);
}
