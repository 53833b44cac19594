#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <numeric>

#include "helpers.hpp"
#include "knotq/enumerator.hpp"
#include "knotq/errors.hpp"
#include "knotq/links.hpp"
#include "knotq/quandle.hpp"

using knotq::BraidWord;
using knotq::QuandlePresentation;
using knotq::StrandOrientation;
using test_helpers::w;

namespace {

int enumerate_size(const QuandlePresentation& p) {
  return knotq::enumerate(p).size;
}

}  // namespace

TEST_CASE("two-bridge presentations") {
  const auto fig8 = knotq::two_bridge(3, 5, 2);
  REQUIRE(fig8.relations().size() == 1);
  CHECK(fig8.relations()[0] == knotq::PrimaryRelation{0, w("b a b a"), 1});

  const auto hopf = knotq::two_bridge(1, 2, 2);
  REQUIRE(hopf.relations().size() == 2);
  CHECK(hopf.relations()[0] == knotq::PrimaryRelation{0, w("b"), 0});
  CHECK(hopf.relations()[1] == knotq::PrimaryRelation{1, w("a"), 1});

  const auto four = knotq::two_bridge(1, 4, 2);
  CHECK(four.relations()[0] == knotq::PrimaryRelation{0, w("b a b"), 0});
  CHECK(four.relations()[1] == knotq::PrimaryRelation{1, w("a b a"), 1});
  CHECK(enumerate_size(four) == 4);

  CHECK_THROWS_AS(knotq::two_bridge(2, 4, 2), knotq::ParseError);
  CHECK_THROWS_AS(knotq::two_bridge(5, 3, 2), knotq::ParseError);
  CHECK_THROWS_AS(knotq::two_bridge(1, 3, 1), knotq::ParseError);
}

TEST_CASE("braid components") {
  BraidWord sigma1_cubed{2, {{1, 1}, {1, 1}, {1, 1}}};
  CHECK(knotq::component_count(sigma1_cubed) == 1);

  BraidWord sigma1_squared{2, {{1, 1}, {1, 1}}};
  CHECK(knotq::component_count(sigma1_squared) == 2);
  CHECK(knotq::strand_components(sigma1_squared) == std::vector<int>{0, 1});

  BraidWord torus33{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}};
  CHECK(knotq::component_count(torus33) == 3);

  CHECK_THROWS_AS(knotq::component_count(BraidWord{2, {{5, 1}}}),
                  knotq::ParseError);
}

TEST_CASE("braid closures enumerate to the expected sizes") {
  BraidWord hopf{2, {{1, 1}, {1, 1}}};
  CHECK(enumerate_size(knotq::braid_closure(hopf, 2)) == 2);

  BraidWord trefoil{2, {{1, 1}, {1, 1}, {1, 1}}};
  CHECK(enumerate_size(knotq::braid_closure(trefoil, 3)) == 4);

  BraidWord torus33{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}};
  CHECK(enumerate_size(knotq::braid_closure(torus33, 2)) == 6);

  CHECK_THROWS_AS(
      knotq::braid_closure(
          trefoil, std::vector<StrandOrientation>(2, StrandOrientation::forward),
          2),
      knotq::ParseError);
}

TEST_CASE("torus builder sizes") {
  CHECK(enumerate_size(knotq::torus(2, 4, 3)) == 8);
  CHECK(enumerate_size(knotq::torus(
            2, 4, {StrandOrientation::forward, StrandOrientation::reversed},
            3)) == 8);
  CHECK(enumerate_size(knotq::torus(3, 5, 2)) == 30);
  CHECK_THROWS_AS(knotq::torus(4, 3, 2), knotq::ParseError);
}

TEST_CASE("torus with axis presentations and sizes") {
  const auto q3 = knotq::torus_with_axis(3);
  REQUIRE(q3.relations().size() == 3);
  CHECK(q3.relations()[0] == knotq::PrimaryRelation{2, w("a b"), 2});
  CHECK(q3.relations()[1] == knotq::PrimaryRelation{0, w("b a b c"), 1});
  CHECK(q3.relations()[2] == knotq::PrimaryRelation{1, w("a b c"), 0});
  CHECK(enumerate_size(q3) == 8);

  CHECK(enumerate_size(knotq::torus_with_axis(5)) == 12);

  const auto q4 = knotq::torus_with_axis(4);
  CHECK(q4.relations()[1] == knotq::PrimaryRelation{0, w("b a b c"), 0});
  CHECK(q4.relations()[2] == knotq::PrimaryRelation{1, w("a b a b c"), 1});
  CHECK(enumerate_size(q4) == 10);

  CHECK_THROWS_AS(knotq::torus_with_axis(1), knotq::ParseError);
}

TEST_CASE("braid closure with axis") {
  BraidWord trefoil{2, {{1, 1}, {1, 1}, {1, 1}}};
  const auto from_braid =
      knotq::from_cayley(knotq::enumerate(knotq::braid_closure_with_axis(trefoil, 2)));
  const auto from_family =
      knotq::from_cayley(knotq::enumerate(knotq::torus_with_axis(3)));
  auto witness = knotq::find_isomorphism(from_braid, from_family);
  REQUIRE(witness.has_value());
  CHECK(test_helpers::witness_is_isomorphism(from_braid, from_family,
                                             *witness));

  BraidWord trefoil3{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}};
  CHECK(enumerate_size(knotq::braid_closure_with_axis(trefoil3, 2)) == 18);

  BraidWord hopf{2, {{1, 1}, {1, 1}}};
  CHECK(enumerate_size(knotq::braid_closure_with_axis(hopf, 2)) == 6);
}

TEST_CASE("named links") {
  const auto unknot = knotq::named_link("unknot");
  CHECK_FALSE(unknot.exponent_n().has_value());
  CHECK(enumerate_size(unknot) == 1);

  const auto hopf = knotq::named_link("hopf");
  CHECK_FALSE(hopf.exponent_n().has_value());
  CHECK(enumerate_size(hopf) == 2);

  BraidWord trefoil3{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}};
  CHECK(knotq::named_link("trefoil-axis-b") ==
        knotq::braid_closure_with_axis(trefoil3, 2));

  CHECK_THROWS_AS(knotq::named_link("granny"), knotq::ParseError);
}

TEST_CASE("involutory quandles of two-bridge links have order q") {
  for (int q = 2; q <= 15; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto t = knotq::enumerate(knotq::two_bridge(p, q, 2));
      CHECK(t.size == q);
      CHECK(t.components().size() == (q % 2 == 1 ? 1u : 2u));
    }
  }
}

TEST_CASE("torus(2,q) matches the two-bridge quandle") {
  for (int q = 3; q <= 8; ++q) {
    const auto a = knotq::from_cayley(knotq::enumerate(knotq::torus(2, q, 2)));
    const auto b =
        knotq::from_cayley(knotq::enumerate(knotq::two_bridge(1, q, 2)));
    CHECK(knotq::find_isomorphism(a, b).has_value());
  }
}

TEST_CASE("mirror with all orientations reversed is the same quandle") {
  const std::vector<std::pair<BraidWord, int>> cases = {
      {{2, {{1, 1}, {1, 1}, {1, 1}}}, 3},                          // trefoil
      {{2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}}, 3},                  // (2,4)
      {{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}, {2, 1}}}, 2},  // (3,3)
  };
  for (const auto& [braid, n] : cases) {
    BraidWord mirrored = braid;
    for (auto& letter : mirrored.letters) letter.sign = -letter.sign;
    const int comps = knotq::component_count(braid);
    const std::vector<StrandOrientation> fwd(
        static_cast<std::size_t>(comps), StrandOrientation::forward);
    const std::vector<StrandOrientation> rev(
        static_cast<std::size_t>(comps), StrandOrientation::reversed);
    const auto a =
        knotq::from_cayley(knotq::enumerate(knotq::braid_closure(braid, fwd, n)));
    const auto b = knotq::from_cayley(
        knotq::enumerate(knotq::braid_closure(mirrored, rev, n)));
    CHECK(knotq::find_isomorphism(a, b).has_value());
  }
}

TEST_CASE("orientation is immaterial for involutory quandles") {
  const auto plain = knotq::from_cayley(knotq::enumerate(knotq::torus(2, 4, 2)));
  const auto flipped = knotq::from_cayley(knotq::enumerate(knotq::torus(
      2, 4, {StrandOrientation::forward, StrandOrientation::reversed}, 2)));
  CHECK(knotq::find_isomorphism(plain, flipped).has_value());
}

TEST_CASE("link spec strings") {
  CHECK(knotq::parse_link_spec("two-bridge:3/5", 2, false) ==
        knotq::two_bridge(3, 5, 2));
  CHECK(knotq::parse_link_spec("torus:2,4:+-", 3, false) ==
        knotq::torus(2, 4,
                     {StrandOrientation::forward, StrandOrientation::reversed},
                     3));
  CHECK(knotq::parse_link_spec("torus-axis:5", std::nullopt, false) ==
        knotq::torus_with_axis(5));
  CHECK(knotq::parse_link_spec("braid:3:1 2 1 2", 2, false) ==
        knotq::braid_closure(BraidWord{3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}},
                             2));
  CHECK(knotq::parse_link_spec("braid-axis:2:1 1 1", 2, false) ==
        knotq::braid_closure_with_axis(BraidWord{2, {{1, 1}, {1, 1}, {1, 1}}},
                                       2));
  CHECK(knotq::parse_link_spec("braid:2:-1 -1", 2, false) ==
        knotq::braid_closure(BraidWord{2, {{1, -1}, {1, -1}}}, 2));
  CHECK_FALSE(knotq::parse_link_spec("unknot", std::nullopt, false)
                  .exponent_n()
                  .has_value());
  CHECK(*knotq::parse_link_spec("hopf", 4, false).exponent_n() == 4);

  CHECK_THROWS_AS(knotq::parse_link_spec("nonsense", 2, false),
                  knotq::ParseError);
  CHECK_THROWS_AS(knotq::parse_link_spec("two-bridge:35", 2, false),
                  knotq::ParseError);
  CHECK_THROWS_AS(knotq::parse_link_spec("torus:2,4:++-", 3, false),
                  knotq::ParseError);
  CHECK_THROWS_AS(knotq::parse_link_spec("unknot", 2, true),
                  knotq::ParseError);
}

TEST_CASE("link specs can load presentation files") {
  const std::string path = "knotq_test_presentation.txt";
  {
    std::ofstream out(path);
    out << knotq::to_text(knotq::two_bridge(3, 5, 2));
  }
  const auto p = knotq::parse_link_spec("file:" + path, std::nullopt, false);
  CHECK(p == knotq::two_bridge(3, 5, 2));
  const auto overridden = knotq::parse_link_spec("file:" + path, 3, false);
  CHECK(*overridden.exponent_n() == 3);
  std::remove(path.c_str());

  CHECK_THROWS_AS(
      knotq::parse_link_spec("file:does_not_exist.txt", 2, false),
      knotq::ParseError);
}
