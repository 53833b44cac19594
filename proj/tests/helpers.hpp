#pragma once

// Shared helpers for the test suites: compact word construction and
// independent re-checks of enumerated tables. The verifiers here read the
// raw tables directly rather than going through the code paths they are
// meant to confirm.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotq/enumerator.hpp"
#include "knotq/presentation.hpp"
#include "knotq/quandle.hpp"
#include "knotq/words.hpp"

namespace test_helpers {

inline const std::vector<std::string> kNames{"a", "b", "c", "d"};

// w("~a b") -> word over generators a=0, b=1, c=2, d=3.
inline knotq::Word w(const std::string& text) {
  return knotq::parse_word(text, kNames);
}

inline knotq::Word random_raw_word(std::mt19937& rng, int max_len,
                                   int generators) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, generators - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<knotq::Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    letters.push_back({gen_dist(rng), sign_dist(rng) ? 1 : -1});
  }
  return knotq::Word(std::move(letters));
}

// Every primary relation of the presentation must hold pointwise in the
// completed table: acting by w^-1 x_j w equals acting by x_k everywhere.
inline bool secondary_relations_hold(const knotq::CayleyTable& t) {
  for (const knotq::PrimaryRelation& r : t.presentation.relations()) {
    const knotq::Word lhs = r.exponent.inverse() *
                            knotq::Word::single(r.base) * r.exponent;
    for (int y = 0; y < t.size; ++y) {
      if (t.act(y, lhs) != t.act(y, knotq::Word::single(r.target))) {
        return false;
      }
    }
  }
  return true;
}

// Generator actions iterated n times must fix every element.
inline bool actions_have_order_dividing_n(const knotq::CayleyTable& t) {
  if (!t.presentation.exponent_n()) return true;
  const int n = *t.presentation.exponent_n();
  for (const auto& action : t.action) {
    for (int e = 0; e < t.size; ++e) {
      int cur = e;
      for (int k = 0; k < n; ++k) cur = action[static_cast<std::size_t>(cur)];
      if (cur != e) return false;
    }
  }
  return true;
}

// Axiom re-check straight off the tables.
inline bool quandle_axioms_hold(const knotq::FiniteQuandle& q) {
  const int m = q.size();
  for (int x = 0; x < m; ++x) {
    if (q.op(x, x) != x) return false;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (q.inv_op(q.op(x, y), y) != x) return false;
      if (q.op(q.inv_op(x, y), y) != x) return false;
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool witness_is_isomorphism(const knotq::FiniteQuandle& a,
                                   const knotq::FiniteQuandle& b,
                                   const std::vector<int>& phi) {
  if (a.size() != b.size() ||
      static_cast<int>(phi.size()) != a.size()) {
    return false;
  }
  std::vector<char> hit(phi.size(), 0);
  for (int v : phi) {
    if (v < 0 || v >= a.size() || hit[static_cast<std::size_t>(v)]) {
      return false;
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (phi[static_cast<std::size_t>(a.op(x, y))] !=
          b.op(phi[static_cast<std::size_t>(x)],
               phi[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<std::size_t> component_sizes(
    const knotq::FiniteQuandle& q) {
  std::vector<std::size_t> sizes;
  for (const auto& c : knotq::components(q)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace test_helpers
