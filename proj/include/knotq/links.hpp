#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotq/presentation.hpp"

namespace knotq {

struct BraidLetter {
  int position = 1;  // 1..strands-1
  int sign = 1;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;
};

enum class StrandOrientation { forward, reversed };

/// Cycles of the map "top strand -> strand met after closing up", i.e. the
/// link components of the braid closure. Strand s belongs to component
/// strand_components(b)[s]; components are numbered by smallest strand.
std::vector<int> strand_components(const BraidWord& b);
int component_count(const BraidWord& b);

/// Schubert-form presentation on two generators. For q = 2t+1 the single
/// relation a^{(ba)^t} = b; for q = 2t the pair a^{(ba)^{t-1}b} = a,
/// b^{(ab)^{t-1}a} = b. Requires 0 < p < q coprime.
QuandlePresentation two_bridge(int p, int q, std::optional<int> n);

/// Wirtinger-style presentation of the braid closure: one generator per top
/// strand, labels pushed through the crossings, and each bottom label
/// equated with its top generator. Orientation flags are per component.
QuandlePresentation braid_closure(const BraidWord& b,
                                  const std::vector<StrandOrientation>& orient,
                                  std::optional<int> n);
QuandlePresentation braid_closure(const BraidWord& b, std::optional<int> n);

/// Closure of (s_1 ... s_{p-1})^q for p = 2 or 3.
QuandlePresentation torus(int p, int q,
                          const std::vector<StrandOrientation>& orient,
                          std::optional<int> n);
QuandlePresentation torus(int p, int q, std::optional<int> n);

/// Involutory quandle presentation of the 2-strand torus link together with
/// an axis of linking number 2, on generators a, b, c.
QuandlePresentation torus_with_axis(int q);

/// Braid closure plus an axis generator z encircling all strands: the axis
/// meridian picks up one conjugation per strand at the closure line, and
/// every strand closure relation passes through the axis disk once.
QuandlePresentation braid_closure_with_axis(const BraidWord& b,
                                            std::optional<int> n);

/// Canonical presentations for a few named links: "unknot", "hopf"
/// (fundamental mode) and "trefoil-axis-b".
QuandlePresentation named_link(std::string_view tag);

// CLI link-spec grammar:
//   two-bridge:p/q | torus:p,q[:++|+-|...] | torus-axis:q
//   braid:p:<letters> | braid-axis:p:<letters>   (letters like `1 2 -1`)
//   unknot | hopf | file:<path>
// n_override sets the quandle exponent; fundamental clears it. Builders
// with an intrinsic exponent (torus-axis, named links) keep theirs unless
// overridden.
QuandlePresentation parse_link_spec(std::string_view spec,
                                    std::optional<int> n_override,
                                    bool fundamental);

}  // namespace knotq
