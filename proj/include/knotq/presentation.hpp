#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotq/words.hpp"

namespace knotq {

/// A defining relation base^exponent = target.
struct PrimaryRelation {
  GeneratorId base = 0;
  Word exponent;
  GeneratorId target = 0;

  friend bool operator==(const PrimaryRelation&,
                         const PrimaryRelation&) = default;
};

/// A relation y^word = y that holds for every element y.
struct UniversalRelation {
  Word word;

  friend bool operator==(const UniversalRelation&,
                         const UniversalRelation&) = default;
};

struct Diagnostic {
  std::string message;
};

/// Generators, defining relations and the quandle exponent n. An absent
/// exponent means the fundamental quandle, which is only enumerable under a
/// vertex cap except for a couple of degenerate links.
class QuandlePresentation {
 public:
  QuandlePresentation() = default;
  explicit QuandlePresentation(std::vector<std::string> generator_names,
                               std::vector<PrimaryRelation> relations = {},
                               std::optional<int> exponent_n = std::nullopt);

  int generator_count() const {
    return static_cast<int>(generator_names_.size());
  }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }
  const std::vector<PrimaryRelation>& relations() const { return relations_; }
  const std::optional<int>& exponent_n() const { return exponent_n_; }

  std::optional<GeneratorId> find_generator(std::string_view name) const;
  void add_relation(PrimaryRelation r);
  void set_exponent_n(std::optional<int> n) { exponent_n_ = n; }

  friend bool operator==(const QuandlePresentation&,
                         const QuandlePresentation&) = default;

 private:
  std::vector<std::string> generator_names_;
  std::vector<PrimaryRelation> relations_;
  std::optional<int> exponent_n_;
};

/// The universally quantified consequence y^{w^-1 x_j w x_k^-1} = y of the
/// relation x_j^w = x_k, cyclically reduced.
UniversalRelation secondary_relation(const PrimaryRelation& r);

/// One relation y^{x_j^n} = y per generator. Requires exponent_n.
std::vector<UniversalRelation> n_relations(const QuandlePresentation& p);

struct UniversalOptions {
  /// Cyclically reduce, sign-normalize for n = 2, and deduplicate secondary
  /// relation words up to rotation and inversion.
  bool simplify = true;
  bool reverse_secondary_order = false;
};

/// The full list of universal relations an enumeration must trace at every
/// vertex: the n-relations (when n is present) followed by the secondary
/// relations in presentation order. Empty words are dropped.
std::vector<UniversalRelation> universal_relations(
    const QuandlePresentation& p, const UniversalOptions& opts = {});

/// Structural checks; empty result means the presentation is valid.
std::vector<Diagnostic> validate(const QuandlePresentation& p);

// Line-oriented file format:
//   gens <name> <name> ...     exactly once, first
//   n <integer>                optional; absent = fundamental quandle
//   rel <gen> : <word> = <gen> zero or more
//   # comment to end of line
QuandlePresentation parse_presentation(std::string_view text);
std::string to_text(const QuandlePresentation& p);

}  // namespace knotq
