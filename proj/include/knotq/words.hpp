#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace knotq {

/// Index of a generator within its presentation (dense 0..g-1). Display
/// names live in the presentation.
using GeneratorId = int;

/// One signed generator letter; sign -1 is the inverse (barred) direction.
struct Letter {
  GeneratorId gen = 0;
  int sign = 1;

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter inverse_letter(Letter l) { return Letter{l.gen, -l.sign}; }

/// Freely reduced word in the free group on a presentation's generators.
/// Construction reduces eagerly, so equal free-group elements compare equal
/// and traced paths are as short as possible.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word single(GeneratorId g, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence; idempotent.
Word reduce(std::vector<Letter> raw);

/// w repeated k times, k >= 0.
Word power(const Word& w, int k);

/// Exponent of (a^u) acted on by (b^v)^sign, rewritten over a's base:
/// u * v^-1 * b^sign * v, reduced.
Word reassociate(const Word& u, GeneratorId b, const Word& v, int sign);

/// Shortest cyclic conjugate: repeatedly strips matching first/last inverse
/// pairs. A universally quantified relation y^w = y is unchanged by this.
Word cyclic_reduce(const Word& w);

/// For n == 2 every letter is its own inverse: rewrites with all signs
/// positive, cancelling equal adjacent letters and equal first/last letters.
/// For any other n the word is returned unchanged.
Word normalize_mod_n(const Word& w, int n);

// Text form: whitespace-separated tokens, `a` for a generator and `~a` for
// its inverse.
std::string format_letter(Letter l, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace knotq
