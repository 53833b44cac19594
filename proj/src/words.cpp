#include "knotq/words.hpp"

#include <cassert>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  assert(l.sign == 1 || l.sign == -1);
  assert(l.gen >= 0);
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) push_reduced(letters_, l);
}

Word Word::single(GeneratorId g, int sign) { return Word{Letter{g, sign}}; }

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(inverse_letter(*it));
  }
  // Reversing a reduced word keeps it reduced.
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.reserve(out.size() + rhs.letters_.size());
  for (Letter l : rhs.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out = out * w;
  return out;
}

Word reassociate(const Word& u, GeneratorId b, const Word& v, int sign) {
  return u * v.inverse() * Word::single(b, sign) * v;
}

Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse_letter(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

Word normalize_mod_n(const Word& w, int n) {
  if (n != 2) return w;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen) {
      out.pop_back();
    } else {
      out.push_back(Letter{l.gen, 1});
    }
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo].gen == out[hi - 1].gen) {
    ++lo;
    --hi;
  }
  Word result;
  for (std::size_t i = lo; i < hi; ++i) {
    result = result * Word::single(out[i].gen);
  }
  return result;
}

std::string format_letter(Letter l, const std::vector<std::string>& names) {
  std::string out = l.sign < 0 ? "~" : "";
  out += names.at(static_cast<std::size_t>(l.gen));
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l, names);
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::vector<Letter> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int sign = 1;
    std::string_view name = token;
    if (!name.empty() && name.front() == '~') {
      sign = -1;
      name.remove_prefix(1);
    }
    GeneratorId gen = -1;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        gen = static_cast<GeneratorId>(i);
        break;
      }
    }
    if (gen < 0) {
      throw ParseError("unknown generator '" + std::string(name) + "'");
    }
    raw.push_back(Letter{gen, sign});
  }
  return Word(std::move(raw));
}

}  // namespace knotq
