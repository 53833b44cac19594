#include "knotq/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

QuandlePresentation::QuandlePresentation(
    std::vector<std::string> generator_names,
    std::vector<PrimaryRelation> relations, std::optional<int> exponent_n)
    : generator_names_(std::move(generator_names)),
      relations_(std::move(relations)),
      exponent_n_(exponent_n) {}

std::optional<GeneratorId> QuandlePresentation::find_generator(
    std::string_view name) const {
  for (std::size_t i = 0; i < generator_names_.size(); ++i) {
    if (generator_names_[i] == name) return static_cast<GeneratorId>(i);
  }
  return std::nullopt;
}

void QuandlePresentation::add_relation(PrimaryRelation r) {
  relations_.push_back(std::move(r));
}

UniversalRelation secondary_relation(const PrimaryRelation& r) {
  Word w = r.exponent.inverse() * Word::single(r.base) * r.exponent *
           Word::single(r.target, -1);
  return UniversalRelation{cyclic_reduce(w)};
}

std::vector<UniversalRelation> n_relations(const QuandlePresentation& p) {
  if (!p.exponent_n()) {
    throw InvalidPresentation(
        "n-quandle relations require an exponent; this is a fundamental "
        "quandle presentation");
  }
  std::vector<UniversalRelation> out;
  out.reserve(static_cast<std::size_t>(p.generator_count()));
  for (GeneratorId g = 0; g < p.generator_count(); ++g) {
    out.push_back(
        UniversalRelation{power(Word::single(g), *p.exponent_n())});
  }
  return out;
}

namespace {

// Canonical representative of a word's class under rotation and inversion;
// universal relations in the same class force the same identifications.
std::vector<Letter> cyclic_class_key(const Word& w) {
  std::vector<Letter> best;
  bool have = false;
  for (const Word& cand : {w, w.inverse()}) {
    std::vector<Letter> ls = cand.letters();
    const std::size_t n = ls.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
      std::vector<Letter> rot;
      rot.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rot.push_back(ls[(i + r) % n]);
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<UniversalRelation> universal_relations(
    const QuandlePresentation& p, const UniversalOptions& opts) {
  std::vector<UniversalRelation> out;
  if (p.exponent_n()) {
    for (auto& r : n_relations(p)) out.push_back(std::move(r));
  }

  std::vector<UniversalRelation> secondaries;
  for (const PrimaryRelation& r : p.relations()) {
    Word w = opts.simplify
                 ? secondary_relation(r).word
                 : r.exponent.inverse() * Word::single(r.base) * r.exponent *
                       Word::single(r.target, -1);
    if (opts.simplify && p.exponent_n() && *p.exponent_n() == 2) {
      w = normalize_mod_n(w, 2);
    }
    if (!w.empty()) secondaries.push_back(UniversalRelation{std::move(w)});
  }
  if (opts.reverse_secondary_order) {
    std::reverse(secondaries.begin(), secondaries.end());
  }
  for (auto& r : secondaries) out.push_back(std::move(r));

  if (opts.simplify) {
    std::set<std::vector<Letter>> seen;
    std::vector<UniversalRelation> unique;
    for (auto& r : out) {
      if (seen.insert(cyclic_class_key(r.word)).second) {
        unique.push_back(std::move(r));
      }
    }
    out = std::move(unique);
  }
  return out;
}

namespace {

// ASCII identifiers keep the `~` inverse prefix unambiguous.
bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate(const QuandlePresentation& p) {
  std::vector<Diagnostic> out;
  std::set<std::string> names;
  for (const auto& name : p.generator_names()) {
    if (!names.insert(name).second) {
      out.push_back({"duplicate generator name '" + name + "'"});
    }
    if (!valid_generator_name(name)) {
      out.push_back({"bad generator name '" + name + "'"});
    }
  }
  if (p.exponent_n() && *p.exponent_n() < 2) {
    out.push_back({"quandle exponent must be at least 2, got " +
                   std::to_string(*p.exponent_n())});
  }
  const int g = p.generator_count();
  auto check_gen = [&](GeneratorId id, const char* where) {
    if (id < 0 || id >= g) {
      out.push_back({std::string("relation ") + where +
                     " references undeclared generator index " +
                     std::to_string(id)});
    }
  };
  for (const PrimaryRelation& r : p.relations()) {
    check_gen(r.base, "base");
    check_gen(r.target, "target");
    for (Letter l : r.exponent.letters()) check_gen(l.gen, "exponent");
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

}  // namespace

QuandlePresentation parse_presentation(std::string_view text) {
  std::vector<std::string> gens;
  std::optional<int> n;
  std::vector<PrimaryRelation> relations;
  bool seen_gens = false;

  std::istringstream in{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line.substr(0, raw_line.find('#'));
    std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const std::string& kind = tokens[0];
    if (kind == "gens") {
      if (seen_gens) throw ParseError("duplicate gens line", line_no, 1);
      if (tokens.size() < 2) {
        throw ParseError("gens line declares no generators", line_no, 1);
      }
      gens.assign(tokens.begin() + 1, tokens.end());
      for (const std::string& name : gens) {
        if (!valid_generator_name(name)) {
          throw ParseError("bad generator name '" + name + "'", line_no, 1);
        }
      }
      seen_gens = true;
      continue;
    }
    if (!seen_gens) {
      throw ParseError("the gens line must come first", line_no, 1);
    }
    if (kind == "n") {
      if (tokens.size() != 2) {
        throw ParseError("expected `n <integer>`", line_no, 1);
      }
      int value = 0;
      try {
        value = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + tokens[1] + "'", line_no, 1);
      }
      if (value < 2) {
        throw ParseError("quandle exponent must be at least 2", line_no, 1);
      }
      n = value;
      continue;
    }
    if (kind == "rel") {
      // rel <gen> : <word> = <gen>
      auto colon = std::find(tokens.begin(), tokens.end(), ":");
      auto equals = std::find(tokens.begin(), tokens.end(), "=");
      if (tokens.size() < 5 || colon != tokens.begin() + 2 ||
          equals == tokens.end() || equals + 2 != tokens.end()) {
        throw ParseError("expected `rel <gen> : <word> = <gen>`", line_no, 1);
      }
      auto lookup = [&](const std::string& name) -> GeneratorId {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (gens[i] == name) return static_cast<GeneratorId>(i);
        }
        throw ParseError("undeclared generator '" + name + "'", line_no, 1);
      };
      PrimaryRelation r;
      r.base = lookup(tokens[1]);
      r.target = lookup(*(equals + 1));
      std::string word_text;
      for (auto it = colon + 1; it != equals; ++it) {
        word_text += *it;
        word_text += ' ';
      }
      try {
        r.exponent = parse_word(word_text, gens);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
      relations.push_back(std::move(r));
      continue;
    }
    throw ParseError("unknown directive '" + kind + "'", line_no, 1);
  }
  if (!seen_gens) throw ParseError("missing gens line", 1, 1);
  return QuandlePresentation(std::move(gens), std::move(relations), n);
}

std::string to_text(const QuandlePresentation& p) {
  std::ostringstream out;
  out << "gens";
  for (const auto& name : p.generator_names()) out << ' ' << name;
  out << '\n';
  if (p.exponent_n()) out << "n " << *p.exponent_n() << '\n';
  for (const PrimaryRelation& r : p.relations()) {
    out << "rel " << p.generator_names()[static_cast<std::size_t>(r.base)]
        << " : " << format_word(r.exponent, p.generator_names()) << " = "
        << p.generator_names()[static_cast<std::size_t>(r.target)] << '\n';
  }
  return out.str();
}

}  // namespace knotq
