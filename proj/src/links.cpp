#include "knotq/links.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

namespace {

void check_braid(const BraidWord& b) {
  if (b.strands < 2) throw ParseError("a braid needs at least 2 strands");
  for (const BraidLetter& l : b.letters) {
    if (l.position < 1 || l.position >= b.strands) {
      throw ParseError("braid letter position " + std::to_string(l.position) +
                       " out of range for " + std::to_string(b.strands) +
                       " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw ParseError("braid letter sign must be +1 or -1");
    }
  }
}

void check_exponent(const std::optional<int>& n) {
  if (n && *n < 2) {
    throw ParseError("quandle exponent must be at least 2");
  }
}

std::vector<std::string> strand_names(int count, bool with_axis) {
  std::vector<std::string> names;
  if (count <= (with_axis ? 25 : 26)) {
    for (int i = 0; i < count; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
  } else {
    for (int i = 0; i < count; ++i) {
      names.push_back("s" + std::to_string(i + 1));
    }
  }
  if (with_axis) names.push_back("z");
  return names;
}

// An element of the free quandle on the strand generators: base^word.
struct StrandLabel {
  GeneratorId base = 0;
  Word word;
};

// Pushes the top labels through the braid. At a positive letter the strand
// entering at position i crosses over the one at i+1; the under label is
// conjugated by the over label, with the exponent sign flipped when the
// over strand's component is traversed against the braid direction. The
// under strand's own direction drops out: reading its relation backwards
// inverts both sides at once.
std::vector<StrandLabel> propagate_labels(
    const BraidWord& b, const std::vector<StrandOrientation>& orient) {
  const std::vector<int> comps = strand_components(b);
  std::vector<StrandLabel> at(static_cast<std::size_t>(b.strands));
  std::vector<int> strand_at(static_cast<std::size_t>(b.strands));
  for (int s = 0; s < b.strands; ++s) {
    at[static_cast<std::size_t>(s)] = StrandLabel{s, Word{}};
    strand_at[static_cast<std::size_t>(s)] = s;
  }
  for (const BraidLetter& l : b.letters) {
    const std::size_t i = static_cast<std::size_t>(l.position - 1);
    const std::size_t over_pos = l.sign > 0 ? i : i + 1;
    const std::size_t under_pos = l.sign > 0 ? i + 1 : i;
    const StrandLabel over = at[over_pos];
    const StrandLabel under = at[under_pos];
    const int over_comp = comps[static_cast<std::size_t>(
        strand_at[over_pos])];
    const int over_dir =
        orient[static_cast<std::size_t>(over_comp)] ==
                StrandOrientation::forward
            ? 1
            : -1;
    StrandLabel next;
    next.base = under.base;
    next.word = reassociate(under.word, over.base, over.word,
                            l.sign * over_dir);
    // The strands swap positions; the over label passes through unchanged.
    at[under_pos] = over;
    at[over_pos] = next;
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return at;
}

}  // namespace

std::vector<int> strand_components(const BraidWord& b) {
  check_braid(b);
  // perm[s] = bottom position where strand s exits; closure joins bottom
  // position j back to top position j, so components are cycles of perm.
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  for (int s = 0; s < b.strands; ++s) {
    int pos = s;
    for (const BraidLetter& l : b.letters) {
      if (pos == l.position - 1) {
        pos = l.position;
      } else if (pos == l.position) {
        pos = l.position - 1;
      }
    }
    perm[static_cast<std::size_t>(s)] = pos;
  }
  std::vector<int> comp(static_cast<std::size_t>(b.strands), -1);
  int next_id = 0;
  for (int s = 0; s < b.strands; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int cur = s;
    while (comp[static_cast<std::size_t>(cur)] < 0) {
      comp[static_cast<std::size_t>(cur)] = next_id;
      cur = perm[static_cast<std::size_t>(cur)];
    }
    ++next_id;
  }
  return comp;
}

int component_count(const BraidWord& b) {
  const std::vector<int> comps = strand_components(b);
  return comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
}

QuandlePresentation two_bridge(int p, int q, std::optional<int> n) {
  if (q < 2 || p < 1 || p >= q || std::gcd(p, q) != 1) {
    throw ParseError("two-bridge parameters need 0 < p < q coprime, got " +
                     std::to_string(p) + "/" + std::to_string(q));
  }
  check_exponent(n);
  const GeneratorId a = 0, b = 1;
  const Word ba = Word::single(b) * Word::single(a);
  const Word ab = Word::single(a) * Word::single(b);
  std::vector<PrimaryRelation> rels;
  if (q % 2 == 1) {
    const int t = q / 2;
    rels.push_back({a, power(ba, t), b});
  } else {
    const int t = q / 2;
    rels.push_back({a, power(ba, t - 1) * Word::single(b), a});
    rels.push_back({b, power(ab, t - 1) * Word::single(a), b});
  }
  return QuandlePresentation({"a", "b"}, std::move(rels), n);
}

QuandlePresentation braid_closure(const BraidWord& b,
                                  const std::vector<StrandOrientation>& orient,
                                  std::optional<int> n) {
  check_braid(b);
  check_exponent(n);
  if (static_cast<int>(orient.size()) != component_count(b)) {
    throw ParseError("orientation flags: expected one per link component (" +
                     std::to_string(component_count(b)) + "), got " +
                     std::to_string(orient.size()));
  }
  const std::vector<StrandLabel> bottom = propagate_labels(b, orient);
  std::vector<PrimaryRelation> rels;
  for (int s = 0; s < b.strands; ++s) {
    const StrandLabel& label = bottom[static_cast<std::size_t>(s)];
    rels.push_back({label.base, label.word, s});
  }
  return QuandlePresentation(strand_names(b.strands, false), std::move(rels),
                             n);
}

QuandlePresentation braid_closure(const BraidWord& b, std::optional<int> n) {
  return braid_closure(
      b,
      std::vector<StrandOrientation>(
          static_cast<std::size_t>(component_count(b)),
          StrandOrientation::forward),
      n);
}

namespace {

BraidWord torus_braid(int p, int q) {
  if (q < 2) throw ParseError("torus braid needs q >= 2");
  BraidWord b;
  b.strands = p;
  for (int rep = 0; rep < q; ++rep) {
    for (int i = 1; i < p; ++i) b.letters.push_back({i, 1});
  }
  return b;
}

}  // namespace

QuandlePresentation torus(int p, int q,
                          const std::vector<StrandOrientation>& orient,
                          std::optional<int> n) {
  if (p != 2 && p != 3) {
    throw ParseError("torus links are built for p = 2 or 3; use braid:" +
                     std::to_string(p) + ":... otherwise");
  }
  return braid_closure(torus_braid(p, q), orient, n);
}

QuandlePresentation torus(int p, int q, std::optional<int> n) {
  if (p != 2 && p != 3) {
    throw ParseError("torus links are built for p = 2 or 3; use braid:" +
                     std::to_string(p) + ":... otherwise");
  }
  return braid_closure(torus_braid(p, q), n);
}

QuandlePresentation torus_with_axis(int q) {
  if (q < 2) throw ParseError("torus-axis needs q >= 2");
  const GeneratorId a = 0, b = 1, c = 2;
  const Word ba = Word::single(b) * Word::single(a);
  const Word ab = Word::single(a) * Word::single(b);
  std::vector<PrimaryRelation> rels;
  rels.push_back({c, ab, c});
  if (q % 2 == 1) {
    const int t = q / 2;
    rels.push_back(
        {a, power(ba, t) * Word::single(b) * Word::single(c), b});
    rels.push_back({b, power(ab, t) * Word::single(c), a});
  } else {
    const int t = q / 2;
    rels.push_back(
        {a, power(ba, t - 1) * Word::single(b) * Word::single(c), a});
    rels.push_back({b, power(ab, t) * Word::single(c), b});
  }
  return QuandlePresentation({"a", "b", "c"}, std::move(rels), 2);
}

QuandlePresentation braid_closure_with_axis(const BraidWord& b,
                                            std::optional<int> n) {
  check_braid(b);
  check_exponent(n);
  const std::vector<StrandOrientation> orient(
      static_cast<std::size_t>(component_count(b)),
      StrandOrientation::forward);
  const std::vector<StrandLabel> bottom = propagate_labels(b, orient);
  const GeneratorId axis = b.strands;

  std::vector<PrimaryRelation> rels;
  // The axis meridian is conjugated once by each strand at the closure
  // line.
  Word pass;
  for (int s = 0; s < b.strands; ++s) pass = pass * Word::single(s);
  rels.push_back({axis, pass, axis});
  // Each strand pierces the axis disk once on its way around the closure.
  for (int s = 0; s < b.strands; ++s) {
    const StrandLabel& label = bottom[static_cast<std::size_t>(s)];
    rels.push_back({label.base, label.word * Word::single(axis), s});
  }
  return QuandlePresentation(strand_names(b.strands, true), std::move(rels),
                             n);
}

QuandlePresentation named_link(std::string_view tag) {
  if (tag == "unknot") {
    return QuandlePresentation({"a"}, {}, std::nullopt);
  }
  if (tag == "hopf") {
    BraidWord b;
    b.strands = 2;
    b.letters = {{1, 1}, {1, 1}};
    return braid_closure(b, std::nullopt);
  }
  if (tag == "trefoil-axis-b") {
    BraidWord b;
    b.strands = 3;
    b.letters = {{1, 1}, {2, 1}, {1, 1}, {2, 1}};
    return braid_closure_with_axis(b, 2);
  }
  throw ParseError("unknown link tag '" + std::string(tag) + "'");
}

namespace {

int parse_int_strict(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + text + "'");
  }
}

std::vector<BraidLetter> parse_braid_letters(const std::string& text) {
  std::vector<BraidLetter> letters;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const int v = parse_int_strict(token, "braid letter");
    if (v == 0) throw ParseError("braid letters are nonzero integers");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
  }
  return letters;
}

std::vector<StrandOrientation> parse_orientation(const std::string& text) {
  std::vector<StrandOrientation> out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(StrandOrientation::forward);
    } else if (c == '-') {
      out.push_back(StrandOrientation::reversed);
    } else {
      throw ParseError("orientation flags are '+' and '-'");
    }
  }
  return out;
}

}  // namespace

QuandlePresentation parse_link_spec(std::string_view spec,
                                    std::optional<int> n_override,
                                    bool fundamental) {
  if (fundamental && n_override) {
    throw ParseError("--fundamental and --n are mutually exclusive");
  }
  const std::string s(spec);
  auto rest_after = [&](std::size_t prefix_len) {
    return s.substr(prefix_len);
  };

  QuandlePresentation p;
  bool built = false;
  const std::optional<int> build_n =
      fundamental ? std::nullopt
                  : (n_override ? n_override : std::optional<int>(2));

  if (s == "unknot" || s == "hopf" || s == "trefoil-axis-b") {
    p = named_link(s);
    built = true;
  } else if (s.rfind("two-bridge:", 0) == 0) {
    const std::string body = rest_after(11);
    const std::size_t slash = body.find('/');
    if (slash == std::string::npos) {
      throw ParseError("expected two-bridge:p/q");
    }
    p = two_bridge(parse_int_strict(body.substr(0, slash), "p"),
                   parse_int_strict(body.substr(slash + 1), "q"), build_n);
    built = true;
  } else if (s.rfind("torus-axis:", 0) == 0) {
    p = torus_with_axis(parse_int_strict(rest_after(11), "q"));
    built = true;
  } else if (s.rfind("torus:", 0) == 0) {
    const std::string body = rest_after(6);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) {
      throw ParseError("expected torus:p,q[:orient]");
    }
    const int tp = parse_int_strict(body.substr(0, comma), "p");
    std::string q_part = body.substr(comma + 1);
    std::optional<std::string> orient_part;
    if (const std::size_t colon = q_part.find(':');
        colon != std::string::npos) {
      orient_part = q_part.substr(colon + 1);
      q_part = q_part.substr(0, colon);
    }
    const int tq = parse_int_strict(q_part, "q");
    if (orient_part) {
      p = torus(tp, tq, parse_orientation(*orient_part), build_n);
    } else {
      p = torus(tp, tq, build_n);
    }
    built = true;
  } else if (s.rfind("braid-axis:", 0) == 0 || s.rfind("braid:", 0) == 0) {
    const bool with_axis = s.rfind("braid-axis:", 0) == 0;
    const std::string body = rest_after(with_axis ? 11 : 6);
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected braid:p:<letters>");
    }
    BraidWord b;
    b.strands = parse_int_strict(body.substr(0, colon), "strand count");
    b.letters = parse_braid_letters(body.substr(colon + 1));
    p = with_axis ? braid_closure_with_axis(b, build_n)
                  : braid_closure(b, build_n);
    built = true;
  } else if (s.rfind("file:", 0) == 0) {
    const std::string path = rest_after(5);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    p = parse_presentation(text.str());
    built = true;
  }
  if (!built) {
    throw ParseError("unrecognized link spec '" + s + "'");
  }
  if (fundamental) {
    p.set_exponent_n(std::nullopt);
  } else if (n_override) {
    p.set_exponent_n(n_override);
  }
  return p;
}

}  // namespace knotq
