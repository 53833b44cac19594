#include "knotq/enumerator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

int CayleyTable::act(int element, Letter l) const {
  const auto& table = l.sign > 0 ? action : inverse_action;
  return table[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(
      element)];
}

int CayleyTable::act(int element, const Word& w) const {
  for (Letter l : w.letters()) element = act(element, l);
  return element;
}

std::vector<std::vector<int>> CayleyTable::components() const {
  std::vector<int> comp(static_cast<std::size_t>(size), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < size; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t g = 0; g < action.size(); ++g) {
        for (int w : {action[g][static_cast<std::size_t>(v)],
                      inverse_action[g][static_cast<std::size_t>(v)]}) {
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

EnumerationState::EnumerationState(int generator_count, int cap)
    : gens_(generator_count), cap_(cap) {
  parent_.push_back(0);  // vertex ids are 1-based
  pred_.push_back(0);
  via_.push_back(Letter{});
  fwd_.resize(static_cast<std::size_t>(gens_), 0);
  bwd_.resize(static_cast<std::size_t>(gens_), 0);
  for (GeneratorId g = 0; g < gens_; ++g) {
    int v = new_vertex(0, Letter{});
    set_edge(v, g, v);  // idempotence loop
  }
}

int EnumerationState::new_vertex(int pred, Letter via) {
  if (live_ + 1 > cap_) {
    throw CapExceeded("vertex cap of " + std::to_string(cap_) +
                          " exceeded; the quandle is likely infinite",
                      live_ + 1);
  }
  ++created_;
  ++live_;
  parent_.push_back(created_);
  pred_.push_back(pred);
  via_.push_back(via);
  fwd_.resize(fwd_.size() + static_cast<std::size_t>(gens_), 0);
  bwd_.resize(bwd_.size() + static_cast<std::size_t>(gens_), 0);
  return created_;
}

int EnumerationState::find(int v) {
  int root = v;
  while (parent_[static_cast<std::size_t>(root)] != root) {
    root = parent_[static_cast<std::size_t>(root)];
  }
  while (parent_[static_cast<std::size_t>(v)] != v) {
    int next = parent_[static_cast<std::size_t>(v)];
    parent_[static_cast<std::size_t>(v)] = root;
    v = next;
  }
  return root;
}

std::optional<int> EnumerationState::resolve(std::vector<int>& table, int v,
                                             GeneratorId g) {
  int& cell = slot(table, v, g);
  if (cell == 0) return std::nullopt;
  cell = find(cell);
  return cell;
}

std::optional<int> EnumerationState::neighbor(int v, Letter l) {
  v = find(v);
  return l.sign > 0 ? resolve(fwd_, v, l.gen) : resolve(bwd_, v, l.gen);
}

void EnumerationState::enqueue_coincidence(int u, int v) {
  queue_.emplace_back(u, v);
}

void EnumerationState::set_edge(int v, GeneratorId g, int w) {
  v = find(v);
  w = find(w);
  const auto cur = resolve(fwd_, v, g);
  if (cur && *cur != w) {
    // Two g-edges out of v; the edge exists once the merge lands.
    enqueue_coincidence(*cur, w);
    return;
  }
  const auto curb = resolve(bwd_, w, g);
  if (curb && *curb != v) {
    // Two g-edges into w.
    enqueue_coincidence(*curb, v);
    return;
  }
  slot(fwd_, v, g) = w;
  slot(bwd_, w, g) = v;
}

void EnumerationState::trace(int start, const Word& w,
                             std::optional<int> forced_end) {
  int cur = find(start);
  const auto& letters = w.letters();
  if (letters.empty()) {
    if (forced_end && find(*forced_end) != cur) {
      enqueue_coincidence(cur, find(*forced_end));
    }
    return;
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter l = letters[i];
    const bool last = (i + 1 == letters.size());
    if (auto next = neighbor(cur, l)) {
      if (last && forced_end && *next != find(*forced_end)) {
        enqueue_coincidence(*next, find(*forced_end));
      }
      cur = *next;
      continue;
    }
    int next;
    if (last && forced_end) {
      next = find(*forced_end);
    } else {
      next = new_vertex(cur, l);
    }
    if (l.sign > 0) {
      set_edge(cur, l.gen, next);
    } else {
      set_edge(next, l.gen, cur);
    }
    cur = find(next);
  }
}

void EnumerationState::collapse() {
  while (!queue_.empty()) {
    auto [a, b] = queue_.back();
    queue_.pop_back();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    const int keep = std::min(a, b);
    const int drop = std::max(a, b);
    parent_[static_cast<std::size_t>(drop)] = keep;
    --live_;
    for (GeneratorId g = 0; g < gens_; ++g) {
      if (int w = slot(fwd_, drop, g)) {
        slot(fwd_, drop, g) = 0;
        set_edge(keep, g, find(w));
      }
      if (int u = slot(bwd_, drop, g)) {
        slot(bwd_, drop, g) = 0;
        set_edge(find(u), g, keep);
      }
    }
  }
}

bool EnumerationState::complete() {
  for (int v = 1; v <= created_; ++v) {
    if (find(v) != v) continue;
    for (GeneratorId g = 0; g < gens_; ++g) {
      if (!resolve(fwd_, v, g) || !resolve(bwd_, v, g)) return false;
    }
  }
  return true;
}

int EnumerationState::fill_missing_edges() {
  int made = 0;
  const int limit = created_;
  for (int v = 1; v <= limit; ++v) {
    if (find(v) != v) continue;
    for (GeneratorId g = 0; g < gens_; ++g) {
      if (!resolve(fwd_, v, g)) {
        int nv = new_vertex(v, Letter{g, 1});
        set_edge(v, g, nv);
        ++made;
      }
      if (!resolve(bwd_, v, g)) {
        int nv = new_vertex(v, Letter{g, -1});
        set_edge(nv, g, v);
        ++made;
      }
    }
  }
  return made;
}

std::vector<int> EnumerationState::live_vertices() {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(live_));
  for (int v = 1; v <= created_; ++v) {
    if (find(v) == v) out.push_back(v);
  }
  return out;
}

std::pair<GeneratorId, Word> EnumerationState::representative_word(
    int v) const {
  std::vector<Letter> letters;
  while (pred_[static_cast<std::size_t>(v)] != 0) {
    letters.push_back(via_[static_cast<std::size_t>(v)]);
    v = pred_[static_cast<std::size_t>(v)];
  }
  std::reverse(letters.begin(), letters.end());
  return {static_cast<GeneratorId>(v - 1), Word(std::move(letters))};
}

namespace {

CayleyTable build_table(EnumerationState& st, const QuandlePresentation& p) {
  std::vector<int> roots = st.live_vertices();
  std::map<int, int> index;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    index[roots[i]] = static_cast<int>(i);
  }

  CayleyTable t;
  t.size = static_cast<int>(roots.size());
  t.generator_names = p.generator_names();
  t.presentation = p;
  t.action.assign(static_cast<std::size_t>(p.generator_count()),
                  std::vector<int>(roots.size(), -1));
  t.inverse_action = t.action;
  for (GeneratorId g = 0; g < p.generator_count(); ++g) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      auto f = st.neighbor(roots[i], Letter{g, 1});
      auto b = st.neighbor(roots[i], Letter{g, -1});
      if (!f || !b) throw InternalError("incomplete edge map after run");
      t.action[static_cast<std::size_t>(g)][i] = index.at(*f);
      t.inverse_action[static_cast<std::size_t>(g)][i] = index.at(*b);
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    t.element_words.push_back(st.representative_word(roots[i]));
  }
  for (GeneratorId g = 0; g < p.generator_count(); ++g) {
    t.generator_element.push_back(
        index.at(st.find(st.vertex_of_generator(g))));
  }

  // Structural self-checks: every action a bijection inverse to its
  // backward table, fixing its own generator, of order dividing n.
  for (GeneratorId g = 0; g < p.generator_count(); ++g) {
    std::vector<char> hit(roots.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      int img = t.action[static_cast<std::size_t>(g)][i];
      if (hit[static_cast<std::size_t>(img)]) {
        throw InternalError("generator action is not a bijection");
      }
      hit[static_cast<std::size_t>(img)] = 1;
      if (t.inverse_action[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(img)] !=
          static_cast<int>(i)) {
        throw InternalError("forward and backward actions disagree");
      }
    }
    int self = t.generator_element[static_cast<std::size_t>(g)];
    if (t.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(
            self)] != self) {
      throw InternalError("generator action moves its own element");
    }
  }
  if (p.exponent_n()) {
    for (GeneratorId g = 0; g < p.generator_count(); ++g) {
      for (int e = 0; e < t.size; ++e) {
        int cur = e;
        for (int k = 0; k < *p.exponent_n(); ++k) {
          cur = t.action[static_cast<std::size_t>(g)]
                        [static_cast<std::size_t>(cur)];
        }
        if (cur != e) {
          throw InternalError("generator action order does not divide n");
        }
      }
    }
  }
  return t;
}

}  // namespace

CayleyTable enumerate(const QuandlePresentation& p,
                      const EnumerateOptions& opts) {
  auto diags = validate(p);
  if (!diags.empty()) throw InvalidPresentation(diags.front().message);
  if (p.generator_count() == 0) {
    throw InvalidPresentation("presentation has no generators");
  }

  UniversalOptions uopts;
  uopts.simplify = opts.simplify_universal;
  uopts.reverse_secondary_order = opts.reverse_secondary_order;
  const std::vector<UniversalRelation> universal =
      universal_relations(p, uopts);

  EnumerationState st(p.generator_count(), opts.cap);
  for (const PrimaryRelation& r : p.relations()) {
    st.trace(st.find(st.vertex_of_generator(r.base)), r.exponent,
             st.find(st.vertex_of_generator(r.target)));
    st.collapse();
  }

  int cursor = 1;
  for (;;) {
    while (cursor <= st.created()) {
      const int v = cursor++;
      if (st.find(v) != v) continue;  // merged away, handled at its root
      for (const UniversalRelation& rel : universal) {
        const int c = st.find(v);
        st.trace(c, rel.word, c);
        st.collapse();
      }
    }
    if (p.exponent_n()) break;  // n-relations have filled every edge
    if (st.fill_missing_edges() == 0) break;
  }
  if (!st.complete()) {
    throw InternalError("edge map has gaps after enumeration");
  }
  return build_table(st, p);
}

CayleyTable enumerate(const QuandlePresentation& p, int cap) {
  EnumerateOptions opts;
  opts.cap = cap;
  return enumerate(p, opts);
}

namespace {

std::string element_label(const CayleyTable& t, int e) {
  const auto& [base, word] = t.element_words[static_cast<std::size_t>(e)];
  std::string label = t.generator_names[static_cast<std::size_t>(base)];
  if (!word.empty()) {
    label += '^';
    label += format_word(word, t.generator_names);
  }
  return label;
}

const char* edge_style(std::size_t g) {
  static const char* styles[] = {"solid", "dashed", "dotted"};
  return styles[g % 3];
}

const char* edge_color(std::size_t g) {
  static const char* colors[] = {"black",       "black", "black",
                                 "red",         "blue",  "forestgreen",
                                 "darkorange"};
  return colors[g < 7 ? g : 3 + (g - 3) % 4];
}

}  // namespace

std::string to_dot(const CayleyTable& t, const DotOptions& opts) {
  const bool undirected =
      t.presentation.exponent_n() && *t.presentation.exponent_n() == 2;
  std::ostringstream out;
  out << (undirected ? "graph" : "digraph") << " cayley {\n";
  for (int e = 0; e < t.size; ++e) {
    out << "  n" << (e + 1) << " [label=\"" << element_label(t, e) << "\"];\n";
  }
  const char* arrow = undirected ? " -- " : " -> ";
  for (std::size_t g = 0; g < t.action.size(); ++g) {
    for (int e = 0; e < t.size; ++e) {
      const int img = t.action[g][static_cast<std::size_t>(e)];
      if (img == e) {
        if (t.generator_element[g] == e && !opts.include_idempotence_loops) {
          continue;
        }
        out << "  n" << (e + 1) << arrow << "n" << (e + 1);
      } else {
        if (undirected && img < e) continue;  // one line per unordered pair
        out << "  n" << (e + 1) << arrow << "n" << (img + 1);
      }
      out << " [label=\"" << t.generator_names[g] << "\", style="
          << edge_style(g) << ", color=" << edge_color(g) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json cayley_to_json(const CayleyTable& t) {
  nlohmann::json actions = nlohmann::json::object();
  for (std::size_t g = 0; g < t.action.size(); ++g) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(t.size));
    for (int e = 0; e < t.size; ++e) {
      images.push_back(t.action[g][static_cast<std::size_t>(e)] + 1);
    }
    actions[t.generator_names[g]] = images;
  }
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(t.size));
  for (int e = 0; e < t.size; ++e) words.push_back(element_label(t, e));

  nlohmann::json relations = nlohmann::json::array();
  for (const PrimaryRelation& r : t.presentation.relations()) {
    relations.push_back(
        {{"base", t.generator_names[static_cast<std::size_t>(r.base)]},
         {"exponent", format_word(r.exponent, t.generator_names)},
         {"target", t.generator_names[static_cast<std::size_t>(r.target)]}});
  }
  nlohmann::json presentation = {{"generators", t.generator_names},
                                 {"relations", relations}};
  if (t.presentation.exponent_n()) {
    presentation["n"] = *t.presentation.exponent_n();
  }
  return nlohmann::json{{"elements", t.size},
                        {"generators", t.generator_names},
                        {"actions", actions},
                        {"words", words},
                        {"presentation", presentation}};
}

}  // namespace knotq
