#include "knotq/quandle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "knotq/errors.hpp"

namespace knotq {

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> op,
                             std::vector<std::vector<int>> inv_op,
                             std::optional<QuandleProvenance> provenance)
    : m_(static_cast<int>(op.size())),
      op_(std::move(op)),
      inv_(std::move(inv_op)),
      prov_(std::move(provenance)) {
  if (m_ == 0) throw InternalError("a quandle must be nonempty");
  auto in_range = [&](int x) { return 0 <= x && x < m_; };
  if (static_cast<int>(inv_.size()) != m_) {
    throw InternalError("op and inv_op tables disagree in size");
  }
  for (int x = 0; x < m_; ++x) {
    if (static_cast<int>(op_[x].size()) != m_ ||
        static_cast<int>(inv_[x].size()) != m_) {
      throw InternalError("operation table is not square");
    }
    for (int y = 0; y < m_; ++y) {
      if (!in_range(op_[x][y]) || !in_range(inv_[x][y])) {
        throw InternalError("operation table entry out of range");
      }
    }
  }
  for (int x = 0; x < m_; ++x) {
    if (op_[x][x] != x) throw InternalError("idempotence fails");
  }
  for (int x = 0; x < m_; ++x) {
    for (int y = 0; y < m_; ++y) {
      if (inv_[op_[x][y]][y] != x || op_[inv_[x][y]][y] != x) {
        throw InternalError("right invertibility fails");
      }
    }
  }
  for (int x = 0; x < m_; ++x) {
    for (int y = 0; y < m_; ++y) {
      const int xy = op_[x][y];
      for (int z = 0; z < m_; ++z) {
        if (op_[xy][z] != op_[op_[x][z]][op_[y][z]]) {
          throw InternalError("self-distributivity fails");
        }
      }
    }
  }
}

bool FiniteQuandle::involutory() const { return op_ == inv_; }

std::vector<int> FiniteQuandle::point_symmetry(int x) const {
  std::vector<int> images(static_cast<std::size_t>(m_));
  for (int y = 0; y < m_; ++y) {
    images[static_cast<std::size_t>(y)] = op_[y][x];
  }
  return images;
}

FiniteQuandle from_cayley(const CayleyTable& t) {
  const int m = t.size;
  std::vector<std::vector<int>> op(static_cast<std::size_t>(m),
                                   std::vector<int>(m, 0));
  std::vector<std::vector<int>> inv = op;
  for (int e = 0; e < m; ++e) {
    const auto& [base, w] = t.element_words[static_cast<std::size_t>(e)];
    // The action of base^w is the action of w^-1 * base^(+-1) * w.
    const Word forward = w.inverse() * Word::single(base) * w;
    const Word backward = w.inverse() * Word::single(base, -1) * w;
    for (int y = 0; y < m; ++y) {
      op[y][e] = t.act(y, forward);
      inv[y][e] = t.act(y, backward);
    }
  }
  QuandleProvenance prov{t.presentation, t.generator_element,
                         t.element_words};
  return FiniteQuandle(std::move(op), std::move(inv), std::move(prov));
}

FiniteQuandle dihedral_quandle(int q) {
  if (q < 1) throw InternalError("dihedral quandle needs q >= 1");
  std::vector<std::vector<int>> op(static_cast<std::size_t>(q),
                                   std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      op[i][j] = ((2 * j - i) % q + q) % q;
    }
  }
  auto inv = op;
  return FiniteQuandle(std::move(op), std::move(inv));
}

std::vector<std::vector<int>> components(const FiniteQuandle& q) {
  const int m = q.size();
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int x = 0; x < m; ++x) {
        for (int w : {q.op(v, x), q.inv_op(v, x)}) {
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

bool is_medial(const FiniteQuandle& q) {
  const int m = q.size();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        for (int w = 0; w < m; ++w) {
          if (q.op(q.op(x, y), q.op(z, w)) !=
              q.op(q.op(x, z), q.op(y, w))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

// (component size, cycle type of S_x): preserved by any isomorphism, so
// candidate images can be filtered on it.
using ElementProfile = std::pair<int, std::vector<int>>;

std::vector<ElementProfile> element_profiles(const FiniteQuandle& q) {
  const int m = q.size();
  std::vector<int> comp_size(static_cast<std::size_t>(m), 0);
  for (const auto& c : components(q)) {
    for (int e : c) comp_size[static_cast<std::size_t>(e)] =
        static_cast<int>(c.size());
  }
  std::vector<ElementProfile> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    std::vector<int> images = q.point_symmetry(x);
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> cycles;
    for (int s = 0; s < m; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = images[static_cast<std::size_t>(cur)];
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    out.push_back({comp_size[static_cast<std::size_t>(x)], std::move(cycles)});
  }
  return out;
}

// Expresses every element as a chain of op/inv_op applications starting
// from the generators, so candidate images determine a full candidate map.
struct DerivationStep {
  int result;
  int lhs;
  int rhs;
  bool inverse;
};

std::vector<DerivationStep> derivation_plan(const FiniteQuandle& q,
                                            const std::vector<int>& gens) {
  const int m = q.size();
  std::vector<char> known(static_cast<std::size_t>(m), 0);
  std::vector<int> order;
  for (int g : gens) {
    if (!known[static_cast<std::size_t>(g)]) {
      known[static_cast<std::size_t>(g)] = 1;
      order.push_back(g);
    }
  }
  std::vector<DerivationStep> steps;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < order.size(); ++j) {
        const int x = order[i];
        const int y = order[j];
        for (bool inv : {false, true}) {
          const int r = inv ? q.inv_op(x, y) : q.op(x, y);
          if (!known[static_cast<std::size_t>(r)]) {
            known[static_cast<std::size_t>(r)] = 1;
            order.push_back(r);
            steps.push_back({r, x, y, inv});
            grew = true;
          }
        }
      }
    }
  }
  return steps;
}

bool apply_candidate(const FiniteQuandle& a, const FiniteQuandle& b,
                     const std::vector<int>& gens,
                     const std::vector<DerivationStep>& steps,
                     const std::vector<int>& images, std::vector<int>& phi) {
  const int m = a.size();
  phi.assign(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    phi[static_cast<std::size_t>(gens[i])] = images[i];
  }
  for (const DerivationStep& s : steps) {
    const int x = phi[static_cast<std::size_t>(s.lhs)];
    const int y = phi[static_cast<std::size_t>(s.rhs)];
    phi[static_cast<std::size_t>(s.result)] =
        s.inverse ? b.inv_op(x, y) : b.op(x, y);
  }
  std::vector<char> hit(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    const int v = phi[static_cast<std::size_t>(x)];
    if (v < 0 || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (phi[static_cast<std::size_t>(a.op(x, y))] !=
          b.op(phi[static_cast<std::size_t>(x)],
               phi[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> isomorphisms(const FiniteQuandle& a,
                                           const FiniteQuandle& b,
                                           bool first_only) {
  std::vector<std::vector<int>> found;
  if (a.size() != b.size()) return found;

  const std::vector<int> gens = minimal_generating_set(a);
  const std::vector<DerivationStep> steps = derivation_plan(a, gens);

  const auto prof_a = element_profiles(a);
  const auto prof_b = element_profiles(b);
  {
    auto multiset_a = prof_a;
    auto multiset_b = prof_b;
    std::sort(multiset_a.begin(), multiset_a.end());
    std::sort(multiset_b.begin(), multiset_b.end());
    if (multiset_a != multiset_b) return found;
  }

  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> cand;
    for (int e = 0; e < b.size(); ++e) {
      if (prof_b[static_cast<std::size_t>(e)] ==
          prof_a[static_cast<std::size_t>(g)]) {
        cand.push_back(e);
      }
    }
    if (cand.empty()) return found;
    candidates.push_back(std::move(cand));
  }

  std::vector<int> images(gens.size(), -1);
  std::vector<int> phi;
  auto rec = [&](auto&& self, std::size_t level) -> bool {
    if (level == gens.size()) {
      if (apply_candidate(a, b, gens, steps, images, phi)) {
        found.push_back(phi);
        return first_only;
      }
      return false;
    }
    for (int cand : candidates[level]) {
      bool used = false;
      for (std::size_t i = 0; i < level; ++i) {
        if (images[i] == cand) {
          used = true;
          break;
        }
      }
      if (used) continue;
      images[level] = cand;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b) {
  auto found = isomorphisms(a, b, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<int>> all_isomorphisms(const FiniteQuandle& a,
                                               const FiniteQuandle& b) {
  return isomorphisms(a, b, false);
}

std::vector<int> subquandle_closure(const FiniteQuandle& q,
                                    std::vector<int> seeds) {
  const int m = q.size();
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  std::vector<int> members;
  for (int s : seeds) {
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = 1;
      members.push_back(s);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        for (int r : {q.op(members[i], members[j]),
                      q.inv_op(members[i], members[j])}) {
          if (!in[static_cast<std::size_t>(r)]) {
            in[static_cast<std::size_t>(r)] = 1;
            members.push_back(r);
            grew = true;
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> minimal_generating_set(const FiniteQuandle& q) {
  const int m = q.size();
  std::vector<int> chosen;
  std::vector<int> closed;
  while (static_cast<int>(closed.size()) < m) {
    int best = -1;
    std::size_t best_size = 0;
    for (int cand = 0; cand < m; ++cand) {
      if (std::binary_search(closed.begin(), closed.end(), cand)) continue;
      auto trial = chosen;
      trial.push_back(cand);
      const std::size_t size = subquandle_closure(q, trial).size();
      if (size > best_size) {
        best_size = size;
        best = cand;
      }
    }
    chosen.push_back(best);
    closed = subquandle_closure(q, chosen);
  }
  // Prune to an inclusion-minimal set.
  for (std::size_t i = 0; i < chosen.size();) {
    auto trial = chosen;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!trial.empty() &&
        static_cast<int>(subquandle_closure(q, trial).size()) == m) {
      chosen = std::move(trial);
    } else {
      ++i;
    }
  }
  return chosen;
}

nlohmann::json quandle_to_json(const FiniteQuandle& q) {
  const int m = q.size();
  std::vector<int> op_flat, inv_flat;
  op_flat.reserve(static_cast<std::size_t>(m) * m);
  inv_flat.reserve(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      op_flat.push_back(q.op(x, y) + 1);
      inv_flat.push_back(q.inv_op(x, y) + 1);
    }
  }
  nlohmann::json out{{"size", m}, {"op", op_flat}, {"inv_op", inv_flat}};
  if (q.provenance()) {
    const auto& prov = *q.provenance();
    const auto& names = prov.presentation.generator_names();
    std::vector<std::string> words;
    for (const auto& [base, w] : prov.element_words) {
      std::string label = names[static_cast<std::size_t>(base)];
      if (!w.empty()) label += "^" + format_word(w, names);
      words.push_back(std::move(label));
    }
    nlohmann::json provenance{{"presentation", to_text(prov.presentation)},
                              {"words", words}};
    out["provenance"] = provenance;
  }
  return out;
}

}  // namespace knotq
