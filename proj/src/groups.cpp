#include "knotq/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "knotq/errors.hpp"

namespace knotq {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) ||
        hit[static_cast<std::size_t>(v)]) {
      throw InternalError("permutation images are not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> cycles;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::size_t cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = static_cast<std::size_t>(images_[cur]);
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

int Permutation::order() const {
  long long lcm = 1;
  for (int len : cycle_type()) {
    lcm = std::lcm(lcm, static_cast<long long>(len));
  }
  return static_cast<int>(lcm);
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, int cap)
    : degree_(degree), cap_(cap), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw InternalError("generator degree mismatch");
    }
  }
}

PermGroup PermGroup::from_elements(int degree,
                                   std::vector<Permutation> generators,
                                   std::vector<Permutation> elements,
                                   int cap) {
  PermGroup g(degree, std::move(generators), cap);
  g.elements_ = std::move(elements);
  return g;
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) {
    std::vector<Permutation> els{Permutation(degree_)};
    std::set<Permutation> seen{els.front()};
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (const Permutation& g : generators_) {
        Permutation next = els[i] * g;
        if (seen.insert(next).second) {
          if (static_cast<int>(els.size()) + 1 > cap_) {
            throw CapExceeded("group closure cap of " + std::to_string(cap_) +
                                  " exceeded",
                              static_cast<long long>(els.size()) + 1);
          }
          els.push_back(std::move(next));
        }
      }
    }
    elements_ = std::move(els);
  }
  return *elements_;
}

bool PermGroup::contains(const Permutation& p) const {
  if (sorted_.empty()) {
    sorted_ = elements();
    std::sort(sorted_.begin(), sorted_.end());
  }
  return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) {
        return false;
      }
    }
  }
  return true;
}

const GroupFingerprint& PermGroup::fingerprint() const {
  if (!fingerprint_) fingerprint_ = knotq::fingerprint(*this);
  return *fingerprint_;
}

GroupFingerprint fingerprint(const PermGroup& g) {
  const auto& els = g.elements();
  GroupFingerprint fp;
  fp.order = els.size();
  fp.abelian = g.is_abelian();

  std::size_t center = 0;
  for (const Permutation& e : els) {
    bool central = true;
    for (const Permutation& gen : g.generators()) {
      if (e * gen != gen * e) {
        central = false;
        break;
      }
    }
    if (central) ++center;
  }
  fp.center_order = center;

  std::set<Permutation> commutators;
  for (const Permutation& a : els) {
    const Permutation ai = a.inverse();
    for (const Permutation& b : els) {
      commutators.insert(ai * b.inverse() * a * b);
    }
  }
  PermGroup derived(g.degree(),
                    std::vector<Permutation>(commutators.begin(),
                                             commutators.end()));
  fp.derived_order = derived.order();

  std::map<int, std::size_t> histogram;
  for (const Permutation& e : els) ++histogram[e.order()];
  fp.element_orders.assign(histogram.begin(), histogram.end());
  return fp;
}

PermGroup inner_group(const FiniteQuandle& q) {
  std::vector<Permutation> gens;
  std::set<Permutation> seen;
  for (int x = 0; x < q.size(); ++x) {
    Permutation s(q.point_symmetry(x));
    if (seen.insert(s).second) gens.push_back(std::move(s));
  }
  return PermGroup(q.size(), std::move(gens));
}

PermGroup transvection_group(const FiniteQuandle& q) {
  std::vector<Permutation> symmetries;
  symmetries.reserve(static_cast<std::size_t>(q.size()));
  for (int x = 0; x < q.size(); ++x) {
    symmetries.emplace_back(q.point_symmetry(x));
  }
  std::vector<Permutation> gens;
  std::set<Permutation> seen;
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      Permutation t = symmetries[static_cast<std::size_t>(x)] *
                      symmetries[static_cast<std::size_t>(y)].inverse();
      if (!t.is_identity() && seen.insert(t).second) {
        gens.push_back(std::move(t));
      }
    }
  }
  return PermGroup(q.size(), std::move(gens));
}

PermGroup automorphism_group(const FiniteQuandle& q) {
  std::vector<Permutation> all;
  for (auto& images : all_isomorphisms(q, q)) {
    all.emplace_back(std::move(images));
  }
  std::sort(all.begin(), all.end());

  std::vector<Permutation> gens;
  PermGroup closure(q.size(), {});
  for (const Permutation& a : all) {
    if (!closure.contains(a)) {
      gens.push_back(a);
      closure = PermGroup(q.size(), gens);
    }
  }
  if (closure.order() != all.size()) {
    throw InternalError("automorphism generator reduction lost elements");
  }
  return PermGroup::from_elements(q.size(), std::move(gens), std::move(all));
}

namespace {

std::vector<int> conjugacy_class_sizes(const PermGroup& g,
                                       std::vector<int>& class_of) {
  const auto& els = g.elements();
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < els.size(); ++i) {
    index[els[i]] = static_cast<int>(i);
  }
  class_of.assign(els.size(), -1);
  std::vector<int> sizes;
  for (std::size_t s = 0; s < els.size(); ++s) {
    if (class_of[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::vector<int> stack{static_cast<int>(s)};
    class_of[s] = id;
    int count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++count;
      for (const Permutation& gen : g.generators()) {
        Permutation conj =
            gen * els[static_cast<std::size_t>(v)] * gen.inverse();
        const int w = index.at(conj);
        if (class_of[static_cast<std::size_t>(w)] < 0) {
          class_of[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

// Small generating set: prefer high-order elements, then anything that
// grows the generated subgroup.
std::vector<Permutation> small_generating_set(const PermGroup& g) {
  std::vector<Permutation> els = g.elements();
  std::stable_sort(els.begin(), els.end(),
                   [](const Permutation& a, const Permutation& b) {
                     return a.order() > b.order();
                   });
  std::vector<Permutation> gens;
  PermGroup sub(g.degree(), {});
  for (const Permutation& e : els) {
    if (sub.order() == g.order()) break;
    if (!sub.contains(e)) {
      gens.push_back(e);
      sub = PermGroup(g.degree(), gens);
    }
  }
  for (std::size_t i = 0; i < gens.size();) {
    auto trial = gens;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (PermGroup(g.degree(), trial).order() == g.order()) {
      gens = std::move(trial);
    } else {
      ++i;
    }
  }
  return gens;
}

// Checks that mapping gens[0..k) -> images[0..k) extends to an injective
// homomorphism on the subgroup the prefix generates.
bool prefix_consistent(const std::vector<Permutation>& gens,
                       const std::vector<Permutation>& images,
                       std::size_t k) {
  std::map<Permutation, Permutation> phi;
  std::vector<Permutation> order;
  const int deg_g = gens.front().degree();
  const int deg_h = images.front().degree();
  phi.emplace(Permutation(deg_g), Permutation(deg_h));
  order.emplace_back(deg_g);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation next = order[i] * gens[j];
      if (phi.find(next) == phi.end()) {
        phi.emplace(next, phi.at(order[i]) * images[j]);
        order.push_back(std::move(next));
      }
    }
  }
  std::set<Permutation> image_set;
  for (const Permutation& x : order) {
    if (!image_set.insert(phi.at(x)).second) return false;  // not injective
  }
  for (const Permutation& x : order) {
    for (std::size_t j = 0; j < k; ++j) {
      if (phi.at(x * gens[j]) != phi.at(x) * images[j]) return false;
    }
  }
  return true;
}

}  // namespace

bool group_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  const GroupFingerprint& fg = g.fingerprint();
  const GroupFingerprint& fh = h.fingerprint();
  if (fg != fh) return false;
  // Finite abelian groups are determined by their element-order counts.
  if (fg.abelian) return true;

  const std::vector<Permutation> gens = small_generating_set(g);
  std::vector<int> class_of_h;
  const std::vector<int> h_class_sizes =
      conjugacy_class_sizes(h, class_of_h);
  std::vector<int> class_of_g;
  const std::vector<int> g_class_sizes =
      conjugacy_class_sizes(g, class_of_g);

  const auto& h_els = h.elements();
  const auto& g_els = g.elements();
  std::map<Permutation, int> g_index;
  for (std::size_t i = 0; i < g_els.size(); ++i) {
    g_index[g_els[i]] = static_cast<int>(i);
  }

  std::vector<std::vector<Permutation>> candidates;
  for (const Permutation& gen : gens) {
    const int cls = class_of_g[static_cast<std::size_t>(g_index.at(gen))];
    const int size = g_class_sizes[static_cast<std::size_t>(cls)];
    const int ord = gen.order();
    std::vector<Permutation> cand;
    for (std::size_t i = 0; i < h_els.size(); ++i) {
      if (h_els[i].order() == ord &&
          h_class_sizes[static_cast<std::size_t>(
              class_of_h[i])] == size) {
        cand.push_back(h_els[i]);
      }
    }
    if (cand.empty()) return false;
    candidates.push_back(std::move(cand));
  }

  std::vector<Permutation> images;
  auto rec = [&](auto&& self, std::size_t level) -> bool {
    if (level == gens.size()) return true;
    for (const Permutation& cand : candidates[level]) {
      images.resize(level);
      images.push_back(cand);
      // At the last level this verifies an injective homomorphism on all
      // of g; its image then has full order, so it is onto h.
      if (!prefix_consistent(gens, images, level + 1)) continue;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw InternalError("cyclic group needs n >= 1");
  if (n == 1) return PermGroup(1, {});
  std::vector<int> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  return PermGroup(n, {Permutation(std::move(rot))});
}

PermGroup dihedral_group(int n) {
  if (n < 1) throw InternalError("dihedral group needs n >= 1");
  if (n == 1) {
    return PermGroup(2, {Permutation(std::vector<int>{1, 0})});
  }
  if (n == 2) {
    return PermGroup(4, {Permutation(std::vector<int>{1, 0, 2, 3}),
                         Permutation(std::vector<int>{0, 1, 3, 2})});
  }
  std::vector<int> rot(static_cast<std::size_t>(n));
  std::vector<int> flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    flip[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return PermGroup(
      n, {Permutation(std::move(rot)), Permutation(std::move(flip))});
}

PermGroup symmetric_group(int n) {
  if (n < 1) throw InternalError("symmetric group needs n >= 1");
  if (n == 1) return PermGroup(1, {});
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::vector<int> swap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    swap[static_cast<std::size_t>(i)] = i;
  }
  swap[0] = 1;
  swap[1] = 0;
  return PermGroup(
      n, {Permutation(std::move(swap)), Permutation(std::move(cycle))});
}

PermGroup alternating_group(int n) {
  if (n < 3) return PermGroup(n < 1 ? 1 : n, {});
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    images[0] = 1;
    images[1] = k;
    images[static_cast<std::size_t>(k)] = 0;
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup holomorph_group(int n) {
  if (n < 1) throw InternalError("holomorph needs n >= 1");
  if (n == 1) return PermGroup(1, {});
  std::vector<Permutation> gens;
  std::vector<int> shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % n;
  gens.emplace_back(std::move(shift));
  for (int a = 2; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<int> mul(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      mul[static_cast<std::size_t>(i)] = (a * i) % n;
    }
    gens.emplace_back(std::move(mul));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const int degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < a.degree(); ++i) {
      images[static_cast<std::size_t>(i)] = g(i);
    }
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < b.degree(); ++i) {
      images[static_cast<std::size_t>(a.degree() + i)] = a.degree() + g(i);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

namespace {

PermGroup reference_atom(const std::string& name) {
  auto parse_int = [&](std::size_t offset, std::size_t tail) {
    return std::stoi(name.substr(offset, name.size() - offset - tail));
  };
  try {
    if (name.rfind("Hol(Z", 0) == 0 && name.back() == ')') {
      return holomorph_group(parse_int(5, 1));
    }
    if (name.size() >= 2) {
      switch (name[0]) {
        case 'Z':
          return cyclic_group(parse_int(1, 0));
        case 'D':
          return dihedral_group(parse_int(1, 0));
        case 'S':
          return symmetric_group(parse_int(1, 0));
        case 'A':
          return alternating_group(parse_int(1, 0));
        default:
          break;
      }
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw ParseError("unknown group name '" + name + "'");
}

}  // namespace

PermGroup reference_group(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = name.find(" x ", pos);
    if (next == std::string::npos) {
      parts.push_back(name.substr(pos));
      break;
    }
    parts.push_back(name.substr(pos, next - pos));
    pos = next + 3;
  }
  PermGroup out = reference_atom(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = direct_product(out, reference_atom(parts[i]));
  }
  return out;
}

std::vector<CatalogEntry> default_catalog(int max_family_param) {
  std::vector<CatalogEntry> raw;
  auto add = [&raw](std::string name) {
    raw.push_back({name, reference_group(name)});
  };
  add("Z1");
  for (int k = 2; k <= std::max(max_family_param, 2); ++k) {
    add("Z" + std::to_string(k));
  }
  add("Z2 x Z2");
  for (int k = 3; k <= max_family_param; ++k) {
    add("D" + std::to_string(k));
  }
  add("A4");
  add("S4");
  add("A5");
  add("S5");
  add("Z2 x A4");
  add("Z2 x S4");
  add("Z2 x S5");
  add("Z2 x Z2 x S4");
  for (int k = 3; k <= max_family_param; ++k) {
    add("Hol(Z" + std::to_string(k) + ")");
  }
  for (int k = 3; k <= max_family_param; ++k) {
    add("Z2 x Hol(Z" + std::to_string(k) + ")");
  }

  // Drop entries isomorphic to an earlier one (Hol(Z3) = D3 and so on), so
  // identification can never be ambiguous.
  std::vector<CatalogEntry> out;
  for (auto& entry : raw) {
    bool duplicate = false;
    for (const auto& kept : out) {
      if (kept.group.order() == entry.group.order() &&
          group_isomorphic(kept.group, entry.group)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.push_back(std::move(entry));
  }
  return out;
}

std::string identify(const PermGroup& g,
                     const std::vector<CatalogEntry>& catalog) {
  std::vector<const CatalogEntry*> matches;
  for (const CatalogEntry& entry : catalog) {
    if (entry.group.order() == g.order() &&
        group_isomorphic(g, entry.group)) {
      matches.push_back(&entry);
    }
  }
  if (matches.empty()) return "unrecognized";
  if (matches.size() > 1) {
    throw InternalError("catalog is redundant: '" + matches[0]->name +
                        "' and '" + matches[1]->name + "' both match");
  }
  return matches.front()->name;
}

}  // namespace knotq
