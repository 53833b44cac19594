#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotq/quandle.hpp"

namespace knotq {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// Function composition: (p * q)(x) = p(q(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  /// Ascending cycle lengths, fixed points included.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Cheap isomorphism invariants. Equal fingerprints are necessary for
/// isomorphism and, across the bundled catalog, sufficient to tell entries
/// of equal order apart.
struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::pair<int, std::size_t>> element_orders;  // (order, count)

  friend bool operator==(const GroupFingerprint&,
                         const GroupFingerprint&) = default;
};

/// A permutation group given by generators, with its full element set
/// computed on demand by breadth-first product closure. Group orders in
/// scope stay in the hundreds, so the element list is the whole data
/// structure; no stabilizer chains.
class PermGroup {
 public:
  explicit PermGroup(int degree, std::vector<Permutation> generators = {},
                     int closure_cap = 10080);

  /// Wraps an already-closed element set (the generators must generate it).
  static PermGroup from_elements(int degree,
                                 std::vector<Permutation> generators,
                                 std::vector<Permutation> elements,
                                 int closure_cap = 10080);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Deterministic discovery order; throws CapExceeded past closure_cap.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;

  /// Computed once, cached.
  const GroupFingerprint& fingerprint() const;

 private:
  int degree_;
  int cap_;
  std::vector<Permutation> generators_;
  mutable std::optional<std::vector<Permutation>> elements_;
  mutable std::vector<Permutation> sorted_;
  mutable std::optional<GroupFingerprint> fingerprint_;
};

GroupFingerprint fingerprint(const PermGroup& g);

/// Subgroup of Aut generated by the point symmetries.
PermGroup inner_group(const FiniteQuandle& q);

/// Subgroup generated by all products S_x S_y^-1.
PermGroup transvection_group(const FiniteQuandle& q);

/// Every operation-preserving bijection, via backtracking over images of a
/// minimal generating set; returned with a small generating subset.
PermGroup automorphism_group(const FiniteQuandle& q);

/// Isomorphism test for fully enumerated groups: fingerprint gate, then a
/// backtracking search mapping a generating set of g into h.
bool group_isomorphic(const PermGroup& g, const PermGroup& h);

PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);  // order 2n
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

/// Affine maps x -> ax + b on Z_n with a a unit; order n * phi(n).
PermGroup holomorph_group(int n);

/// Acts on the disjoint union of the factors' domains.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Builds a group from its catalog name: "Z6", "D5", "S4", "A5",
/// "Hol(Z8)", and "x"-separated direct products such as "Z2 x S4".
PermGroup reference_group(const std::string& name);

struct CatalogEntry {
  std::string name;
  PermGroup group;
};

/// Named reference groups for identification, deduplicated up to
/// isomorphism (e.g. Hol(Z3) falls away in favor of D3). Families are
/// instantiated for parameters up to max_family_param.
std::vector<CatalogEntry> default_catalog(int max_family_param);

/// Name of the unique catalog entry isomorphic to g, or "unrecognized".
/// Two matching entries throw InternalError: the catalog is redundant.
std::string identify(const PermGroup& g,
                     const std::vector<CatalogEntry>& catalog);

}  // namespace knotq
