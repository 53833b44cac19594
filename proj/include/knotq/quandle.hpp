#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "knotq/enumerator.hpp"

namespace knotq {

struct QuandleProvenance {
  QuandlePresentation presentation;
  std::vector<int> generator_element;
  std::vector<std::pair<GeneratorId, Word>> element_words;
};

/// Finite quandle as full operation tables, elements 0-based. Constructors
/// verify idempotence, right invertibility and self-distributivity
/// exhaustively; a violation throws InternalError since these tables are
/// only ever produced by our own pipeline.
class FiniteQuandle {
 public:
  FiniteQuandle(std::vector<std::vector<int>> op,
                std::vector<std::vector<int>> inv_op,
                std::optional<QuandleProvenance> provenance = std::nullopt);

  int size() const { return m_; }
  int op(int x, int y) const { return op_[x][y]; }
  int inv_op(int x, int y) const { return inv_[x][y]; }

  /// op and inv_op coincide exactly when every point symmetry is an
  /// involution.
  bool involutory() const;

  /// Images of the point symmetry S_x : y -> y op x.
  std::vector<int> point_symmetry(int x) const;

  const std::optional<QuandleProvenance>& provenance() const { return prov_; }

 private:
  int m_ = 0;
  std::vector<std::vector<int>> op_, inv_;
  std::optional<QuandleProvenance> prov_;
};

/// Operation table of a completed Cayley graph. The symmetry at element
/// b^w acts as the w-conjugate of the symmetry at b.
FiniteQuandle from_cayley(const CayleyTable& t);

/// Z/qZ with i op j = 2j - i (mod q); involutory for every q >= 1.
FiniteQuandle dihedral_quandle(int q);

/// Orbits under all point symmetries, each sorted, listed by smallest
/// member.
std::vector<std::vector<int>> components(const FiniteQuandle& q);

/// Checks (x^y)^(z^w) == (x^z)^(y^w) over all 4-tuples.
bool is_medial(const FiniteQuandle& q);

/// An operation-preserving bijection a -> b if one exists. The witness
/// satisfies phi(x op y) == phi(x) op phi(y) everywhere.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a,
                                                 const FiniteQuandle& b);

/// Every operation-preserving bijection a -> b.
std::vector<std::vector<int>> all_isomorphisms(const FiniteQuandle& a,
                                               const FiniteQuandle& b);

/// Inclusion-minimal generating set, found greedily then pruned. The
/// one-element quandle yields its single element.
std::vector<int> minimal_generating_set(const FiniteQuandle& q);

/// Smallest subset containing the seeds and closed under op and inv_op.
std::vector<int> subquandle_closure(const FiniteQuandle& q,
                                    std::vector<int> seeds);

nlohmann::json quandle_to_json(const FiniteQuandle& q);

}  // namespace knotq
