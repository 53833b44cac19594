#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "knotq/presentation.hpp"
#include "knotq/words.hpp"

namespace knotq {

struct EnumerateOptions {
  int cap = 100000;
  /// Trace secondary relations cyclically reduced (and sign-normalized for
  /// n = 2) with duplicates dropped. Disabling this traces the raw reduced
  /// words; the resulting table must be identical either way.
  bool simplify_universal = true;
  bool reverse_secondary_order = false;
};

/// Completed Cayley graph of a finite n-quandle: one permutation action per
/// generator plus a representative expression base^word for every element.
/// Elements are 0-based and numbered by ascending surviving vertex id, so
/// repeated runs produce identical tables.
struct CayleyTable {
  int size = 0;
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> action;          // [generator][element]
  std::vector<std::vector<int>> inverse_action;  // [generator][element]
  std::vector<int> generator_element;            // element of each generator
  std::vector<std::pair<GeneratorId, Word>> element_words;
  QuandlePresentation presentation;

  int act(int element, Letter l) const;
  int act(int element, const Word& w) const;

  /// Orbits of the elements under all generator actions, each sorted, listed
  /// by smallest member. These are the algebraic components of the quandle
  /// and match the link's component count.
  std::vector<std::vector<int>> components() const;
};

/// Working graph of the diagramming method: numbered vertices, directed
/// labeled edges, a union-find over coincident vertices, and a queue of
/// pending coincidences. Vertex ids are 1-based; the first g vertices are
/// the generators.
class EnumerationState {
 public:
  /// Seeds one vertex per generator, each with its own idempotence loop.
  EnumerationState(int generator_count, int cap);

  int generator_count() const { return gens_; }
  int vertex_of_generator(GeneratorId g) const { return g + 1; }

  int created() const { return created_; }
  int live() const { return live_; }
  int merged() const { return created_ - live_; }

  int find(int v);
  std::optional<int> neighbor(int v, Letter l);

  /// Walks w from start, following existing edges and creating vertices for
  /// missing ones. With forced_end, the final edge is installed toward it
  /// (or a coincidence is queued when the walk ends elsewhere).
  void trace(int start, const Word& w, std::optional<int> forced_end);

  void enqueue_coincidence(int u, int v);

  /// Merges queued coincidences to exhaustion. Merging unions edge maps;
  /// a generator with two distinct images queues a further coincidence.
  /// The smaller vertex id always survives.
  void collapse();

  bool pending() const { return !queue_.empty(); }

  /// True when every live vertex has a forward and backward edge for every
  /// generator.
  bool complete();

  /// Creates a fresh vertex for every missing edge of every live vertex.
  /// Only needed in fundamental mode; n-relations fill edges otherwise.
  int fill_missing_edges();

  std::vector<int> live_vertices();

  /// The expression base^word recorded when the vertex was created.
  std::pair<GeneratorId, Word> representative_word(int v) const;

 private:
  int new_vertex(int pred, Letter via);
  void set_edge(int v, GeneratorId g, int w);
  int& slot(std::vector<int>& table, int v, GeneratorId g) {
    return table[static_cast<std::size_t>(v) * gens_ + g];
  }
  std::optional<int> resolve(std::vector<int>& table, int v, GeneratorId g);

  int gens_;
  int cap_;
  int created_ = 0;
  int live_ = 0;
  std::vector<int> parent_;
  std::vector<int> fwd_, bwd_;  // (created_+1) * gens_ slots, 0 = undefined
  std::vector<int> pred_;       // creating vertex, 0 for seeds
  std::vector<Letter> via_;     // creating letter
  std::vector<std::pair<int, int>> queue_;
};

/// Todd-Coxeter style enumeration for quandle presentations: trace the
/// primary relations, then per vertex in ascending order every n-quandle
/// and secondary relation, collapsing after each trace. Throws CapExceeded
/// when the graph outgrows opts.cap (a likely infinite quandle) and
/// InvalidPresentation on a malformed input.
CayleyTable enumerate(const QuandlePresentation& p,
                      const EnumerateOptions& opts = {});
CayleyTable enumerate(const QuandlePresentation& p, int cap);

struct DotOptions {
  /// Also emit the loop x_i --x_i--> x_i at each generator vertex.
  bool include_idempotence_loops = false;
};

/// Graphviz rendering: nodes labeled by representative words, one styled
/// edge per generator action (solid, dashed, dotted, then colors), drawn
/// undirected for involutory tables.
std::string to_dot(const CayleyTable& t, const DotOptions& opts = {});

nlohmann::json cayley_to_json(const CayleyTable& t);

}  // namespace knotq
