#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A generator or its inverse. Ordered a < a^-1 < b < b^-1 < ... by vertex index.
struct Letter {
  Vertex gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// The right-angled Artin group G(Γ): one generator per vertex of Γ and a
/// commutation relation per edge. Owns the defining graph.
class Raag {
 public:
  explicit Raag(DefiningGraph graph);

  const DefiningGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.size(); }
  bool commute(Vertex a, Vertex b) const { return a != b && graph_.adjacent(a, b); }

  /// Freely and commutatively reduced word (a geodesic), not yet shortlex.
  Word reduce(std::span<const Letter> word) const;
  /// Shortlex-least geodesic representative.
  Word normal_form(std::span<const Letter> word) const;
  Word multiply(const Word& x, const Word& y) const;
  Word invert(const Word& x) const;

  /// Shortest representative of the left coset x<S>; x must be in normal form.
  Word coset_rep(const Word& x, const std::vector<char>& in_set) const;
  /// Shortest representative of the right coset <S>x; x must be in normal form.
  Word left_coset_rep(const Word& x, const std::vector<char>& in_set) const;
  /// x ∈ <A><B>, decided by greedily stripping A-prefixes and B-suffixes.
  bool in_product(const Word& x, const std::vector<char>& a, const std::vector<char>& b) const;
  /// Witness (p, q) with x = p q, p ∈ <A>, q ∈ <B>, both in normal form.
  std::optional<std::pair<Word, Word>> split_product(const Word& x, const std::vector<char>& a,
                                                     const std::vector<char>& b) const;
  /// If x ∈ t^k <S> (t not in S), returns k.
  std::optional<int> power_mod_subgroup(const Word& x, Vertex t, const std::vector<char>& in_set) const;

  std::vector<char> indicator(const VertexSet& s) const;

 private:
  // Index of a letter with generator in the set that can be commuted to the
  // right end (or left end), or -1.
  int right_movable(const Word& x, const std::vector<char>& in_set) const;
  int left_movable(const Word& x, const std::vector<char>& in_set) const;

  DefiningGraph graph_;
};

using RaagPtr = std::shared_ptr<const Raag>;
RaagPtr make_raag(DefiningGraph graph);

/// An element of G(Γ), always stored in shortlex normal form, so equality of
/// elements is equality of stored words.
class GroupElement {
 public:
  GroupElement(RaagPtr group, std::span<const Letter> word);
  static GroupElement identity(RaagPtr group) { return GroupElement(std::move(group), {}); }

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const Raag& group() const { return *group_; }
  const RaagPtr& group_ptr() const { return group_; }
  bool is_identity() const { return word_.empty(); }

  GroupElement inverse() const;
  /// Generators occurring in the normal form (sorted).
  VertexSet support() const;

  bool operator==(const GroupElement& other) const {
    return group_ == other.group_ && word_ == other.word_;
  }

 private:
  RaagPtr group_;
  Word word_;
};

GroupElement normal_form(const RaagPtr& group, std::span<const Letter> word);
/// Throws PreconditionError when x and y belong to different groups.
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement operator*(const GroupElement& x, const GroupElement& y);
bool in_special_subgroup(const GroupElement& x, const VertexSet& s);

// ---- cosets ----------------------------------------------------------------

enum class VertexKind { Cone, Singular, Flat };
std::string to_string(VertexKind kind);

/// Canonical key for the cosets g, g<u>, g<u,w> labeling vertices of the
/// flat space. `u < w` for flat keys; unused generators are -1.
struct CosetKey {
  VertexKind kind = VertexKind::Cone;
  Vertex u = -1;
  Vertex w = -1;
  Word rep;

  auto operator<=>(const CosetKey&) const = default;
};

struct CosetKeyHash {
  std::size_t operator()(const CosetKey& k) const noexcept;
};

/// Key of x's coset of the trivial group, <u>, or <u,w>. For flat keys
/// {u,w} must be an edge (PreconditionError otherwise).
CosetKey coset_key(const GroupElement& x, VertexKind kind, Vertex u = -1, Vertex w = -1);
CosetKey coset_key(const Raag& group, const Word& x, VertexKind kind, Vertex u = -1, Vertex w = -1);

// ---- text syntax -------------------------------------------------------------

/// Whitespace-separated tokens "a" or "a^-1". Throws InputError on unknown names.
Word parse_word(const DefiningGraph& g, std::string_view text);
std::string format_word(const DefiningGraph& g, const Word& w);
std::string format_key(const DefiningGraph& g, const CosetKey& k);

}  // namespace raag
