#include "raag/word.hpp"

#include <algorithm>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

Raag::Raag(DefiningGraph graph) : graph_(std::move(graph)) {}

RaagPtr make_raag(DefiningGraph graph) { return std::make_shared<const Raag>(std::move(graph)); }

Word Raag::reduce(std::span<const Letter> word) const {
  Word out;
  out.reserve(word.size());
  for (Letter l : word) {
    bool cancelled = false;
    for (int j = static_cast<int>(out.size()) - 1; j >= 0; --j) {
      if (out[j].gen == l.gen) {
        if (out[j].inverse != l.inverse) {
          out.erase(out.begin() + j);
          cancelled = true;
        }
        break;
      }
      if (!commute(out[j].gen, l.gen)) break;
    }
    if (!cancelled) out.push_back(l);
  }
  return out;
}

Word Raag::normal_form(std::span<const Letter> word) const {
  Word rest = reduce(word);
  Word out;
  out.reserve(rest.size());
  // Lex-least linearization of the commutation trace: repeatedly take the
  // smallest letter that every earlier letter commutes past.
  while (!rest.empty()) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      bool free = true;
      for (int j = 0; j < i && free; ++j) free = commute(rest[j].gen, rest[i].gen);
      if (free && (best < 0 || rest[i] < rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return out;
}

Word Raag::multiply(const Word& x, const Word& y) const {
  Word w = x;
  w.insert(w.end(), y.begin(), y.end());
  return normal_form(w);
}

Word Raag::invert(const Word& x) const {
  Word w;
  w.reserve(x.size());
  for (auto it = x.rbegin(); it != x.rend(); ++it) w.push_back(it->inverted());
  return normal_form(w);
}

std::vector<char> Raag::indicator(const VertexSet& s) const {
  std::vector<char> in(rank(), 0);
  for (Vertex v : s) in.at(v) = 1;
  return in;
}

int Raag::right_movable(const Word& x, const std::vector<char>& in_set) const {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (!in_set[x[i].gen]) continue;
    bool free = true;
    for (std::size_t j = i + 1; j < x.size() && free; ++j) free = commute(x[i].gen, x[j].gen);
    if (free) return i;
  }
  return -1;
}

int Raag::left_movable(const Word& x, const std::vector<char>& in_set) const {
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (!in_set[x[i].gen]) continue;
    bool free = true;
    for (int j = 0; j < i && free; ++j) free = commute(x[i].gen, x[j].gen);
    if (free) return i;
  }
  return -1;
}

Word Raag::coset_rep(const Word& x, const std::vector<char>& in_set) const {
  Word w = x;
  for (int i = right_movable(w, in_set); i >= 0; i = right_movable(w, in_set)) w.erase(w.begin() + i);
  return normal_form(w);
}

Word Raag::left_coset_rep(const Word& x, const std::vector<char>& in_set) const {
  Word w = x;
  for (int i = left_movable(w, in_set); i >= 0; i = left_movable(w, in_set)) w.erase(w.begin() + i);
  return normal_form(w);
}

bool Raag::in_product(const Word& x, const std::vector<char>& a, const std::vector<char>& b) const {
  return split_product(x, a, b).has_value();
}

std::optional<std::pair<Word, Word>> Raag::split_product(const Word& x, const std::vector<char>& a,
                                                         const std::vector<char>& b) const {
  Word w = x, p, q;
  while (!w.empty()) {
    if (int i = left_movable(w, a); i >= 0) {
      p.push_back(w[i]);
      w.erase(w.begin() + i);
    } else if (int j = right_movable(w, b); j >= 0) {
      q.insert(q.begin(), w[j]);
      w.erase(w.begin() + j);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(normal_form(p), normal_form(q));
}

std::optional<int> Raag::power_mod_subgroup(const Word& x, Vertex t, const std::vector<char>& in_set) const {
  Word r = coset_rep(x, in_set);
  int k = 0;
  for (Letter l : r) {
    if (l.gen != t) return std::nullopt;
    k += l.inverse ? -1 : 1;
  }
  return k;
}

// ---- GroupElement -------------------------------------------------------------

GroupElement::GroupElement(RaagPtr group, std::span<const Letter> word) : group_(std::move(group)) {
  for (Letter l : word)
    if (l.gen < 0 || l.gen >= static_cast<Vertex>(group_->rank()))
      throw InputError("letter refers to a generator outside the group");
  word_ = group_->normal_form(word);
}

GroupElement GroupElement::inverse() const {
  Word w;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(it->inverted());
  return GroupElement(group_, w);
}

VertexSet GroupElement::support() const {
  VertexSet s;
  for (Letter l : word_) s.push_back(l.gen);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

GroupElement normal_form(const RaagPtr& group, std::span<const Letter> word) {
  return GroupElement(group, word);
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.group_ptr() != y.group_ptr()) throw PreconditionError("graph mismatch");
  Word w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return GroupElement(x.group_ptr(), w);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) { return multiply(x, y); }

bool in_special_subgroup(const GroupElement& x, const VertexSet& s) {
  return std::all_of(x.word().begin(), x.word().end(),
                     [&](Letter l) { return std::binary_search(s.begin(), s.end(), l.gen); });
}

// ---- cosets ----------------------------------------------------------------

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Cone: return "cone";
    case VertexKind::Singular: return "singular";
    case VertexKind::Flat: return "flat";
  }
  return "unknown";
}

std::size_t CosetKeyHash::operator()(const CosetKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.kind) * 1000003u;
  h ^= static_cast<std::size_t>(k.u + 1) * 0x9e3779b97f4a7c15ull;
  h = h * 31 + static_cast<std::size_t>(k.w + 1);
  for (Letter l : k.rep) h = h * 1315423911u + static_cast<std::size_t>(2 * l.gen + (l.inverse ? 1 : 0));
  return h;
}

CosetKey coset_key(const Raag& group, const Word& x, VertexKind kind, Vertex u, Vertex w) {
  CosetKey key;
  key.kind = kind;
  std::vector<char> in(group.rank(), 0);
  switch (kind) {
    case VertexKind::Cone:
      key.rep = group.normal_form(x);
      return key;
    case VertexKind::Singular:
      if (u < 0 || u >= static_cast<Vertex>(group.rank())) throw PreconditionError("singular key needs a generator");
      key.u = u;
      in[u] = 1;
      break;
    case VertexKind::Flat:
      if (u < 0 || w < 0 || !group.graph().adjacent(u, w))
        throw PreconditionError("flat key requires an edge of the defining graph");
      key.u = std::min(u, w);
      key.w = std::max(u, w);
      in[u] = in[w] = 1;
      break;
  }
  key.rep = group.coset_rep(group.normal_form(x), in);
  return key;
}

CosetKey coset_key(const GroupElement& x, VertexKind kind, Vertex u, Vertex w) {
  return coset_key(x.group(), x.word(), kind, u, w);
}

// ---- text syntax -------------------------------------------------------------

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    w.push_back({g.index(tok), inv});
  }
  return w;
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += g.name(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

std::string format_key(const DefiningGraph& g, const CosetKey& k) {
  std::string rep = k.rep.empty() ? "1" : format_word(g, k.rep);
  switch (k.kind) {
    case VertexKind::Cone: return rep;
    case VertexKind::Singular: return rep + "<" + g.name(k.u) + ">";
    case VertexKind::Flat: return rep + "<" + g.name(k.u) + "," + g.name(k.w) + ">";
  }
  return rep;
}

}  // namespace raag
