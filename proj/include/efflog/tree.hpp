#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace efflog {

/// Leaf payload of unit-type trees.
struct Unit {
  bool operator==(const Unit&) const { return true; }
};

/// Finite, depth-bounded approximation of an effect tree over payloads P.
///
/// Two bottom flavors: BotCut marks truncation (fuel or width exhausted,
/// unknown continuation), BotDiv marks certified divergence. An Op node with
/// infinite=true stands for an a^N-arity node; its children beyond the
/// materialized vector are implicitly BotCut.
template <class P>
class Tree {
 public:
  enum class Kind { BotCut, BotDiv, Leaf, Op };

  struct Node {
    Kind kind;
    std::optional<P> payload;
    std::string op;
    std::optional<uint64_t> index;
    std::vector<Tree> children;
    bool infinite = false;
  };

  static Tree cut() { return Tree(std::make_shared<const Node>(Node{Kind::BotCut, {}, "", {}, {}, false})); }
  static Tree div() { return Tree(std::make_shared<const Node>(Node{Kind::BotDiv, {}, "", {}, {}, false})); }
  static Tree leaf(P payload) {
    return Tree(std::make_shared<const Node>(Node{Kind::Leaf, std::move(payload), "", {}, {}, false}));
  }
  static Tree op(std::string name, std::vector<Tree> children, std::optional<uint64_t> index = {},
                 bool infinite = false) {
    return Tree(std::make_shared<const Node>(
        Node{Kind::Op, {}, std::move(name), index, std::move(children), infinite}));
  }

  Kind kind() const { return n_->kind; }
  bool is_cut() const { return kind() == Kind::BotCut; }
  bool is_div() const { return kind() == Kind::BotDiv; }
  bool is_leaf() const { return kind() == Kind::Leaf; }
  bool is_op() const { return kind() == Kind::Op; }

  const P& payload() const { return *n_->payload; }
  const std::string& op_name() const { return n_->op; }
  const std::optional<uint64_t>& index() const { return n_->index; }
  const std::vector<Tree>& children() const { return n_->children; }
  bool infinite() const { return n_->infinite; }

  /// Child i, with out-of-range children of infinite nodes read as BotCut.
  Tree child(size_t i) const {
    if (i < n_->children.size()) return n_->children[i];
    return cut();
  }

  template <class Eq>
  bool equal(const Tree& other, Eq payload_eq) const {
    if (n_ == other.n_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
      case Kind::BotCut:
      case Kind::BotDiv:
        return true;
      case Kind::Leaf:
        return payload_eq(payload(), other.payload());
      case Kind::Op: {
        if (op_name() != other.op_name() || index() != other.index() ||
            infinite() != other.infinite())
          return false;
        size_t m = std::max(children().size(), other.children().size());
        if (!infinite() && children().size() != other.children().size()) return false;
        for (size_t i = 0; i < m; ++i)
          if (!child(i).equal(other.child(i), payload_eq)) return false;
        return true;
      }
    }
    return false;
  }

  template <class Hash>
  size_t hash(Hash payload_hash) const {
    size_t h = 0xcbf29ce484222325ull;
    hash_rec(payload_hash, h);
    return h;
  }

  size_t node_count() const {
    size_t c = 1;
    for (const Tree& t : children()) c += t.node_count();
    return c;
  }

  size_t depth() const {
    size_t d = 0;
    for (const Tree& t : children()) d = std::max(d, t.depth());
    return d + 1;
  }

 private:
  template <class Hash>
  void hash_rec(Hash payload_hash, size_t& h) const {
    auto mix = [&h](size_t v) { h = h * 1000003u + v + 0x9e3779b97f4a7c15ull; };
    mix(static_cast<size_t>(kind()));
    switch (kind()) {
      case Kind::Leaf:
        mix(payload_hash(payload()));
        break;
      case Kind::Op:
        mix(std::hash<std::string>{}(op_name()));
        if (index()) mix(static_cast<size_t>(*index()) + 1);
        mix(infinite() ? 2 : 3);
        for (const Tree& t : children()) t.hash_rec(payload_hash, h);
        break;
      default:
        break;
    }
  }

  explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// t1 <= t2 in the prune order: BotCut below everything; BotDiv only below
/// BotDiv; leaves and op labels must agree.
template <class P, class Eq>
bool tree_leq(const Tree<P>& t1, const Tree<P>& t2, Eq payload_eq) {
  using K = typename Tree<P>::Kind;
  if (t1.kind() == K::BotCut) return true;
  if (t1.kind() == K::BotDiv) return t2.kind() == K::BotDiv;
  if (t1.kind() != t2.kind()) return false;
  if (t1.kind() == K::Leaf) return payload_eq(t1.payload(), t2.payload());
  if (t1.op_name() != t2.op_name() || t1.index() != t2.index() || t1.infinite() != t2.infinite())
    return false;
  if (!t1.infinite() && t1.children().size() != t2.children().size()) return false;
  size_t m = std::max(t1.children().size(), t2.children().size());
  for (size_t i = 0; i < m; ++i)
    if (!tree_leq(t1.child(i), t2.child(i), payload_eq)) return false;
  return true;
}

template <class P, class F>
auto tree_map(const Tree<P>& t, F f) -> Tree<decltype(f(std::declval<const P&>()))> {
  using Q = decltype(f(std::declval<const P&>()));
  using K = typename Tree<P>::Kind;
  switch (t.kind()) {
    case K::BotCut:
      return Tree<Q>::cut();
    case K::BotDiv:
      return Tree<Q>::div();
    case K::Leaf:
      return Tree<Q>::leaf(f(t.payload()));
    case K::Op: {
      std::vector<Tree<Q>> kids;
      kids.reserve(t.children().size());
      for (const auto& c : t.children()) kids.push_back(tree_map(c, f));
      return Tree<Q>::op(t.op_name(), std::move(kids), t.index(), t.infinite());
    }
  }
  return Tree<Q>::cut();
}

/// Monad multiplication: graft each leaf's carried tree in place.
template <class P>
Tree<P> mu_flatten(const Tree<Tree<P>>& r) {
  using K = typename Tree<Tree<P>>::Kind;
  switch (r.kind()) {
    case K::BotCut:
      return Tree<P>::cut();
    case K::BotDiv:
      return Tree<P>::div();
    case K::Leaf:
      return r.payload();
    case K::Op: {
      std::vector<Tree<P>> kids;
      kids.reserve(r.children().size());
      for (const auto& c : r.children()) kids.push_back(mu_flatten(c));
      return Tree<P>::op(r.op_name(), std::move(kids), r.index(), r.infinite());
    }
  }
  return Tree<P>::cut();
}

enum class Verdict { True, False, Unknown };

inline Verdict vnot(Verdict a) {
  if (a == Verdict::True) return Verdict::False;
  if (a == Verdict::False) return Verdict::True;
  return Verdict::Unknown;
}
inline Verdict vand(Verdict a, Verdict b) {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::True && b == Verdict::True) return Verdict::True;
  return Verdict::Unknown;
}
inline Verdict vor(Verdict a, Verdict b) {
  if (a == Verdict::True || b == Verdict::True) return Verdict::True;
  if (a == Verdict::False && b == Verdict::False) return Verdict::False;
  return Verdict::Unknown;
}
inline Verdict vimplies(Verdict a, Verdict b) { return vor(vnot(a), b); }
inline Verdict viff(Verdict a, Verdict b) { return vand(vimplies(a, b), vimplies(b, a)); }
inline Verdict vbool(bool b) { return b ? Verdict::True : Verdict::False; }
inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    default:
      return "unknown";
  }
}

/// t[in A] for a boolean membership predicate: members become *, non-members
/// become BotDiv (a definite non-success), bottoms keep their flavor.
template <class P, class Pred>
Tree<Unit> restrict_tree(const Tree<P>& t, Pred member) {
  using K = typename Tree<P>::Kind;
  switch (t.kind()) {
    case K::BotCut:
      return Tree<Unit>::cut();
    case K::BotDiv:
      return Tree<Unit>::div();
    case K::Leaf:
      return member(t.payload()) ? Tree<Unit>::leaf(Unit{}) : Tree<Unit>::div();
    case K::Op: {
      std::vector<Tree<Unit>> kids;
      kids.reserve(t.children().size());
      for (const auto& c : t.children()) kids.push_back(restrict_tree(c, member));
      return Tree<Unit>::op(t.op_name(), std::move(kids), t.index(), t.infinite());
    }
  }
  return Tree<Unit>::cut();
}

/// Three-valued restriction: an Unknown leaf verdict becomes BotCut, so that
/// definite answers downstream stay sound.
template <class P, class Pred>
Tree<Unit> restrict_tree3(const Tree<P>& t, Pred member_verdict) {
  using K = typename Tree<P>::Kind;
  switch (t.kind()) {
    case K::BotCut:
      return Tree<Unit>::cut();
    case K::BotDiv:
      return Tree<Unit>::div();
    case K::Leaf:
      switch (member_verdict(t.payload())) {
        case Verdict::True:
          return Tree<Unit>::leaf(Unit{});
        case Verdict::False:
          return Tree<Unit>::div();
        default:
          return Tree<Unit>::cut();
      }
    case K::Op: {
      std::vector<Tree<Unit>> kids;
      kids.reserve(t.children().size());
      for (const auto& c : t.children()) kids.push_back(restrict_tree3(c, member_verdict));
      return Tree<Unit>::op(t.op_name(), std::move(kids), t.index(), t.infinite());
    }
  }
  return Tree<Unit>::cut();
}

/// Collect distinct leaf payloads in left-to-right order.
template <class P, class Eq>
std::vector<P> tree_leaves(const Tree<P>& t, Eq payload_eq) {
  std::vector<P> out;
  std::function<void(const Tree<P>&)> go = [&](const Tree<P>& u) {
    if (u.is_leaf()) {
      for (const P& p : out)
        if (payload_eq(p, u.payload())) return;
      out.push_back(u.payload());
    } else if (u.is_op()) {
      for (const auto& c : u.children()) go(c);
    }
  };
  go(t);
  return out;
}

/// Debug dump: one node per line, two-space indentation. Infinite-arity nodes
/// print their materialized children followed by one trailing `cut` line for
/// the elided tail.
template <class P, class Printer>
void dump_tree(const Tree<P>& t, Printer print_payload, std::ostream& os, int depth = 0) {
  using K = typename Tree<P>::Kind;
  for (int i = 0; i < depth; ++i) os << "  ";
  switch (t.kind()) {
    case K::BotCut:
      os << "cut\n";
      return;
    case K::BotDiv:
      os << "div\n";
      return;
    case K::Leaf:
      os << "leaf " << print_payload(t.payload()) << "\n";
      return;
    case K::Op:
      os << t.op_name();
      if (t.index()) os << "[" << *t.index() << "]";
      os << "\n";
      for (const auto& c : t.children()) dump_tree(c, print_payload, os, depth + 1);
      if (t.infinite()) {
        for (int i = 0; i < depth + 1; ++i) os << "  ";
        os << "cut\n";
      }
      return;
  }
}

template <class P, class Printer>
std::string dump_tree(const Tree<P>& t, Printer print_payload) {
  std::ostringstream os;
  dump_tree(t, print_payload, os);
  return os.str();
}

}  // namespace efflog
