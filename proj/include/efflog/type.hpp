#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace efflog {

/// Simple types: 1 | N | rho -> tau.
class Type {
 public:
  enum class Kind { Unit, Nat, Arrow };

  static Type unit();
  static Type nat();
  static Type arrow(Type domain, Type codomain);

  Kind kind() const { return node_->kind; }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_nat() const { return kind() == Kind::Nat; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  Type domain() const;
  Type codomain() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  size_t hash() const;
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> dom, cod;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  size_t operator()(const Type& t) const { return t.hash(); }
};

}  // namespace efflog
