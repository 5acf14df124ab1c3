#include "efflog/type.hpp"

#include <cassert>
#include <functional>

namespace efflog {

Type Type::unit() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Unit, nullptr, nullptr});
  return Type(n);
}

Type Type::nat() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Nat, nullptr, nullptr});
  return Type(n);
}

Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const Node>(Node{Kind::Arrow, domain.node_, codomain.node_}));
}

Type Type::domain() const {
  assert(is_arrow());
  return Type(node_->dom);
}

Type Type::codomain() const {
  assert(is_arrow());
  return Type(node_->cod);
}

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->kind != Kind::Arrow) return true;
  return Type(node_->dom) == Type(other.node_->dom) && Type(node_->cod) == Type(other.node_->cod);
}

size_t Type::hash() const {
  switch (node_->kind) {
    case Kind::Unit:
      return 0x9e3779b9u;
    case Kind::Nat:
      return 0x85ebca6bu;
    case Kind::Arrow: {
      size_t h = Type(node_->dom).hash();
      size_t k = Type(node_->cod).hash();
      return h * 31 + k * 131 + 7;
    }
  }
  return 0;
}

std::string Type::str() const {
  switch (node_->kind) {
    case Kind::Unit:
      return "1";
    case Kind::Nat:
      return "N";
    case Kind::Arrow: {
      Type d(node_->dom), c(node_->cod);
      std::string ds = d.str();
      if (d.is_arrow()) ds = "(" + ds + ")";
      return ds + " -> " + c.str();
    }
  }
  return "?";
}

}  // namespace efflog
