#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "efflog/signature.hpp"
#include "efflog/term.hpp"
#include "efflog/type.hpp"

namespace efflog {

/// Ordered typing context; variable names pairwise distinct.
class Context {
 public:
  Context() = default;
  Context extend(const std::string& name, Type ty) const;
  std::optional<Type> lookup(const std::string& name) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, Type>> entries_;
};

struct TypeError : std::runtime_error {
  enum class Kind { UnboundVariable, TypeMismatch, ArityMismatch };
  TypeError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

/// Returns the unique type derivable for t; throws TypeError otherwise.
Type typecheck(const Context& ctx, const Term& t, const EffectSignature& sig);

inline Type typecheck_closed(const Term& t, const EffectSignature& sig) {
  return typecheck(Context{}, t, sig);
}

}  // namespace efflog
