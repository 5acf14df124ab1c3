#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace efflog {

/// The four arity forms: a^n, N x a^n, a^N, N x a^N.
enum class ArityForm { Finite, NatFinite, Inf, NatInf };

struct Arity {
  ArityForm form;
  uint64_t n = 0;  // used by Finite / NatFinite
};

class EffectSignature {
 public:
  void add(std::string op, Arity a) { ops_[std::move(op)] = a; }
  std::optional<Arity> arity(const std::string& op) const {
    auto it = ops_.find(op);
    if (it == ops_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<std::string, Arity>& ops() const { return ops_; }

 private:
  std::map<std::string, Arity> ops_;
};

}  // namespace efflog
