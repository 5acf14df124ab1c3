#pragma once

#include <vector>

#include "efflog/signature.hpp"
#include "efflog/term.hpp"
#include "efflog/type.hpp"

namespace efflog {

/// Deterministic, duplicate-free closed values of type tau, monotone in fuel
/// (the fuel-k list is a prefix of the fuel-(k+1) list).
///
/// Template grammar, by type:
///   1          -> [*]                                   (any fuel)
///   N          -> [0, 1, ..., fuel]
///   rho -> tau -> level 1, then level 2, ... up to fuel; level L contributes
///                 \x:rho. diverge(tau)                     (L = 1)
///                 \x:rho. return x        if rho == tau    (L = 1)
///                 \x:rho. return W        for each W new in values(tau, L-1)
std::vector<Term> enumerate_values(const Type& tau, uint64_t fuel, const EffectSignature& sig);

}  // namespace efflog
