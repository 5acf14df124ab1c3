#pragma once

#include <stdexcept>

#include "efflog/signature.hpp"
#include "efflog/term.hpp"
#include "efflog/tree.hpp"
#include "efflog/typecheck.hpp"

namespace efflog {

/// Raised when evaluation reaches the "otherwise" clause. Well-typed closed
/// computations never do; this flags ill-formed input or an evaluator bug.
struct StuckState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A frame is `let (-) => x in N`; the stack composes frames outermost first.
struct Frame {
  std::string var;
  Term body;
};
using Stack = std::vector<Frame>;

/// S{N}: apply the stack to a computation, innermost frame first.
Term stack_apply(const Stack& s, Term n);

/// |M|_fuel with children of a^N-arity nodes materialized up to width.
/// One fuel unit per machine clause, exactly as the indexed evaluation maps
/// count them, so recorded fuels are reproducible. A Diverge focus yields
/// BotDiv; fuel exhaustion yields BotCut.
Tree<Term> eval_tree(const Term& m, uint64_t fuel, uint64_t width, const EffectSignature& sig);

/// Tree of closed values printed with Term::str; unit payload prints "*".
std::string dump_value_tree(const Tree<Term>& t);
std::string dump_unit_tree(const Tree<Unit>& t);

}  // namespace efflog
