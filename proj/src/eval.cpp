#include "efflog/eval.hpp"

namespace efflog {

Term stack_apply(const Stack& s, Term n) {
  Term out = std::move(n);
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    out = Term::let(std::move(out), it->var, it->body);
  return out;
}

namespace {

// fix(F) ~> return \x. let F (\y. let fix F => z in z y) => w in w x
Term unfold_fix(const Term& fix_term, const EffectSignature& sig) {
  const Term& f = fix_term.fix_fn();
  Type fty = typecheck_closed(f, sig);  // (t1 -> t2) -> (t1 -> t2)
  Type t1 = fty.domain().domain();
  Term inner = Term::lambda(
      "y", t1, Term::let(Term::fix(f), "z", Term::apply(Term::var("z"), Term::var("y"))));
  Term body = Term::let(Term::apply(f, inner), "w", Term::apply(Term::var("w"), Term::var("x")));
  return Term::ret(Term::lambda("x", t1, std::move(body)));
}

uint64_t numeral_of(const Term& v) {
  auto n = v.as_numeral();
  if (!n) throw StuckState("effect operation parameter did not evaluate to a numeral: " + v.str());
  return *n;
}

Tree<Term> eval_rec(Stack stack, Term m, uint64_t fuel, uint64_t width,
                    const EffectSignature& sig) {
  while (true) {
    if (fuel == 0) return Tree<Term>::cut();
    --fuel;  // every clause below consumes exactly one unit

    switch (m.kind()) {
      case Term::Kind::Return: {
        if (stack.empty()) return Tree<Term>::leaf(m.ret_value());
        Frame frame = std::move(stack.back());
        stack.pop_back();
        m = substitute(frame.body, frame.var, m.ret_value());
        continue;
      }
      case Term::Kind::Let:
        stack.push_back(Frame{m.var_name(), m.let_body()});
        m = m.let_bound();
        continue;
      case Term::Kind::Apply: {
        const Term& f = m.fn();
        if (f.kind() != Term::Kind::Lambda) throw StuckState("application of non-lambda " + f.str());
        m = substitute(f.body(), f.var_name(), m.arg());
        continue;
      }
      case Term::Kind::Case: {
        const Term& scrut = m.case_scrut();
        if (scrut.kind() == Term::Kind::Zero) {
          m = m.case_zero();
        } else if (scrut.kind() == Term::Kind::Succ) {
          m = substitute(m.case_succ(), m.var_name(), scrut.succ_arg());
        } else {
          throw StuckState("case scrutinee is not a numeral: " + scrut.str());
        }
        continue;
      }
      case Term::Kind::Fix:
        m = unfold_fix(m, sig);
        continue;
      case Term::Kind::Diverge:
        return Tree<Term>::div();
      case Term::Kind::EffectOp: {
        auto ar = sig.arity(m.op_name());
        if (!ar) throw StuckState("operation " + m.op_name() + " not in signature");
        std::optional<uint64_t> idx;
        if (m.op_nat_arg()) idx = numeral_of(*m.op_nat_arg());
        std::vector<Tree<Term>> kids;
        bool infinite = ar->form == ArityForm::Inf || ar->form == ArityForm::NatInf;
        if (infinite) {
          const Term& v = *m.op_fn_arg();
          kids.reserve(width);
          for (uint64_t k = 0; k < width; ++k)
            kids.push_back(eval_rec(stack, Term::apply(v, Term::numeral(k)), fuel, width, sig));
        } else {
          kids.reserve(m.op_children().size());
          for (const Term& c : m.op_children())
            kids.push_back(eval_rec(stack, c, fuel, width, sig));
        }
        return Tree<Term>::op(m.op_name(), std::move(kids), idx, infinite);
      }
      default:
        throw StuckState("stuck configuration at " + m.str());
    }
  }
}

}  // namespace

Tree<Term> eval_tree(const Term& m, uint64_t fuel, uint64_t width, const EffectSignature& sig) {
  if (m.is_value()) throw StuckState("eval_tree expects a computation");
  return eval_rec({}, m, fuel, width, sig);
}

std::string dump_value_tree(const Tree<Term>& t) {
  return dump_tree(t, [](const Term& v) { return v.str(); });
}

std::string dump_unit_tree(const Tree<Unit>& t) {
  return dump_tree(t, [](const Unit&) { return std::string("*"); });
}

}  // namespace efflog
