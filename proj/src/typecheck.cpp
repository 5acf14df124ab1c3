#include "efflog/typecheck.hpp"

namespace efflog {

Context Context::extend(const std::string& name, Type ty) const {
  Context out = *this;
  for (auto& [n, t] : out.entries_) {
    if (n == name) {
      t = ty;  // shadowing rebinds within the checker
      return out;
    }
  }
  out.entries_.emplace_back(name, ty);
  return out;
}

std::optional<Type> Context::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->first == name) return it->second;
  return std::nullopt;
}

namespace {

[[noreturn]] void mismatch(const std::string& msg) {
  throw TypeError(TypeError::Kind::TypeMismatch, msg);
}

Type check(const Context& ctx, const Term& t, const EffectSignature& sig);

Type check_value_of(const Context& ctx, const Term& t, const EffectSignature& sig,
                    const char* where) {
  if (!t.is_value()) mismatch(std::string(where) + ": expected a value, got computation " + t.str());
  return check(ctx, t, sig);
}

Type check_comp_of(const Context& ctx, const Term& t, const EffectSignature& sig,
                   const char* where) {
  if (t.is_value()) mismatch(std::string(where) + ": expected a computation, got value " + t.str());
  return check(ctx, t, sig);
}

Type check(const Context& ctx, const Term& t, const EffectSignature& sig) {
  switch (t.kind()) {
    case Term::Kind::Star:
      return Type::unit();
    case Term::Kind::Zero:
      return Type::nat();
    case Term::Kind::Succ: {
      Type a = check_value_of(ctx, t.succ_arg(), sig, "S");
      if (!a.is_nat()) mismatch("S applied to non-natural " + t.succ_arg().str());
      return Type::nat();
    }
    case Term::Kind::Var: {
      auto ty = ctx.lookup(t.var_name());
      if (!ty) throw TypeError(TypeError::Kind::UnboundVariable, "unbound variable " + t.var_name());
      return *ty;
    }
    case Term::Kind::Lambda: {
      Type body = check_comp_of(ctx.extend(t.var_name(), t.annot()), t.body(), sig, "lambda body");
      return Type::arrow(t.annot(), body);
    }
    case Term::Kind::Apply: {
      Type f = check_value_of(ctx, t.fn(), sig, "application head");
      Type a = check_value_of(ctx, t.arg(), sig, "application argument");
      if (!f.is_arrow()) mismatch("applying non-function " + t.fn().str());
      if (f.domain() != a)
        mismatch("argument type " + a.str() + " does not match domain " + f.domain().str());
      return f.codomain();
    }
    case Term::Kind::Return:
      return check_value_of(ctx, t.ret_value(), sig, "return");
    case Term::Kind::Let: {
      Type bound = check_comp_of(ctx, t.let_bound(), sig, "let binding");
      return check_comp_of(ctx.extend(t.var_name(), bound), t.let_body(), sig, "let body");
    }
    case Term::Kind::Fix: {
      Type f = check_value_of(ctx, t.fix_fn(), sig, "fix");
      if (!f.is_arrow() || !f.domain().is_arrow() || f.domain() != f.codomain())
        mismatch("fix expects (t1 -> t2) -> (t1 -> t2), got " + f.str());
      return f.domain();
    }
    case Term::Kind::Case: {
      Type s = check_value_of(ctx, t.case_scrut(), sig, "case scrutinee");
      if (!s.is_nat()) mismatch("case scrutinee must have type N");
      Type z = check_comp_of(ctx, t.case_zero(), sig, "case zero branch");
      Type sb = check_comp_of(ctx.extend(t.var_name(), Type::nat()), t.case_succ(), sig,
                              "case successor branch");
      if (z != sb) mismatch("case branches disagree: " + z.str() + " vs " + sb.str());
      return z;
    }
    case Term::Kind::EffectOp: {
      auto ar = sig.arity(t.op_name());
      if (!ar)
        throw TypeError(TypeError::Kind::ArityMismatch,
                        "operation " + t.op_name() + " not in signature");
      auto arity_error = [&](const std::string& msg) -> void {
        throw TypeError(TypeError::Kind::ArityMismatch, t.op_name() + ": " + msg);
      };
      switch (ar->form) {
        case ArityForm::Finite: {
          if (t.op_nat_arg() || t.op_fn_arg() || t.op_children().size() != ar->n)
            arity_error("expected exactly " + std::to_string(ar->n) + " computation arguments");
          if (ar->n == 0) {
            if (!t.op_annot()) mismatch(t.op_name() + "(): nullary operation needs a type annotation");
            return *t.op_annot();
          }
          Type ty = check_comp_of(ctx, t.op_children()[0], sig, "effect argument");
          for (const Term& c : t.op_children())
            if (check_comp_of(ctx, c, sig, "effect argument") != ty)
              mismatch(t.op_name() + " arguments disagree in type");
          return ty;
        }
        case ArityForm::NatFinite: {
          if (!t.op_nat_arg() || t.op_fn_arg() || t.op_children().size() != ar->n)
            arity_error("expected a natural argument and " + std::to_string(ar->n) +
                        " computation arguments");
          if (check_value_of(ctx, *t.op_nat_arg(), sig, "effect nat argument") != Type::nat())
            mismatch(t.op_name() + " first argument must have type N");
          if (ar->n == 0) mismatch(t.op_name() + ": nullary parameterised operations unsupported");
          Type ty = check_comp_of(ctx, t.op_children()[0], sig, "effect argument");
          for (const Term& c : t.op_children())
            if (check_comp_of(ctx, c, sig, "effect argument") != ty)
              mismatch(t.op_name() + " arguments disagree in type");
          return ty;
        }
        case ArityForm::Inf: {
          if (t.op_nat_arg() || !t.op_fn_arg() || !t.op_children().empty())
            arity_error("expected a single function argument");
          Type f = check_value_of(ctx, *t.op_fn_arg(), sig, "effect function argument");
          if (!f.is_arrow() || !f.domain().is_nat())
            mismatch(t.op_name() + " argument must have type N -> tau");
          return f.codomain();
        }
        case ArityForm::NatInf: {
          if (!t.op_nat_arg() || !t.op_fn_arg() || !t.op_children().empty())
            arity_error("expected a natural and a function argument");
          if (check_value_of(ctx, *t.op_nat_arg(), sig, "effect nat argument") != Type::nat())
            mismatch(t.op_name() + " first argument must have type N");
          Type f = check_value_of(ctx, *t.op_fn_arg(), sig, "effect function argument");
          if (!f.is_arrow() || !f.domain().is_nat())
            mismatch(t.op_name() + " second argument must have type N -> tau");
          return f.codomain();
        }
      }
      mismatch("unreachable");
    }
    case Term::Kind::Diverge:
      return t.annot();
  }
  mismatch("unreachable");
}

}  // namespace

Type typecheck(const Context& ctx, const Term& t, const EffectSignature& sig) {
  return check(ctx, t, sig);
}

}  // namespace efflog
