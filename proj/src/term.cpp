#include "efflog/term.hpp"

#include <cassert>
#include <sstream>
#include <unordered_map>

namespace efflog {

namespace {

std::shared_ptr<const Term::Node> make(Term::Node n) {
  return std::make_shared<const Term::Node>(std::move(n));
}

}  // namespace

Term Term::star() { return Term(make({Kind::Star, "", {}, {}, {}, {}})); }
Term Term::zero() { return Term(make({Kind::Zero, "", {}, {}, {}, {}})); }

Term Term::succ(Term v) { return Term(make({Kind::Succ, "", {}, {std::move(v)}, {}, {}})); }

Term Term::lambda(std::string var, Type ty, Term body) {
  return Term(make({Kind::Lambda, std::move(var), ty, {std::move(body)}, {}, {}}));
}

Term Term::var(std::string name) { return Term(make({Kind::Var, std::move(name), {}, {}, {}, {}})); }

Term Term::apply(Term fn, Term arg) {
  return Term(make({Kind::Apply, "", {}, {std::move(fn), std::move(arg)}, {}, {}}));
}

Term Term::ret(Term v) { return Term(make({Kind::Return, "", {}, {std::move(v)}, {}, {}})); }

Term Term::let(Term bound, std::string var, Term body) {
  return Term(make({Kind::Let, std::move(var), {}, {std::move(bound), std::move(body)}, {}, {}}));
}

Term Term::fix(Term v) { return Term(make({Kind::Fix, "", {}, {std::move(v)}, {}, {}})); }

Term Term::case_nat(Term scrut, Term zero_branch, std::string var, Term succ_branch) {
  return Term(make({Kind::Case, std::move(var), {},
                    {std::move(scrut), std::move(zero_branch), std::move(succ_branch)}, {}, {}}));
}

Term Term::op_finite(std::string op, std::vector<Term> children, std::optional<Type> annot) {
  return Term(make({Kind::EffectOp, std::move(op), std::move(annot), std::move(children), {}, {}}));
}

Term Term::op_nat_finite(std::string op, Term nat_arg, std::vector<Term> children) {
  return Term(make({Kind::EffectOp, std::move(op), {}, std::move(children), std::move(nat_arg), {}}));
}

Term Term::op_inf(std::string op, Term fn_arg) {
  return Term(make({Kind::EffectOp, std::move(op), {}, {}, {}, std::move(fn_arg)}));
}

Term Term::op_nat_inf(std::string op, Term nat_arg, Term fn_arg) {
  return Term(make({Kind::EffectOp, std::move(op), {}, {}, std::move(nat_arg), std::move(fn_arg)}));
}

Term Term::diverge(Type ty) { return Term(make({Kind::Diverge, "", ty, {}, {}, {}})); }

Term Term::numeral(uint64_t n) {
  Term t = zero();
  for (uint64_t i = 0; i < n; ++i) t = succ(t);
  return t;
}

std::optional<uint64_t> Term::as_numeral() const {
  uint64_t n = 0;
  const Term* cur = this;
  while (cur->kind() == Kind::Succ) {
    ++n;
    cur = &cur->succ_arg();
  }
  if (cur->kind() == Kind::Zero) return n;
  return std::nullopt;
}

Term::Kind Term::kind() const { return node_->kind; }

Aspect Term::aspect() const {
  switch (kind()) {
    case Kind::Star:
    case Kind::Zero:
    case Kind::Succ:
    case Kind::Lambda:
    case Kind::Var:
      return Aspect::Value;
    default:
      return Aspect::Computation;
  }
}

const Term& Term::succ_arg() const { assert(kind() == Kind::Succ); return node_->sub[0]; }
const std::string& Term::var_name() const { return node_->name; }
const Type& Term::annot() const { assert(node_->ty); return *node_->ty; }
const Term& Term::body() const { assert(kind() == Kind::Lambda); return node_->sub[0]; }
const Term& Term::fn() const { assert(kind() == Kind::Apply); return node_->sub[0]; }
const Term& Term::arg() const { assert(kind() == Kind::Apply); return node_->sub[1]; }
const Term& Term::ret_value() const { assert(kind() == Kind::Return); return node_->sub[0]; }
const Term& Term::let_bound() const { assert(kind() == Kind::Let); return node_->sub[0]; }
const Term& Term::let_body() const { assert(kind() == Kind::Let); return node_->sub[1]; }
const Term& Term::fix_fn() const { assert(kind() == Kind::Fix); return node_->sub[0]; }
const Term& Term::case_scrut() const { assert(kind() == Kind::Case); return node_->sub[0]; }
const Term& Term::case_zero() const { assert(kind() == Kind::Case); return node_->sub[1]; }
const Term& Term::case_succ() const { assert(kind() == Kind::Case); return node_->sub[2]; }
const std::string& Term::op_name() const { assert(kind() == Kind::EffectOp); return node_->name; }
const std::optional<Term>& Term::op_nat_arg() const { assert(kind() == Kind::EffectOp); return node_->nat_arg; }
const std::vector<Term>& Term::op_children() const { assert(kind() == Kind::EffectOp); return node_->sub; }
const std::optional<Term>& Term::op_fn_arg() const { assert(kind() == Kind::EffectOp); return node_->fn_arg; }
const std::optional<Type>& Term::op_annot() const { assert(kind() == Kind::EffectOp); return node_->ty; }

namespace {

void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.count(t.var_name())) out.insert(t.var_name());
      return;
    case Term::Kind::Lambda: {
      bool fresh = bound.insert(t.var_name()).second;
      collect_free(t.body(), bound, out);
      if (fresh) bound.erase(t.var_name());
      return;
    }
    case Term::Kind::Let: {
      collect_free(t.let_bound(), bound, out);
      bool fresh = bound.insert(t.var_name()).second;
      collect_free(t.let_body(), bound, out);
      if (fresh) bound.erase(t.var_name());
      return;
    }
    case Term::Kind::Case: {
      collect_free(t.case_scrut(), bound, out);
      collect_free(t.case_zero(), bound, out);
      bool fresh = bound.insert(t.var_name()).second;
      collect_free(t.case_succ(), bound, out);
      if (fresh) bound.erase(t.var_name());
      return;
    }
    default:
      for (const Term& s : t.node().sub) collect_free(s, bound, out);
      if (t.kind() == Term::Kind::EffectOp) {
        if (t.op_nat_arg()) collect_free(*t.op_nat_arg(), bound, out);
        if (t.op_fn_arg()) collect_free(*t.op_fn_arg(), bound, out);
      }
      return;
  }
}

// De Bruijn-indexed structural comparison; names only matter through binding.
using Env = std::vector<std::string>;

int env_index(const Env& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[static_cast<size_t>(i)] == name) return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

bool alpha_eq_rec(const Term& a, const Term& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Star:
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Var: {
      int ia = env_index(ea, a.var_name());
      int ib = env_index(eb, b.var_name());
      if (ia != ib) return false;
      if (ia == -1) return a.var_name() == b.var_name();  // free vars by name
      return true;
    }
    case Term::Kind::Lambda: {
      if (a.annot() != b.annot()) return false;
      ea.push_back(a.var_name());
      eb.push_back(b.var_name());
      bool r = alpha_eq_rec(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case Term::Kind::Let: {
      if (!alpha_eq_rec(a.let_bound(), b.let_bound(), ea, eb)) return false;
      ea.push_back(a.var_name());
      eb.push_back(b.var_name());
      bool r = alpha_eq_rec(a.let_body(), b.let_body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case Term::Kind::Case: {
      if (!alpha_eq_rec(a.case_scrut(), b.case_scrut(), ea, eb)) return false;
      if (!alpha_eq_rec(a.case_zero(), b.case_zero(), ea, eb)) return false;
      ea.push_back(a.var_name());
      eb.push_back(b.var_name());
      bool r = alpha_eq_rec(a.case_succ(), b.case_succ(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case Term::Kind::Diverge:
      return a.annot() == b.annot();
    case Term::Kind::EffectOp: {
      if (a.op_name() != b.op_name()) return false;
      if (a.op_annot().has_value() != b.op_annot().has_value()) return false;
      if (a.op_annot() && *a.op_annot() != *b.op_annot()) return false;
      if (a.op_children().size() != b.op_children().size()) return false;
      if (a.op_nat_arg().has_value() != b.op_nat_arg().has_value()) return false;
      if (a.op_fn_arg().has_value() != b.op_fn_arg().has_value()) return false;
      if (a.op_nat_arg() && !alpha_eq_rec(*a.op_nat_arg(), *b.op_nat_arg(), ea, eb)) return false;
      if (a.op_fn_arg() && !alpha_eq_rec(*a.op_fn_arg(), *b.op_fn_arg(), ea, eb)) return false;
      for (size_t i = 0; i < a.op_children().size(); ++i)
        if (!alpha_eq_rec(a.op_children()[i], b.op_children()[i], ea, eb)) return false;
      return true;
    }
    default: {
      const auto& sa = a.node().sub;
      const auto& sb = b.node().sub;
      if (sa.size() != sb.size()) return false;
      for (size_t i = 0; i < sa.size(); ++i)
        if (!alpha_eq_rec(sa[i], sb[i], ea, eb)) return false;
      return true;
    }
  }
}

void hash_mix(size_t& h, size_t v) { h = h * 1000003u + v + 0x9e3779b97f4a7c15ull; }

void alpha_hash_rec(const Term& t, Env& env, size_t& h) {
  hash_mix(h, static_cast<size_t>(t.kind()));
  switch (t.kind()) {
    case Term::Kind::Var: {
      int i = env_index(env, t.var_name());
      if (i >= 0) {
        hash_mix(h, static_cast<size_t>(i) + 1);
      } else {
        hash_mix(h, std::hash<std::string>{}(t.var_name()));
      }
      return;
    }
    case Term::Kind::Lambda:
      hash_mix(h, t.annot().hash());
      env.push_back(t.var_name());
      alpha_hash_rec(t.body(), env, h);
      env.pop_back();
      return;
    case Term::Kind::Let:
      alpha_hash_rec(t.let_bound(), env, h);
      env.push_back(t.var_name());
      alpha_hash_rec(t.let_body(), env, h);
      env.pop_back();
      return;
    case Term::Kind::Case:
      alpha_hash_rec(t.case_scrut(), env, h);
      alpha_hash_rec(t.case_zero(), env, h);
      env.push_back(t.var_name());
      alpha_hash_rec(t.case_succ(), env, h);
      env.pop_back();
      return;
    case Term::Kind::Diverge:
      hash_mix(h, t.annot().hash());
      return;
    case Term::Kind::EffectOp:
      hash_mix(h, std::hash<std::string>{}(t.op_name()));
      if (t.op_annot()) hash_mix(h, t.op_annot()->hash());
      if (t.op_nat_arg()) alpha_hash_rec(*t.op_nat_arg(), env, h);
      if (t.op_fn_arg()) alpha_hash_rec(*t.op_fn_arg(), env, h);
      for (const Term& s : t.op_children()) alpha_hash_rec(s, env, h);
      return;
    default:
      for (const Term& s : t.node().sub) alpha_hash_rec(s, env, h);
      return;
  }
}

}  // namespace

std::set<std::string> Term::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

bool Term::alpha_eq(const Term& other) const {
  if (node_ == other.node_) return true;
  Env ea, eb;
  return alpha_eq_rec(*this, other, ea, eb);
}

size_t Term::alpha_hash() const {
  Env env;
  size_t h = 14695981039346656037ull;
  alpha_hash_rec(*this, env, h);
  return h;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base + "'";
  while (avoid.count(cand)) cand += "'";
  return cand;
}

Term subst_rec(const Term& t, const std::string& x, const Term& v) {
  switch (t.kind()) {
    case Term::Kind::Star:
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Var:
      return t.var_name() == x ? v : t;
    case Term::Kind::Succ:
      return Term::succ(subst_rec(t.succ_arg(), x, v));
    case Term::Kind::Lambda: {
      if (t.var_name() == x) return t;
      // v is closed, so capture cannot occur; keep the binder name.
      return Term::lambda(t.var_name(), t.annot(), subst_rec(t.body(), x, v));
    }
    case Term::Kind::Apply:
      return Term::apply(subst_rec(t.fn(), x, v), subst_rec(t.arg(), x, v));
    case Term::Kind::Return:
      return Term::ret(subst_rec(t.ret_value(), x, v));
    case Term::Kind::Let: {
      Term bound = subst_rec(t.let_bound(), x, v);
      if (t.var_name() == x) return Term::let(std::move(bound), t.var_name(), t.let_body());
      return Term::let(std::move(bound), t.var_name(), subst_rec(t.let_body(), x, v));
    }
    case Term::Kind::Fix:
      return Term::fix(subst_rec(t.fix_fn(), x, v));
    case Term::Kind::Case: {
      Term scrut = subst_rec(t.case_scrut(), x, v);
      Term zb = subst_rec(t.case_zero(), x, v);
      if (t.var_name() == x) return Term::case_nat(std::move(scrut), std::move(zb), t.var_name(), t.case_succ());
      return Term::case_nat(std::move(scrut), std::move(zb), t.var_name(), subst_rec(t.case_succ(), x, v));
    }
    case Term::Kind::EffectOp: {
      std::vector<Term> kids;
      kids.reserve(t.op_children().size());
      for (const Term& s : t.op_children()) kids.push_back(subst_rec(s, x, v));
      std::optional<Term> na, fa;
      if (t.op_nat_arg()) na = subst_rec(*t.op_nat_arg(), x, v);
      if (t.op_fn_arg()) fa = subst_rec(*t.op_fn_arg(), x, v);
      Term::Node n{Term::Kind::EffectOp, t.op_name(), t.op_annot(), std::move(kids), std::move(na), std::move(fa)};
      if (!n.nat_arg && !n.fn_arg) return Term::op_finite(t.op_name(), std::move(n.sub), n.ty);
      if (n.nat_arg && !n.fn_arg) return Term::op_nat_finite(t.op_name(), *n.nat_arg, std::move(n.sub));
      if (!n.nat_arg && n.fn_arg) return Term::op_inf(t.op_name(), *n.fn_arg);
      return Term::op_nat_inf(t.op_name(), *n.nat_arg, *n.fn_arg);
    }
    case Term::Kind::Diverge:
      return t;
  }
  return t;
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& v) {
  if (!v.is_value()) throw AspectError("substitute: replacement term is a computation");
  if (!v.closed()) throw AspectError("substitute: replacement value must be closed");
  return subst_rec(t, x, v);
}

namespace {

bool is_atom_value(const Term& t) {
  return t.kind() == Term::Kind::Star || t.kind() == Term::Kind::Var || t.as_numeral().has_value();
}

void print_rec(const Term& t, std::ostream& os) {
  switch (t.kind()) {
    case Term::Kind::Star:
      os << "*";
      return;
    case Term::Kind::Zero:
      os << "0";
      return;
    case Term::Kind::Succ: {
      if (auto n = t.as_numeral()) {
        os << *n;
        return;
      }
      os << "S(";
      print_rec(t.succ_arg(), os);
      os << ")";
      return;
    }
    case Term::Kind::Var:
      os << t.var_name();
      return;
    case Term::Kind::Lambda:
      os << "\\" << t.var_name() << ":" << t.annot().str() << ". ";
      print_rec(t.body(), os);
      return;
    case Term::Kind::Apply: {
      const Term& f = t.fn();
      if (is_atom_value(f)) {
        print_rec(f, os);
      } else {
        os << "(";
        print_rec(f, os);
        os << ")";
      }
      os << " ";
      const Term& a = t.arg();
      if (is_atom_value(a)) {
        print_rec(a, os);
      } else {
        os << "(";
        print_rec(a, os);
        os << ")";
      }
      return;
    }
    case Term::Kind::Return:
      os << "return ";
      if (t.ret_value().kind() == Term::Kind::Lambda) {
        os << "(";
        print_rec(t.ret_value(), os);
        os << ")";
      } else {
        print_rec(t.ret_value(), os);
      }
      return;
    case Term::Kind::Let:
      os << "let ";
      print_rec(t.let_bound(), os);
      os << " => " << t.var_name() << " in ";
      print_rec(t.let_body(), os);
      return;
    case Term::Kind::Fix:
      os << "fix(";
      print_rec(t.fix_fn(), os);
      os << ")";
      return;
    case Term::Kind::Case:
      os << "case ";
      print_rec(t.case_scrut(), os);
      os << " of { Z => ";
      print_rec(t.case_zero(), os);
      os << "; S(" << t.var_name() << ") => ";
      print_rec(t.case_succ(), os);
      os << " }";
      return;
    case Term::Kind::EffectOp: {
      os << t.op_name() << "(";
      if (t.op_children().empty() && !t.op_nat_arg() && !t.op_fn_arg() && t.op_annot()) {
        os << t.op_annot()->str() << ")";
        return;
      }
      if (t.op_nat_arg()) {
        print_rec(*t.op_nat_arg(), os);
        if (t.op_fn_arg() || !t.op_children().empty()) os << "; ";
      }
      if (t.op_fn_arg()) print_rec(*t.op_fn_arg(), os);
      bool first = true;
      for (const Term& s : t.op_children()) {
        if (!first) os << ", ";
        print_rec(s, os);
        first = false;
      }
      os << ")";
      return;
    }
    case Term::Kind::Diverge:
      os << "diverge(" << t.annot().str() << ")";
      return;
  }
}

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  print_rec(*this, os);
  return os.str();
}

}  // namespace efflog
