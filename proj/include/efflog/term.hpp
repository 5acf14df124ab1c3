#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "efflog/type.hpp"

namespace efflog {

enum class Aspect { Value, Computation };

/// Terms of the fine-grained call-by-value language. Immutable, shared
/// structurally. Binders keep their source names; alpha-equivalent terms
/// compare equal under alpha_eq/alpha_hash, which table code must use.
class Term {
 public:
  enum class Kind {
    Star,
    Zero,
    Succ,
    Lambda,
    Var,
    Apply,
    Return,
    Let,
    Fix,
    Case,
    EffectOp,
    Diverge,
  };

  struct Node;

  static Term star();
  static Term zero();
  static Term succ(Term v);
  static Term lambda(std::string var, Type ty, Term body);
  static Term var(std::string name);
  static Term apply(Term fn, Term arg);
  static Term ret(Term v);
  static Term let(Term bound, std::string var, Term body);
  static Term fix(Term v);
  static Term case_nat(Term scrut, Term zero_branch, std::string var, Term succ_branch);
  // sigma(M0,...,Mn-1); nullary operations carry a type annotation, like diverge
  static Term op_finite(std::string op, std::vector<Term> children,
                        std::optional<Type> annot = std::nullopt);
  // sigma(V; M0,...,Mn-1)
  static Term op_nat_finite(std::string op, Term nat_arg, std::vector<Term> children);
  // sigma(V) with V : N -> tau
  static Term op_inf(std::string op, Term fn_arg);
  // sigma(V; W) with W : N -> tau
  static Term op_nat_inf(std::string op, Term nat_arg, Term fn_arg);
  static Term diverge(Type ty);

  static Term numeral(uint64_t n);
  std::optional<uint64_t> as_numeral() const;

  Kind kind() const;
  Aspect aspect() const;
  bool is_value() const { return aspect() == Aspect::Value; }

  // Accessors; each asserts the matching kind.
  const Term& succ_arg() const;
  const std::string& var_name() const;  // Var, Lambda, Let, Case
  const Type& annot() const;            // Lambda, Diverge
  const Term& body() const;             // Lambda
  const Term& fn() const;               // Apply
  const Term& arg() const;              // Apply
  const Term& ret_value() const;        // Return
  const Term& let_bound() const;        // Let
  const Term& let_body() const;         // Let
  const Term& fix_fn() const;           // Fix
  const Term& case_scrut() const;
  const Term& case_zero() const;
  const Term& case_succ() const;
  const std::string& op_name() const;
  const std::optional<Term>& op_nat_arg() const;
  const std::vector<Term>& op_children() const;
  const std::optional<Term>& op_fn_arg() const;
  const std::optional<Type>& op_annot() const;

  std::set<std::string> free_vars() const;
  bool closed() const { return free_vars().empty(); }

  bool alpha_eq(const Term& other) const;
  size_t alpha_hash() const;

  /// Concrete syntax, parseable by the frontend.
  std::string str() const;

  const Node& node() const { return *node_; }

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;             // Var name / binder / op name
  std::optional<Type> ty;       // Lambda annot, Diverge type
  std::vector<Term> sub;        // subterms, layout per kind
  std::optional<Term> nat_arg;  // EffectOp
  std::optional<Term> fn_arg;   // EffectOp
};

struct TermAlphaEq {
  bool operator()(const Term& a, const Term& b) const { return a.alpha_eq(b); }
};
struct TermAlphaHash {
  size_t operator()(const Term& t) const { return t.alpha_hash(); }
};

struct AspectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Capture-avoiding substitution t[v/x]; v must be a closed value.
Term substitute(const Term& t, const std::string& x, const Term& v);

}  // namespace efflog
