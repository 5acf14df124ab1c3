#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "efflog/rational.hpp"
#include "efflog/signature.hpp"
#include "efflog/tree.hpp"

namespace efflog {

struct SignatureMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValueBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TheoryKind { Pure, Error, Nondet, Prob, Store, Io };

/// One of the six running effect theories: signature plus modality family.
struct EffectTheory {
  TheoryKind kind;
  std::vector<std::string> labels;     // error: E
  std::vector<std::string> locations;  // store: L

  static EffectTheory pure() { return {TheoryKind::Pure, {}, {}}; }
  static EffectTheory error(std::vector<std::string> labels) {
    return {TheoryKind::Error, std::move(labels), {}};
  }
  static EffectTheory nondet() { return {TheoryKind::Nondet, {}, {}}; }
  static EffectTheory prob() { return {TheoryKind::Prob, {}, {}}; }
  static EffectTheory store(std::vector<std::string> locations) {
    return {TheoryKind::Store, {}, std::move(locations)};
  }
  static EffectTheory io() { return {TheoryKind::Io, {}, {}}; }

  EffectSignature signature() const;
  std::string name() const;
  std::optional<size_t> location_index(const std::string& loc) const;
};

/// Total map L -> [0, B]; values indexed by the theory's location order.
struct State {
  std::vector<uint64_t> values;

  bool operator==(const State& o) const { return values == o.values; }
  bool operator<(const State& o) const { return values < o.values; }
  State with(size_t loc, uint64_t v) const {
    State s = *this;
    s.values[loc] = v;
    return s;
  }
  std::string str(const EffectTheory& th) const;
};

/// One i/o action: input ?n or output !n.
struct IoAction {
  bool input;
  uint64_t n;
  bool operator==(const IoAction& o) const { return input == o.input && n == o.n; }
  bool operator<(const IoAction& o) const {
    return input != o.input ? input > o.input : n < o.n;  // inputs sort first
  }
};
using Trace = std::vector<IoAction>;
std::string trace_str(const Trace& w);

struct Modality {
  enum class Kind { Down, Err, Dia, Box, ProbGt, Store, IoDone, IoPref };
  Kind kind;
  std::string label;  // Err
  Rational q;         // ProbGt
  State from, to;     // Store
  Trace trace;        // IoDone / IoPref

  static Modality down() { return {Kind::Down, "", 0, {}, {}, {}}; }
  static Modality err(std::string e) { return {Kind::Err, std::move(e), 0, {}, {}, {}}; }
  static Modality dia() { return {Kind::Dia, "", 0, {}, {}, {}}; }
  static Modality box() { return {Kind::Box, "", 0, {}, {}, {}}; }
  static Modality prob_gt(Rational q) { return {Kind::ProbGt, "", std::move(q), {}, {}, {}}; }
  static Modality store(State from, State to) {
    return {Kind::Store, "", 0, std::move(from), std::move(to), {}};
  }
  static Modality io_done(Trace w) { return {Kind::IoDone, "", 0, {}, {}, std::move(w)}; }
  static Modality io_pref(Trace w) { return {Kind::IoPref, "", 0, {}, {}, std::move(w)}; }

  bool operator==(const Modality& o) const;
  std::string str(const EffectTheory& th) const;
};

/// Bounds that make the modality families and candidate sets finite.
struct Bounds {
  uint64_t value_bound = 3;     // store cell bound B; also bounds io letters and {n} formulas
  uint64_t trace_len = 2;       // io traces up to this length
  uint64_t q_denominator = 4;   // probability grid P_{>k/d}
};

/// Deterministic finite modality family for the theory under the bounds.
std::vector<Modality> enumerate_modalities(const EffectTheory& th, const Bounds& b);

/// All states over the theory's locations with values in [0, bounds.value_bound].
std::vector<State> enumerate_states(const EffectTheory& th, const Bounds& b);

struct ExecUnknown {};
struct ExecNoResult {};
template <class P>
struct ExecDone {
  P payload;
  State state;
};
template <class P>
using ExecResult = std::variant<ExecDone<P>, ExecUnknown, ExecNoResult>;

/// Big-step execution of a lookup/update tree from state s: follows the
/// unique path; BotCut on the path gives Unknown, BotDiv gives NoResult.
template <class P>
ExecResult<P> exec_store(const Tree<P>& t, State s, const EffectTheory& th, const Bounds& b) {
  Tree<P> cur = t;
  while (true) {
    switch (cur.kind()) {
      case Tree<P>::Kind::BotCut:
        return ExecUnknown{};
      case Tree<P>::Kind::BotDiv:
        return ExecNoResult{};
      case Tree<P>::Kind::Leaf:
        return ExecDone<P>{cur.payload(), s};
      case Tree<P>::Kind::Op: {
        const std::string& op = cur.op_name();
        if (op.rfind("lookup_", 0) == 0) {
          auto loc = th.location_index(op.substr(7));
          if (!loc) throw SignatureMismatch("unknown location in " + op);
          cur = cur.child(s.values[*loc]);
        } else if (op.rfind("update_", 0) == 0) {
          auto loc = th.location_index(op.substr(7));
          if (!loc) throw SignatureMismatch("unknown location in " + op);
          if (!cur.index()) throw SignatureMismatch("update node without value index");
          if (*cur.index() > b.value_bound)
            throw ValueBoundExceeded("update writes " + std::to_string(*cur.index()) +
                                     " above bound " + std::to_string(b.value_bound));
          s = s.with(*loc, *cur.index());
          cur = cur.child(0);
        } else {
          throw SignatureMismatch("exec_store saw non-store operation " + op);
        }
        break;
      }
    }
  }
}

/// Exact lower/upper bounds on the success mass of a p-or tree: lower counts
/// Leaf(*) paths, upper is 1 minus the definite-failure (BotDiv) mass.
std::pair<Rational, Rational> prob_bounds(const Tree<Unit>& t);

/// Three-valued membership of t in [[o]]. True/False verdicts on a truncation
/// remain valid for every tree_leq-larger tree with the same BotDiv leaves.
Verdict modality_verdict(const EffectTheory& th, const Modality& o, const Tree<Unit>& t,
                         const Bounds& b);

}  // namespace efflog
