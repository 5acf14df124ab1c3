#include "efflog/theory.hpp"

#include <algorithm>
#include <sstream>

namespace efflog {

EffectSignature EffectTheory::signature() const {
  EffectSignature sig;
  switch (kind) {
    case TheoryKind::Pure:
      break;
    case TheoryKind::Error:
      for (const auto& e : labels) sig.add("raise_" + e, {ArityForm::Finite, 0});
      break;
    case TheoryKind::Nondet:
      sig.add("or", {ArityForm::Finite, 2});
      break;
    case TheoryKind::Prob:
      sig.add("p-or", {ArityForm::Finite, 2});
      break;
    case TheoryKind::Store:
      for (const auto& l : locations) {
        sig.add("lookup_" + l, {ArityForm::Inf, 0});
        sig.add("update_" + l, {ArityForm::NatFinite, 1});
      }
      break;
    case TheoryKind::Io:
      sig.add("read", {ArityForm::Inf, 0});
      sig.add("write", {ArityForm::NatFinite, 1});
      break;
  }
  return sig;
}

std::string EffectTheory::name() const {
  switch (kind) {
    case TheoryKind::Pure:
      return "pure";
    case TheoryKind::Error:
      return "error";
    case TheoryKind::Nondet:
      return "nondet";
    case TheoryKind::Prob:
      return "prob";
    case TheoryKind::Store:
      return "store";
    case TheoryKind::Io:
      return "io";
  }
  return "?";
}

std::optional<size_t> EffectTheory::location_index(const std::string& loc) const {
  for (size_t i = 0; i < locations.size(); ++i)
    if (locations[i] == loc) return i;
  return std::nullopt;
}

std::string State::str(const EffectTheory& th) const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << (i < th.locations.size() ? th.locations[i] : "l" + std::to_string(i)) << ":" << values[i];
  }
  os << "}";
  return os.str();
}

std::string trace_str(const Trace& w) {
  std::ostringstream os;
  for (const IoAction& a : w) os << (a.input ? "?" : "!") << a.n;
  return os.str();
}

bool Modality::operator==(const Modality& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Down:
    case Kind::Dia:
    case Kind::Box:
      return true;
    case Kind::Err:
      return label == o.label;
    case Kind::ProbGt:
      return q == o.q;
    case Kind::Store:
      return from == o.from && to == o.to;
    case Kind::IoDone:
    case Kind::IoPref:
      return trace == o.trace;
  }
  return false;
}

std::string Modality::str(const EffectTheory& th) const {
  switch (kind) {
    case Kind::Down:
      return "down";
    case Kind::Err:
      return "err(" + label + ")";
    case Kind::Dia:
      return "dia";
    case Kind::Box:
      return "box";
    case Kind::ProbGt:
      return "P>" + rational_str(q);
    case Kind::Store:
      return "st" + from.str(th) + "->" + to.str(th);
    case Kind::IoDone:
      return "io.done\"" + trace_str(trace) + "\"";
    case Kind::IoPref:
      return "io.pref\"" + trace_str(trace) + "\"";
  }
  return "?";
}

std::vector<State> enumerate_states(const EffectTheory& th, const Bounds& b) {
  std::vector<State> out;
  size_t n = th.locations.size();
  State cur;
  cur.values.assign(n, 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    for (; i < n; ++i) {
      if (cur.values[n - 1 - i] < b.value_bound) {
        ++cur.values[n - 1 - i];
        for (size_t j = 0; j < i; ++j) cur.values[n - 1 - j] = 0;
        break;
      }
    }
    if (i == n) break;
  }
  return out;
}

namespace {

void enumerate_traces_rec(const Bounds& b, Trace& cur, uint64_t remaining,
                          std::vector<Trace>& out) {
  out.push_back(cur);
  if (remaining == 0) return;
  for (int input = 1; input >= 0; --input) {
    for (uint64_t n = 0; n <= b.value_bound; ++n) {
      cur.push_back(IoAction{input == 1, n});
      enumerate_traces_rec(b, cur, remaining - 1, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Modality> enumerate_modalities(const EffectTheory& th, const Bounds& b) {
  std::vector<Modality> out;
  switch (th.kind) {
    case TheoryKind::Pure:
      out.push_back(Modality::down());
      break;
    case TheoryKind::Error:
      out.push_back(Modality::down());
      for (const auto& e : th.labels) out.push_back(Modality::err(e));
      break;
    case TheoryKind::Nondet:
      out.push_back(Modality::dia());
      out.push_back(Modality::box());
      break;
    case TheoryKind::Prob:
      for (uint64_t k = 0; k < b.q_denominator; ++k)
        out.push_back(Modality::prob_gt(Rational(k, b.q_denominator)));
      break;
    case TheoryKind::Store: {
      auto states = enumerate_states(th, b);
      for (const State& s : states)
        for (const State& s2 : states) out.push_back(Modality::store(s, s2));
      break;
    }
    case TheoryKind::Io: {
      std::vector<Trace> traces;
      Trace cur;
      enumerate_traces_rec(b, cur, b.trace_len, traces);
      for (const Trace& w : traces) out.push_back(Modality::io_done(w));
      for (const Trace& w : traces) out.push_back(Modality::io_pref(w));
      break;
    }
  }
  return out;
}

std::pair<Rational, Rational> prob_bounds(const Tree<Unit>& t) {
  switch (t.kind()) {
    case Tree<Unit>::Kind::BotCut:
      return {Rational(0), Rational(1)};
    case Tree<Unit>::Kind::BotDiv:
      return {Rational(0), Rational(0)};
    case Tree<Unit>::Kind::Leaf:
      return {Rational(1), Rational(1)};
    case Tree<Unit>::Kind::Op: {
      if (t.op_name() != "p-or" || t.children().size() != 2)
        throw SignatureMismatch("prob_bounds saw non p-or node " + t.op_name());
      auto [l0, u0] = prob_bounds(t.child(0));
      auto [l1, u1] = prob_bounds(t.child(1));
      return {(l0 + l1) / 2, (u0 + u1) / 2};
    }
  }
  return {Rational(0), Rational(1)};
}

namespace {

// Dia: some Leaf(*) -> True; none and no BotCut -> False; else Unknown.
Verdict dia_verdict(const Tree<Unit>& t) {
  switch (t.kind()) {
    case Tree<Unit>::Kind::Leaf:
      return Verdict::True;
    case Tree<Unit>::Kind::BotCut:
      return Verdict::Unknown;
    case Tree<Unit>::Kind::BotDiv:
      return Verdict::False;
    case Tree<Unit>::Kind::Op: {
      if (t.op_name() != "or") throw SignatureMismatch("dia saw non-nondet node " + t.op_name());
      Verdict v = Verdict::False;
      for (const auto& c : t.children()) v = vor(v, dia_verdict(c));
      return v;
    }
  }
  return Verdict::Unknown;
}

// Box: all leaves * and no BotCut -> True; some BotDiv -> False; else Unknown.
Verdict box_verdict(const Tree<Unit>& t) {
  switch (t.kind()) {
    case Tree<Unit>::Kind::Leaf:
      return Verdict::True;
    case Tree<Unit>::Kind::BotCut:
      return Verdict::Unknown;
    case Tree<Unit>::Kind::BotDiv:
      return Verdict::False;
    case Tree<Unit>::Kind::Op: {
      if (t.op_name() != "or") throw SignatureMismatch("box saw non-nondet node " + t.op_name());
      Verdict v = Verdict::True;
      for (const auto& c : t.children()) v = vand(v, box_verdict(c));
      return v;
    }
  }
  return Verdict::Unknown;
}

Verdict io_done_verdict(const Tree<Unit>& t, const Trace& w, size_t pos) {
  switch (t.kind()) {
    case Tree<Unit>::Kind::BotCut:
      return Verdict::Unknown;
    case Tree<Unit>::Kind::BotDiv:
      return Verdict::False;
    case Tree<Unit>::Kind::Leaf:
      return pos == w.size() ? Verdict::True : Verdict::False;
    case Tree<Unit>::Kind::Op: {
      if (t.op_name() != "read" && t.op_name() != "write")
        throw SignatureMismatch("io modality saw non-io node " + t.op_name());
      if (pos == w.size()) return Verdict::False;
      const IoAction& a = w[pos];
      if (a.input) {
        if (t.op_name() != "read") return Verdict::False;
        return io_done_verdict(t.child(a.n), w, pos + 1);
      }
      if (t.op_name() != "write" || !t.index() || *t.index() != a.n) return Verdict::False;
      return io_done_verdict(t.child(0), w, pos + 1);
    }
  }
  return Verdict::Unknown;
}

// A diverging computation produces no further i/o, so BotDiv mid-trace is a
// definite miss; BotCut stays Unknown.
Verdict io_pref_verdict(const Tree<Unit>& t, const Trace& w, size_t pos) {
  if (pos == w.size()) return Verdict::True;
  switch (t.kind()) {
    case Tree<Unit>::Kind::BotCut:
      return Verdict::Unknown;
    case Tree<Unit>::Kind::BotDiv:
      return Verdict::False;
    case Tree<Unit>::Kind::Leaf:
      return Verdict::False;
    case Tree<Unit>::Kind::Op: {
      if (t.op_name() != "read" && t.op_name() != "write")
        throw SignatureMismatch("io modality saw non-io node " + t.op_name());
      const IoAction& a = w[pos];
      if (a.input) {
        if (t.op_name() != "read") return Verdict::False;
        return io_pref_verdict(t.child(a.n), w, pos + 1);
      }
      if (t.op_name() != "write" || !t.index() || *t.index() != a.n) return Verdict::False;
      return io_pref_verdict(t.child(0), w, pos + 1);
    }
  }
  return Verdict::Unknown;
}

}  // namespace

Verdict modality_verdict(const EffectTheory& th, const Modality& o, const Tree<Unit>& t,
                         const Bounds& b) {
  switch (o.kind) {
    case Modality::Kind::Down:
      switch (t.kind()) {
        case Tree<Unit>::Kind::Leaf:
          return Verdict::True;
        case Tree<Unit>::Kind::BotCut:
          return Verdict::Unknown;
        default:
          return Verdict::False;  // BotDiv or any operation node
      }
    case Modality::Kind::Err: {
      if (t.kind() == Tree<Unit>::Kind::BotCut) return Verdict::Unknown;
      if (t.is_op() && t.op_name() == "raise_" + o.label) return Verdict::True;
      return Verdict::False;
    }
    case Modality::Kind::Dia:
      return dia_verdict(t);
    case Modality::Kind::Box:
      return box_verdict(t);
    case Modality::Kind::ProbGt: {
      auto [lo, hi] = prob_bounds(t);
      if (lo > o.q) return Verdict::True;
      if (hi <= o.q) return Verdict::False;
      return Verdict::Unknown;
    }
    case Modality::Kind::Store: {
      auto r = exec_store(t, o.from, th, b);
      if (std::holds_alternative<ExecUnknown>(r)) return Verdict::Unknown;
      if (std::holds_alternative<ExecNoResult>(r)) return Verdict::False;
      return vbool(std::get<ExecDone<Unit>>(r).state == o.to);
    }
    case Modality::Kind::IoDone:
      return io_done_verdict(t, o.trace, 0);
    case Modality::Kind::IoPref:
      return io_pref_verdict(t, o.trace, 0);
  }
  return Verdict::Unknown;
}

}  // namespace efflog
