#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace slalog {

// Terms are immutable once constructed and shared freely between threads.
class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Var, Sym, Int, Real, Str, Cmp };

struct Term {
  TermKind kind;
  std::string text;      // Var: name, Sym: symbol, Cmp: functor, Str: payload
  std::string type_tag;  // Var only; "" means untyped (root type "thing")
  std::int64_t ival = 0;
  double rval = 0.0;
  std::vector<TermPtr> args;  // Cmp only

  bool is_var() const { return kind == TermKind::Var; }
  bool is_compound() const { return kind == TermKind::Cmp; }
  bool is_atomic() const { return kind != TermKind::Var && kind != TermKind::Cmp; }
  std::size_t arity() const { return kind == TermKind::Cmp ? args.size() : 0; }
};

TermPtr mk_var(std::string name, std::string type_tag = "");
TermPtr mk_sym(std::string name);
TermPtr mk_int(std::int64_t v);
TermPtr mk_real(double v);
TermPtr mk_str(std::string v);
TermPtr mk_cmp(std::string functor, std::vector<TermPtr> args);

bool term_eq(const TermPtr& a, const TermPtr& b);

// Canonical key: injective over term structure, stable across runs.
// Distinguishes 2 (int) from 2.0 (real) and from "2" (string).
std::string term_key(const TermPtr& t);

// Human-readable form in the textual rule syntax.
std::string term_str(const TermPtr& t);

bool term_is_ground(const TermPtr& t);
void collect_vars(const TermPtr& t, std::vector<std::string>& out);
bool occurs_in(const std::string& var, const TermPtr& t);

// atom must be Sym (0-ary predicate) or Cmp.
// naf may wrap a neg literal; neg applies to the atom only.
struct Literal {
  TermPtr atom;
  bool neg = false;
  bool naf = false;
};

Literal mk_lit(TermPtr atom, bool neg = false, bool naf = false);
bool literal_eq(const Literal& a, const Literal& b);
std::string literal_key(const Literal& l);
std::string literal_str(const Literal& l);

// Predicate key treats explicitly negated atoms as distinct predicates.
std::string pred_key(const std::string& functor, std::size_t arity, bool neg);
std::string pred_key(const Literal& l);

Literal complement(const Literal& l);  // p <-> neg p (naf must be off)

enum class RuleKind { Strict, Defeasible, Defeater };

struct Rule {
  std::string label;  // optional, "" = unlabeled
  RuleKind kind = RuleKind::Strict;
  Literal head;  // never carries naf
  std::vector<Literal> body;
};

struct IntegrityConstraint {
  std::vector<Literal> body;  // denial: violated when the body succeeds
};

enum class TruthValue { False, Undefined, True };

const char* truth_str(TruthValue v);
TruthValue truth_complement(TruthValue v);  // False<->True, Undefined fixed

}  // namespace slalog
