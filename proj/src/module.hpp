#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ast.hpp"
#include "subst.hpp"

namespace slalog {

using Timestamp = std::int64_t;  // milliseconds since epoch 0 of the run

struct RuleModule;

// ---------------------------------------------------------------------------
// Event algebra expressions.
// Windows are absolute [lo,hi] intervals or relative durations resolved
// against the detection horizon.

struct EventWindow {
  bool relative = false;
  Timestamp lo = 0;
  Timestamp hi = 0;   // absolute form
  Timestamp dur = 0;  // relative form
};

struct EventExpr;
using EventExprPtr = std::shared_ptr<const EventExpr>;

enum class EventOp { Prim, Seq, Both, Either, Absent, Times };

struct EventExpr {
  EventOp op = EventOp::Prim;
  TermPtr pattern;    // Prim: event term pattern, may contain variables
  EventExprPtr a, b;  // Seq/Both/Either: both; Absent/Times: a only
  int count = 1;      // Times: n >= 1
  std::optional<EventWindow> window;  // Absent/Times
};

EventExprPtr event_prim(TermPtr pattern);
EventExprPtr event_seq(EventExprPtr a, EventExprPtr b);
EventExprPtr event_both(EventExprPtr a, EventExprPtr b);
EventExprPtr event_either(EventExprPtr a, EventExprPtr b);
EventExprPtr event_absent(EventExprPtr a, EventWindow w);
EventExprPtr event_times(EventExprPtr a, int n, EventWindow w);

// Term form used by both serialization syntaxes: seq/2, both/2, either/2,
// absent/2, times/3 with interval(lo,hi) or a plain duration for windows.
TermPtr event_expr_to_term(const EventExprPtr& e);
EventExprPtr term_to_event_expr(const TermPtr& t);  // throws Validation
bool term_is_event_expr(const TermPtr& t);

bool event_expr_eq(const EventExprPtr& a, const EventExprPtr& b);
std::string event_expr_str(const EventExprPtr& e);

// ---------------------------------------------------------------------------
// Reactive rules.

struct Action {
  enum class Kind { AddModule, RemoveModule, AssertFact, RetractFact, Notify, CallAttachment };
  Kind kind = Kind::AssertFact;
  std::shared_ptr<const RuleModule> module;  // AddModule
  std::string module_id;                     // RemoveModule
  Literal fact;                              // AssertFact/RetractFact (no naf)
  TermPtr channel;                           // Notify
  TermPtr payload;                           // Notify
  TermPtr call;                              // CallAttachment
};

struct EcaRule {
  std::string id;
  Timestamp every = 0;         // polling period in ms; ignored when on_ingest
  bool on_ingest = false;      // tick when an event batch commits
  bool event_is_query = false; // plain KB query instead of a detection
  EventExprPtr event;
  std::vector<Literal> event_query;
  std::vector<Literal> condition;  // empty = unconditionally true
  std::vector<Action> actions;
  std::vector<Action> else_actions;
};

// ---------------------------------------------------------------------------
// Deontic norms.

enum class NormKind { Obligation, Prohibition, Permission };
enum class TriggerMode { None, Event, Condition };
enum class TargetMode { Event, Fluent };

struct Deadline {
  bool relative = true;  // relative to activation vs absolute timestamp
  Timestamp value = 0;
};

struct Norm {
  std::string id;
  NormKind kind = NormKind::Obligation;
  TermPtr bearer;  // may be null when unspecified
  TriggerMode trigger_mode = TriggerMode::None;  // None: activated by reparation only
  EventExprPtr trigger_event;
  std::vector<Literal> trigger_condition;
  TargetMode target_mode = TargetMode::Event;
  TermPtr target;  // required for obligations/prohibitions
  std::optional<Deadline> deadline;
  std::string reparation;  // norm id activated on violation, "" = none
};

// ---------------------------------------------------------------------------
// Declarative test cases.

struct TestCase {
  std::string id;
  std::vector<Literal> query;
  enum class Expect { True, False, Undefined, Answers } expect = Expect::True;
  std::vector<Subst> answers;  // Expect::Answers, keyed by query variable name
  std::string fixture;         // optional .ctr path, resolved against the suite file
  std::optional<Timestamp> at; // binds the reserved symbol `now` in the query
};

// ---------------------------------------------------------------------------
// Unitized rule module. Priorities, constraints and taxonomy edges live in
// the module so removing it removes them with it.

struct RuleModule {
  std::string id;
  std::vector<Rule> rules;
  std::vector<Literal> facts;  // neg allowed, naf not
  std::vector<std::pair<std::string, std::string>> priorities;  // (winner, loser)
  std::vector<IntegrityConstraint> constraints;
  std::vector<std::pair<std::string, std::string>> taxonomy_edges;  // (sub, super)
  std::vector<EcaRule> eca_rules;
  std::vector<Norm> norms;
  std::vector<TestCase> tests;
};

bool rule_eq(const Rule& a, const Rule& b);
bool action_eq(const Action& a, const Action& b);
bool eca_rule_eq(const EcaRule& a, const EcaRule& b);
bool norm_eq(const Norm& a, const Norm& b);
bool test_case_eq(const TestCase& a, const TestCase& b);

// Deep structural equality; priority and taxonomy sets compare order-free.
bool module_eq(const RuleModule& a, const RuleModule& b);

}  // namespace slalog
