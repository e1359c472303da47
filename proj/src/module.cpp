#include "module.hpp"

#include <algorithm>

#include "errors.hpp"

namespace slalog {

namespace {

EventExprPtr make_expr(EventOp op) {
  auto e = std::make_shared<EventExpr>();
  e->op = op;
  return e;
}

void check_window(const EventWindow& w) {
  if (w.relative) {
    if (w.dur < 0) throw SlalogError(ErrorKind::Validation, "negative event window duration");
  } else if (w.lo > w.hi) {
    throw SlalogError(ErrorKind::Validation, "event window has lo > hi");
  }
}

}  // namespace

EventExprPtr event_prim(TermPtr pattern) {
  auto e = std::make_shared<EventExpr>();
  e->op = EventOp::Prim;
  e->pattern = std::move(pattern);
  return e;
}

EventExprPtr event_seq(EventExprPtr a, EventExprPtr b) {
  auto e = make_expr(EventOp::Seq);
  auto* m = const_cast<EventExpr*>(e.get());
  m->a = std::move(a);
  m->b = std::move(b);
  return e;
}

EventExprPtr event_both(EventExprPtr a, EventExprPtr b) {
  auto e = make_expr(EventOp::Both);
  auto* m = const_cast<EventExpr*>(e.get());
  m->a = std::move(a);
  m->b = std::move(b);
  return e;
}

EventExprPtr event_either(EventExprPtr a, EventExprPtr b) {
  auto e = make_expr(EventOp::Either);
  auto* m = const_cast<EventExpr*>(e.get());
  m->a = std::move(a);
  m->b = std::move(b);
  return e;
}

EventExprPtr event_absent(EventExprPtr a, EventWindow w) {
  check_window(w);
  auto e = make_expr(EventOp::Absent);
  auto* m = const_cast<EventExpr*>(e.get());
  m->a = std::move(a);
  m->window = w;
  return e;
}

EventExprPtr event_times(EventExprPtr a, int n, EventWindow w) {
  if (n < 1) throw SlalogError(ErrorKind::Validation, "times() count must be >= 1");
  check_window(w);
  auto e = make_expr(EventOp::Times);
  auto* m = const_cast<EventExpr*>(e.get());
  m->a = std::move(a);
  m->count = n;
  m->window = w;
  return e;
}

namespace {

TermPtr window_to_term(const EventWindow& w) {
  if (w.relative) return mk_int(w.dur);
  return mk_cmp("interval", {mk_int(w.lo), mk_int(w.hi)});
}

EventWindow term_to_window(const TermPtr& t) {
  EventWindow w;
  if (t->kind == TermKind::Int) {
    w.relative = true;
    w.dur = t->ival;
  } else if (t->kind == TermKind::Cmp && t->text == "interval" && t->args.size() == 2 &&
             t->args[0]->kind == TermKind::Int && t->args[1]->kind == TermKind::Int) {
    w.lo = t->args[0]->ival;
    w.hi = t->args[1]->ival;
  } else {
    throw SlalogError(ErrorKind::Validation,
                      "event window must be a duration or interval(lo,hi): " + term_str(t));
  }
  check_window(w);
  return w;
}

}  // namespace

TermPtr event_expr_to_term(const EventExprPtr& e) {
  switch (e->op) {
    case EventOp::Prim: return e->pattern;
    case EventOp::Seq: return mk_cmp("seq", {event_expr_to_term(e->a), event_expr_to_term(e->b)});
    case EventOp::Both: return mk_cmp("both", {event_expr_to_term(e->a), event_expr_to_term(e->b)});
    case EventOp::Either:
      return mk_cmp("either", {event_expr_to_term(e->a), event_expr_to_term(e->b)});
    case EventOp::Absent:
      return mk_cmp("absent", {event_expr_to_term(e->a), window_to_term(*e->window)});
    case EventOp::Times:
      return mk_cmp("times",
                    {event_expr_to_term(e->a), mk_int(e->count), window_to_term(*e->window)});
  }
  throw SlalogError(ErrorKind::Internal, "bad event expr");
}

bool term_is_event_expr(const TermPtr& t) {
  if (t->kind != TermKind::Cmp) return false;
  const auto& f = t->text;
  return (f == "seq" && t->args.size() == 2) || (f == "both" && t->args.size() == 2) ||
         (f == "either" && t->args.size() == 2) || (f == "absent" && t->args.size() == 2) ||
         (f == "times" && t->args.size() == 3);
}

EventExprPtr term_to_event_expr(const TermPtr& t) {
  if (term_is_event_expr(t)) {
    const auto& f = t->text;
    if (f == "seq") return event_seq(term_to_event_expr(t->args[0]), term_to_event_expr(t->args[1]));
    if (f == "both")
      return event_both(term_to_event_expr(t->args[0]), term_to_event_expr(t->args[1]));
    if (f == "either")
      return event_either(term_to_event_expr(t->args[0]), term_to_event_expr(t->args[1]));
    if (f == "absent") return event_absent(term_to_event_expr(t->args[0]), term_to_window(t->args[1]));
    if (f == "times") {
      if (t->args[1]->kind != TermKind::Int)
        throw SlalogError(ErrorKind::Validation, "times() count must be an integer");
      return event_times(term_to_event_expr(t->args[0]), static_cast<int>(t->args[1]->ival),
                         term_to_window(t->args[2]));
    }
  }
  if (t->kind == TermKind::Sym || t->kind == TermKind::Cmp) return event_prim(t);
  throw SlalogError(ErrorKind::Validation, "not an event expression: " + term_str(t));
}

bool event_expr_eq(const EventExprPtr& a, const EventExprPtr& b) {
  if (!a || !b) return !a && !b;
  return term_eq(event_expr_to_term(a), event_expr_to_term(b));
}

std::string event_expr_str(const EventExprPtr& e) { return term_str(event_expr_to_term(e)); }

namespace {

bool lits_eq(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!literal_eq(a[i], b[i])) return false;
  return true;
}

bool opt_term_eq(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return !a && !b;
  return term_eq(a, b);
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool rule_eq(const Rule& a, const Rule& b) {
  return a.label == b.label && a.kind == b.kind && literal_eq(a.head, b.head) &&
         lits_eq(a.body, b.body);
}

bool action_eq(const Action& a, const Action& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Action::Kind::AddModule:
      return a.module && b.module && module_eq(*a.module, *b.module);
    case Action::Kind::RemoveModule:
      return a.module_id == b.module_id;
    case Action::Kind::AssertFact:
    case Action::Kind::RetractFact:
      return literal_eq(a.fact, b.fact);
    case Action::Kind::Notify:
      return opt_term_eq(a.channel, b.channel) && opt_term_eq(a.payload, b.payload);
    case Action::Kind::CallAttachment:
      return opt_term_eq(a.call, b.call);
  }
  return false;
}

bool eca_rule_eq(const EcaRule& a, const EcaRule& b) {
  if (a.id != b.id || a.every != b.every || a.on_ingest != b.on_ingest ||
      a.event_is_query != b.event_is_query)
    return false;
  if (a.event_is_query) {
    if (!lits_eq(a.event_query, b.event_query)) return false;
  } else if (!event_expr_eq(a.event, b.event)) {
    return false;
  }
  if (!lits_eq(a.condition, b.condition)) return false;
  if (a.actions.size() != b.actions.size() || a.else_actions.size() != b.else_actions.size())
    return false;
  for (std::size_t i = 0; i < a.actions.size(); ++i)
    if (!action_eq(a.actions[i], b.actions[i])) return false;
  for (std::size_t i = 0; i < a.else_actions.size(); ++i)
    if (!action_eq(a.else_actions[i], b.else_actions[i])) return false;
  return true;
}

bool norm_eq(const Norm& a, const Norm& b) {
  if (a.id != b.id || a.kind != b.kind || a.trigger_mode != b.trigger_mode ||
      a.target_mode != b.target_mode || a.reparation != b.reparation)
    return false;
  if (!opt_term_eq(a.bearer, b.bearer) || !opt_term_eq(a.target, b.target)) return false;
  if (a.trigger_mode == TriggerMode::Event && !event_expr_eq(a.trigger_event, b.trigger_event))
    return false;
  if (a.trigger_mode == TriggerMode::Condition && !lits_eq(a.trigger_condition, b.trigger_condition))
    return false;
  if (a.deadline.has_value() != b.deadline.has_value()) return false;
  if (a.deadline &&
      (a.deadline->relative != b.deadline->relative || a.deadline->value != b.deadline->value))
    return false;
  return true;
}

bool test_case_eq(const TestCase& a, const TestCase& b) {
  if (a.id != b.id || a.expect != b.expect || a.fixture != b.fixture || a.at != b.at) return false;
  if (!lits_eq(a.query, b.query)) return false;
  if (a.answers.size() != b.answers.size()) return false;
  auto canon = [](const Subst& s) {
    std::string k;
    for (const auto& [v, t] : s) k += v + "=" + term_key(t) + ";";
    return k;
  };
  std::vector<std::string> ka, kb;
  for (const auto& s : a.answers) ka.push_back(canon(s));
  for (const auto& s : b.answers) kb.push_back(canon(s));
  return sorted(ka) == sorted(kb);
}

bool module_eq(const RuleModule& a, const RuleModule& b) {
  if (a.id != b.id) return false;
  if (a.rules.size() != b.rules.size() || !lits_eq(a.facts, b.facts)) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i)
    if (!rule_eq(a.rules[i], b.rules[i])) return false;
  if (sorted(a.priorities) != sorted(b.priorities)) return false;
  if (sorted(a.taxonomy_edges) != sorted(b.taxonomy_edges)) return false;
  if (a.constraints.size() != b.constraints.size()) return false;
  for (std::size_t i = 0; i < a.constraints.size(); ++i)
    if (!lits_eq(a.constraints[i].body, b.constraints[i].body)) return false;
  if (a.eca_rules.size() != b.eca_rules.size() || a.norms.size() != b.norms.size() ||
      a.tests.size() != b.tests.size())
    return false;
  for (std::size_t i = 0; i < a.eca_rules.size(); ++i)
    if (!eca_rule_eq(a.eca_rules[i], b.eca_rules[i])) return false;
  for (std::size_t i = 0; i < a.norms.size(); ++i)
    if (!norm_eq(a.norms[i], b.norms[i])) return false;
  for (std::size_t i = 0; i < a.tests.size(); ++i)
    if (!test_case_eq(a.tests[i], b.tests[i])) return false;
  return true;
}

}  // namespace slalog
