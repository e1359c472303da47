#include "ast.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace slalog {

TermPtr mk_var(std::string name, std::string type_tag) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->text = std::move(name);
  t->type_tag = std::move(type_tag);
  return t;
}

TermPtr mk_sym(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Sym;
  t->text = std::move(name);
  return t;
}

TermPtr mk_int(std::int64_t v) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Int;
  t->ival = v;
  return t;
}

TermPtr mk_real(double v) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Real;
  t->rval = v;
  return t;
}

TermPtr mk_str(std::string v) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Str;
  t->text = std::move(v);
  return t;
}

TermPtr mk_cmp(std::string functor, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Cmp;
  t->text = std::move(functor);
  t->args = std::move(args);
  return t;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var:
      return a->text == b->text && a->type_tag == b->type_tag;
    case TermKind::Sym:
    case TermKind::Str:
      return a->text == b->text;
    case TermKind::Int:
      return a->ival == b->ival;
    case TermKind::Real:
      return a->rval == b->rval;
    case TermKind::Cmp: {
      if (a->text != b->text || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_eq(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

void key_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += "v:";
      out += t->text;
      if (!t->type_tag.empty()) {
        out += ':';
        out += t->type_tag;
      }
      break;
    case TermKind::Sym:
      out += "c:";
      out += t->text;
      break;
    case TermKind::Int: {
      out += "i:";
      out += std::to_string(t->ival);
      break;
    }
    case TermKind::Real: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "r:%.17g", t->rval);
      out += buf;
      break;
    }
    case TermKind::Str:
      out += "s:";
      out += std::to_string(t->text.size());
      out += ':';
      out += t->text;
      break;
    case TermKind::Cmp:
      out += '(';
      out += t->text;
      for (const auto& a : t->args) {
        out += ' ';
        key_rec(a, out);
      }
      out += ')';
      break;
  }
}

bool needs_quotes(const std::string& s) {
  if (s.empty()) return true;
  if (!(std::islower(static_cast<unsigned char>(s[0])))) return true;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return true;
  return false;
}

void str_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->text;
      if (!t->type_tag.empty()) {
        out += ':';
        out += t->type_tag;
      }
      break;
    case TermKind::Sym:
      if (needs_quotes(t->text)) {
        out += '\'';
        out += t->text;
        out += '\'';
      } else {
        out += t->text;
      }
      break;
    case TermKind::Int:
      out += std::to_string(t->ival);
      break;
    case TermKind::Real: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%g", t->rval);
      out += buf;
      // a real never prints like an integer
      std::string s(buf);
      if (s.find_first_of(".eEnN") == std::string::npos) out += ".0";
      break;
    }
    case TermKind::Str:
      out += '"';
      for (char c : t->text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      break;
    case TermKind::Cmp:
      out += t->text;
      out += '(';
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        str_rec(t->args[i], out);
      }
      out += ')';
      break;
  }
}

}  // namespace

std::string term_key(const TermPtr& t) {
  std::string out;
  key_rec(t, out);
  return out;
}

std::string term_str(const TermPtr& t) {
  std::string out;
  str_rec(t, out);
  return out;
}

bool term_is_ground(const TermPtr& t) {
  if (t->kind == TermKind::Var) return false;
  if (t->kind == TermKind::Cmp)
    for (const auto& a : t->args)
      if (!term_is_ground(a)) return false;
  return true;
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->kind == TermKind::Var) {
    for (const auto& v : out)
      if (v == t->text) return;
    out.push_back(t->text);
  } else if (t->kind == TermKind::Cmp) {
    for (const auto& a : t->args) collect_vars(a, out);
  }
}

bool occurs_in(const std::string& var, const TermPtr& t) {
  if (t->kind == TermKind::Var) return t->text == var;
  if (t->kind == TermKind::Cmp)
    for (const auto& a : t->args)
      if (occurs_in(var, a)) return true;
  return false;
}

Literal mk_lit(TermPtr atom, bool neg, bool naf) {
  Literal l;
  l.atom = std::move(atom);
  l.neg = neg;
  l.naf = naf;
  return l;
}

bool literal_eq(const Literal& a, const Literal& b) {
  return a.neg == b.neg && a.naf == b.naf && term_eq(a.atom, b.atom);
}

std::string literal_key(const Literal& l) {
  std::string out;
  if (l.naf) out += "naf ";
  if (l.neg) out += "~";
  out += term_key(l.atom);
  return out;
}

std::string literal_str(const Literal& l) {
  std::string out;
  if (l.naf) out += "not ";
  if (l.neg) out += "neg ";
  out += term_str(l.atom);
  return out;
}

std::string pred_key(const std::string& functor, std::size_t arity, bool neg) {
  return (neg ? "~" : "") + functor + "/" + std::to_string(arity);
}

std::string pred_key(const Literal& l) {
  return pred_key(l.atom->text, l.atom->arity(), l.neg);
}

Literal complement(const Literal& l) {
  Literal out = l;
  out.neg = !l.neg;
  out.naf = false;
  return out;
}

const char* truth_str(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Undefined: return "undefined";
  }
  return "?";
}

TruthValue truth_complement(TruthValue v) {
  switch (v) {
    case TruthValue::True: return TruthValue::False;
    case TruthValue::False: return TruthValue::True;
    case TruthValue::Undefined: return TruthValue::Undefined;
  }
  return TruthValue::Undefined;
}

}  // namespace slalog
