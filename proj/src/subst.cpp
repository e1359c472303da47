#include "subst.hpp"

namespace slalog {

TermPtr walk(TermPtr t, const Subst& s) {
  while (t->kind == TermKind::Var) {
    auto it = s.find(t->text);
    if (it == s.end()) return t;
    t = it->second;
  }
  return t;
}

TermPtr apply_subst(const TermPtr& t, const Subst& s) {
  TermPtr w = walk(t, s);
  if (w->kind == TermKind::Cmp) {
    bool changed = false;
    std::vector<TermPtr> args;
    args.reserve(w->args.size());
    for (const auto& a : w->args) {
      TermPtr na = apply_subst(a, s);
      if (na.get() != a.get()) changed = true;
      args.push_back(std::move(na));
    }
    if (!changed) return w;
    return mk_cmp(w->text, std::move(args));
  }
  return w;
}

Literal apply_subst(const Literal& l, const Subst& s) {
  Literal out = l;
  out.atom = apply_subst(l.atom, s);
  return out;
}

Subst restrict_subst(const Subst& s, const std::vector<std::string>& vars) {
  Subst out;
  for (const auto& v : vars) {
    auto it = s.find(v);
    if (it != s.end()) out[v] = apply_subst(it->second, s);
  }
  return out;
}

TermPtr rename_vars(const TermPtr& t, const std::string& suffix) {
  switch (t->kind) {
    case TermKind::Var:
      return mk_var(t->text + suffix, t->type_tag);
    case TermKind::Cmp: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(rename_vars(a, suffix));
      return mk_cmp(t->text, std::move(args));
    }
    default:
      return t;
  }
}

Literal rename_vars(const Literal& l, const std::string& suffix) {
  Literal out = l;
  out.atom = rename_vars(l.atom, suffix);
  return out;
}

namespace {

TermPtr canon_rec(const TermPtr& t, std::map<std::string, TermPtr>& names) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = names.find(t->text);
      if (it == names.end()) {
        // type tags participate in variant identity
        TermPtr fresh = mk_var("_G" + std::to_string(names.size()), t->type_tag);
        it = names.emplace(t->text, fresh).first;
      }
      return it->second;
    }
    case TermKind::Cmp: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(canon_rec(a, names));
      return mk_cmp(t->text, std::move(args));
    }
    default:
      return t;
  }
}

}  // namespace

TermPtr canonicalize(const TermPtr& t) {
  std::map<std::string, TermPtr> names;
  return canon_rec(t, names);
}

std::string canonical_key(const TermPtr& t) { return term_key(canonicalize(t)); }

}  // namespace slalog
