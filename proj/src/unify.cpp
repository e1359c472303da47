#include "unify.hpp"

namespace slalog {

namespace {

const Taxonomy& builtin_taxonomy() {
  static const Taxonomy tax;
  return tax;
}

const TypeAssertions& empty_assertions() {
  static const TypeAssertions a;
  return a;
}

bool occurs_after_walk(const std::string& var, const TermPtr& t, const Subst& s) {
  TermPtr w = walk(t, s);
  if (w->kind == TermKind::Var) return w->text == var;
  if (w->kind == TermKind::Cmp)
    for (const auto& a : w->args)
      if (occurs_after_walk(var, a, s)) return true;
  return false;
}

bool unify_rec(const TermPtr& ta, const TermPtr& tb, Subst& s, const TypeContext& ctx,
               const UnifyOptions& opts) {
  TermPtr a = walk(ta, s);
  TermPtr b = walk(tb, s);

  if (a->kind == TermKind::Var && b->kind == TermKind::Var) {
    if (a->text == b->text) return true;
    const std::string& tag_a = a->type_tag;
    const std::string& tag_b = b->type_tag;
    // keep the variable carrying the more specific tag
    if (tag_a.empty() || ctx.tax().subtype_of_nothrow(tag_b, tag_a)) {
      s[a->text] = b;
      return true;
    }
    if (tag_b.empty() || ctx.tax().subtype_of_nothrow(tag_a, tag_b)) {
      s[b->text] = a;
      return true;
    }
    return false;  // incomparable tags
  }
  if (a->kind == TermKind::Var || b->kind == TermKind::Var) {
    if (b->kind == TermKind::Var) std::swap(a, b);
    if (!a->type_tag.empty()) {
      if (b->kind == TermKind::Cmp) {
        // compounds carry no asserted type; only the root tag admits them
        if (!(a->type_tag == Taxonomy::root())) return false;
      } else if (!term_has_type(b, a->type_tag, ctx.tax(), ctx.asserts())) {
        return false;
      }
    }
    if (opts.occurs_check && b->kind == TermKind::Cmp && occurs_after_walk(a->text, b, s))
      return false;
    s[a->text] = b;
    return true;
  }

  if (a->kind != b->kind) return false;
  switch (a->kind) {
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
        if (!unify_rec(a->args[i], b->args[i], s, ctx, opts)) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

const Taxonomy& TypeContext::tax() const { return taxonomy ? *taxonomy : builtin_taxonomy(); }
const TypeAssertions& TypeContext::asserts() const {
  return assertions ? *assertions : empty_assertions();
}

std::optional<Subst> unify(const TermPtr& a, const TermPtr& b, Subst bindings,
                           const TypeContext& ctx, const UnifyOptions& opts) {
  if (unify_rec(a, b, bindings, ctx, opts)) return bindings;
  return std::nullopt;
}

std::optional<Subst> unify_literals(const Literal& a, const Literal& b, Subst bindings,
                                    const TypeContext& ctx, const UnifyOptions& opts) {
  if (a.neg != b.neg || a.naf != b.naf) return std::nullopt;
  return unify(a.atom, b.atom, std::move(bindings), ctx, opts);
}

}  // namespace slalog
