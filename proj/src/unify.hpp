#pragma once

#include <optional>

#include "subst.hpp"
#include "taxonomy.hpp"

namespace slalog {

struct UnifyOptions {
  bool occurs_check = true;
};

// Typed unification context. Default-constructed context has only the
// built-in taxonomy and no constant type assertions.
struct TypeContext {
  const Taxonomy* taxonomy = nullptr;
  const TypeAssertions* assertions = nullptr;

  const Taxonomy& tax() const;
  const TypeAssertions& asserts() const;
};

// Most general unifier extending `bindings`, or nullopt on failure.
// A typed variable X:T binds only to terms whose type is T or a subtype;
// two typed variables unify iff their tags are comparable, and the result
// carries the more specific tag.
std::optional<Subst> unify(const TermPtr& a, const TermPtr& b, Subst bindings,
                           const TypeContext& ctx = {}, const UnifyOptions& opts = {});

std::optional<Subst> unify_literals(const Literal& a, const Literal& b, Subst bindings,
                                    const TypeContext& ctx = {},
                                    const UnifyOptions& opts = {});

}  // namespace slalog
