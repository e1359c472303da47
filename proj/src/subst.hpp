#pragma once

#include <map>
#include <string>

#include "ast.hpp"

namespace slalog {

// Idempotent variable bindings. walk() resolves chains; apply() substitutes deeply.
using Subst = std::map<std::string, TermPtr>;

TermPtr walk(TermPtr t, const Subst& s);
TermPtr apply_subst(const TermPtr& t, const Subst& s);
Literal apply_subst(const Literal& l, const Subst& s);

// Restrict s to the given variables (used to project answers onto query vars).
Subst restrict_subst(const Subst& s, const std::vector<std::string>& vars);

// Rename every variable in the term with the given suffix. Used to rename
// rule variables apart before resolution.
TermPtr rename_vars(const TermPtr& t, const std::string& suffix);
Literal rename_vars(const Literal& l, const std::string& suffix);

// Canonical form: variables renamed _G0, _G1, ... in first-occurrence order.
// Two terms are alpha-equivalent iff their canonical keys are equal.
TermPtr canonicalize(const TermPtr& t);
std::string canonical_key(const TermPtr& t);

}  // namespace slalog
