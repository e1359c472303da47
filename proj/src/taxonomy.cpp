#include "taxonomy.hpp"

namespace slalog {

Taxonomy::Taxonomy() {
  types_.insert(root());
  add_edge("number", root());
  add_edge("integer", "number");
  add_edge("decimal", "number");
  add_edge("text", root());
}

void Taxonomy::add_edge(const std::string& sub, const std::string& super) {
  if (sub == super)
    throw SlalogError(ErrorKind::Validation, "taxonomy cycle: " + sub + " < " + sub);
  // reject edges that would close a cycle
  if (subtype_of_nothrow(super, sub))
    throw SlalogError(ErrorKind::Validation,
                      "taxonomy cycle introduced by " + sub + " < " + super);
  edges_.insert({sub, super});
  supers_[sub].push_back(super);
  types_.insert(sub);
  types_.insert(super);
}

bool Taxonomy::declared(const std::string& type) const { return types_.count(type) > 0; }

bool Taxonomy::subtype_of_nothrow(const std::string& sub, const std::string& super) const {
  if (sub == super) return true;
  if (super == root()) return types_.count(sub) > 0;
  // upward DFS; taxonomies are small
  std::vector<const std::string*> stack{&sub};
  std::set<std::string> seen;
  while (!stack.empty()) {
    const std::string& cur = *stack.back();
    stack.pop_back();
    if (cur == super) return true;
    if (!seen.insert(cur).second) continue;
    auto it = supers_.find(cur);
    if (it != supers_.end())
      for (const auto& s : it->second) stack.push_back(&s);
  }
  return false;
}

bool Taxonomy::subtype_of(const std::string& sub, const std::string& super) const {
  if (!declared(sub)) throw SlalogError(ErrorKind::UnknownType, "unknown type: " + sub);
  if (!declared(super)) throw SlalogError(ErrorKind::UnknownType, "unknown type: " + super);
  return subtype_of_nothrow(sub, super);
}

void TypeAssertions::add(const std::string& constant, const std::string& type) {
  auto& v = map_[constant];
  for (const auto& t : v)
    if (t == type) return;
  v.push_back(type);
}

const std::vector<std::string>* TypeAssertions::types_of(const std::string& constant) const {
  auto it = map_.find(constant);
  return it == map_.end() ? nullptr : &it->second;
}

bool term_has_type(const TermPtr& t, const std::string& want, const Taxonomy& tax,
                   const TypeAssertions& assertions) {
  if (want.empty() || want == Taxonomy::root()) return true;
  switch (t->kind) {
    case TermKind::Int:
      return tax.subtype_of_nothrow("integer", want);
    case TermKind::Real:
      return tax.subtype_of_nothrow("decimal", want);
    case TermKind::Str:
      return tax.subtype_of_nothrow("text", want);
    case TermKind::Sym: {
      if (const auto* types = assertions.types_of(t->text))
        for (const auto& ty : *types)
          if (tax.subtype_of_nothrow(ty, want)) return true;
      return false;
    }
    default:
      // compounds and the root type only
      return false;
  }
}

}  // namespace slalog
