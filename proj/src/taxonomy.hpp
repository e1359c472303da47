#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ast.hpp"
#include "errors.hpp"

namespace slalog {

// Subclass taxonomy with implicit root "thing". Built-in numeric and text
// types are always present: integer < number, decimal < number,
// number < thing, text < thing. Declared types without a parent edge hang
// directly under the root.
class Taxonomy {
 public:
  Taxonomy();

  // Throws Validation on a cycle.
  void add_edge(const std::string& sub, const std::string& super);

  bool declared(const std::string& type) const;

  // Reflexive-transitive reachability. Throws UnknownType for undeclared names.
  bool subtype_of(const std::string& sub, const std::string& super) const;

  // As subtype_of but undeclared names simply fail instead of throwing.
  bool subtype_of_nothrow(const std::string& sub, const std::string& super) const;

  const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }

  static const char* root() { return "thing"; }

 private:
  std::set<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::vector<std::string>> supers_;
  std::set<std::string> types_;
};

// Asserted constant types (from type/2 facts). A constant may carry several
// assertions; unification accepts any of them.
class TypeAssertions {
 public:
  void add(const std::string& constant, const std::string& type);
  const std::vector<std::string>* types_of(const std::string& constant) const;

 private:
  std::map<std::string, std::vector<std::string>> map_;
};

// Dynamic type of a non-variable term: integer/decimal/text for data
// constants, an asserted type for symbols, "thing" otherwise.
bool term_has_type(const TermPtr& t, const std::string& want, const Taxonomy& tax,
                   const TypeAssertions& assertions);

}  // namespace slalog
