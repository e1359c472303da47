#pragma once

#include <stdexcept>
#include <string>

namespace slalog {

enum class ErrorKind {
  Parse,          // syntax or schema error, carries location
  Validation,     // bad module/rule/norm structure
  UnknownType,    // taxonomy lookup of an undeclared type
  UnknownEntity,  // missing module id, norm id, rule label
  Duplicate,      // duplicate module id, label, registration
  Collision,      // attachment name vs rule-defined predicate
  Instantiation,  // unbound input-mode argument, unsafe negation
  Resource,       // step/depth/grounding budget exceeded
  EventOrder,     // event stream timestamp regression
  Io,
  Internal,
};

struct SourceLoc {
  std::string origin;  // file name or synthetic origin
  int line = 0;        // 1-based, 0 = unknown
  int column = 0;

  std::string str() const;
};

class SlalogError : public std::runtime_error {
 public:
  SlalogError(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  SlalogError(ErrorKind kind, std::string message, SourceLoc loc)
      : std::runtime_error(loc.str() + ": " + message), kind_(kind), loc_(std::move(loc)) {}

  ErrorKind kind() const { return kind_; }
  const SourceLoc& loc() const { return loc_; }

 private:
  ErrorKind kind_;
  SourceLoc loc_;
};

}  // namespace slalog
