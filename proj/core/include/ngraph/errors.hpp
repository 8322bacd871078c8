#pragma once

#include <stdexcept>
#include <string>

namespace ngraph {

// Formula text that does not lex or parse. `position` is a byte offset into
// the input.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, size_t position)
      : std::runtime_error(std::move(msg)), position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

// A graph that violates the proof-graph schema (bad link arity, label
// mismatch against a link schema, node shared by two links in the same role,
// unknown node id, duplicate id, ...). `subject` names the offending node or
// link when known.
class StructuralError : public std::runtime_error {
public:
  StructuralError(std::string msg, std::string subject = {})
      : std::runtime_error(std::move(msg)), subject_(std::move(subject)) {}
  const std::string& subject() const { return subject_; }

private:
  std::string subject_;
};

// Raised instead of starting a computation whose cost is exponential in the
// number of switchable links when that number exceeds the configured bound.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(std::string msg, int switchable_count, int bound)
      : std::runtime_error(std::move(msg)),
        switchable_count_(switchable_count), bound_(bound) {}
  int switchable_count() const { return switchable_count_; }
  int bound() const { return bound_; }

private:
  int switchable_count_;
  int bound_;
};

// An argument outside a function's documented domain, e.g. asking for the
// empire order on a premise or conclusion node.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition does not hold, e.g. find_split called while a
// reducible initial/final link is still present.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Sequentialization reached a state its case analysis cannot handle. On
// sound inputs this indicates a bug and the message says what failed.
class SequentializeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ngraph
