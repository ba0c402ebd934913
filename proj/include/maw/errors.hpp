#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace maw {

// Domain-rule violation with a stable machine-readable name (e.g.
// "NotMeasurePreserving").  The CLI prints name() on stderr and exits 1.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

// Malformed input text; the CLI exits 2 on these.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
  throw DomainError(name, what);
}

}  // namespace maw
