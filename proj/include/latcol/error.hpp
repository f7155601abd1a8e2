#pragma once

#include <stdexcept>
#include <string>

namespace latcol {

// Base of every error raised by the library. kind() is a stable token used in
// machine-readable error lines.
class Error : public std::runtime_error {
public:
  Error(const char* kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  const char* kind() const noexcept { return kind_; }

private:
  const char* kind_;
};

// Value outside the safe coordinate range, or an intermediate overflowed int64.
class RangeError : public Error {
public:
  explicit RangeError(const std::string& what) : Error("range_error", what) {}
};

// Input violates a mathematical precondition.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}

protected:
  DomainError(const char* kind, const std::string& what) : Error(kind, what) {}
};

class DegenerateSegment : public DomainError {
public:
  explicit DegenerateSegment(const std::string& what)
      : DomainError("degenerate_segment", what) {}
};

class DegenerateTriangle : public DomainError {
public:
  explicit DegenerateTriangle(const std::string& what)
      : DomainError("degenerate_triangle", what) {}
};

class DegenerateInput : public DomainError {
public:
  explicit DegenerateInput(const std::string& what)
      : DomainError("degenerate_input", what) {}
};

class ResourceLimit : public Error {
public:
  explicit ResourceLimit(const std::string& what) : Error("resource_limit", what) {}
};

// A mathematical identity the code relies on did not hold. Always a bug.
class InvariantFailure : public Error {
public:
  explicit InvariantFailure(const std::string& what)
      : Error("invariant_failure", what) {}
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InvariantFailure(what);
}

}  // namespace latcol
