#pragma once

#include <stdexcept>
#include <string>

namespace toricap {

struct ToricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDomain : ToricError {
  using ToricError::ToricError;
};
struct NotConvexToric : ToricError {
  using ToricError::ToricError;
};
struct BadQuadrilateral : ToricError {
  using ToricError::ToricError;
};
struct BadParameter : ToricError {
  using ToricError::ToricError;
};
struct NotPermissible : ToricError {
  using ToricError::ToricError;
};
struct OutOfClosedFormRange : ToricError {
  using ToricError::ToricError;
};
struct BudgetExceeded : ToricError {
  using ToricError::ToricError;
};
struct ParseError : ToricError {
  using ToricError::ToricError;
};

}  // namespace toricap
