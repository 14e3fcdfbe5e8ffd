#pragma once

#include <stdexcept>
#include <string>

namespace blossom {

/// Malformed input: out-of-range vertex ids, self-loops, duplicate edges,
/// unparseable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive routine was asked to run beyond its size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The engine produced something it should never produce (e.g. a loose
/// odd-set cover). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#ifdef NDEBUG
inline constexpr bool kDebugBuild = false;
#else
inline constexpr bool kDebugBuild = true;
#endif

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractError(what);
}

}  // namespace detail
}  // namespace blossom
