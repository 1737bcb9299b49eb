#ifndef ALEXSPAN_ERRORS_HPP_
#define ALEXSPAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace alexspan
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or map data (bad ids, dangling endpoints, bad rotation).
class InvalidInput : public Error
{
public:
  using Error::Error;
};

/// A vertex or edge id that does not exist in the graph.
class UnknownId : public InvalidInput
{
public:
  UnknownId(const std::string & kind, const std::string & id)
  : InvalidInput("unknown " + kind + " id '" + id + "'") {}
};

/// The input violates a mathematical precondition (connectivity, balance,
/// planarity, ...). Maps to the "validation failure" exit code of the CLI.
class PreconditionFailed : public Error
{
public:
  using Error::Error;
};

/// Exponential enumeration refused because the instance is too large.
class GuardLimitExceeded : public Error
{
public:
  using Error::Error;
};

/// A result that theory guarantees turned out false: signals a bug.
class InternalError : public Error
{
public:
  using Error::Error;
};

}  // namespace alexspan

#endif  // ALEXSPAN_ERRORS_HPP_
