#pragma once

#include <stdexcept>
#include <string>

namespace logres {

class LogresError : public std::runtime_error {
 public:
  LogresError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define LOGRES_ERROR(Name)                                                        \
  class Name : public LogresError {                                             \
   public:                                                                      \
    explicit Name(const std::string& what) : LogresError(#Name, what) {}        \
  };

LOGRES_ERROR(NotSharp)
LOGRES_ERROR(NotMonomialFixpoint)
LOGRES_ERROR(NotBalanced)
LOGRES_ERROR(NoMaximalContact)
LOGRES_ERROR(EmptyCenter)
LOGRES_ERROR(NotDivisible)
LOGRES_ERROR(DepthExceeded)
LOGRES_ERROR(NotSynchronized)
LOGRES_ERROR(ParseError)
LOGRES_ERROR(InvalidArgument)

#undef LOGRES_ERROR

}  // namespace logres
