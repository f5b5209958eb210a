#ifndef BSA_ERRORS_HPP
#define BSA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BSA_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

BSA_DEFINE_ERROR(OutOfRange);
BSA_DEFINE_ERROR(InvalidNumber);
BSA_DEFINE_ERROR(UnknownFamily);
BSA_DEFINE_ERROR(GeneratorShapeError);
BSA_DEFINE_ERROR(MissingGenerator);
BSA_DEFINE_ERROR(PreconditionViolated);
BSA_DEFINE_ERROR(NotStrict);
BSA_DEFINE_ERROR(WrongNeutral);
BSA_DEFINE_ERROR(BoundaryInput);
BSA_DEFINE_ERROR(EmptyList);
BSA_DEFINE_ERROR(SizeLimit);
BSA_DEFINE_ERROR(UnknownOperator);
BSA_DEFINE_ERROR(ConfigError);

#undef BSA_DEFINE_ERROR

/// Parse failure with a byte offset into the offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bsa

#endif
