#ifndef CLONEDUAL_ERRORS_HPP
#define CLONEDUAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clonedual {

// Base class for everything the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values live over ground/index sets of different sizes.
struct SizeMismatchError : Error {
  using Error::Error;
};

// A raw point map failed uniform continuity; carries the first violated
// generator of the target space.
struct NotUniformError : Error {
  NotUniformError(const std::string& what, std::size_t generator)
      : Error(what), generator_index(generator) {}
  std::size_t generator_index;
};

// A labeling handed to an algebra operation is not a member of the algebra.
struct MembershipError : Error {
  using Error::Error;
};

// A level-congruence family violates bond-image compatibility; carries the
// first bad level.
struct IncompatibleFamilyError : Error {
  IncompatibleFamilyError(const std::string& what, std::size_t level)
      : Error(what), level(level) {}
  std::size_t level;
};

// Any other input rejected at construction or call time.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed instance file (parse or schema level).
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace clonedual

#endif
