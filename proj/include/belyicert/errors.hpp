#ifndef BELYICERT_ERRORS_HPP
#define BELYICERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace belyicert
{

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &what, std::size_t position)
  : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
    _position(position)
  {}

  std::size_t position() const
  { return _position; }

private:
  std::size_t _position;
};

class DegreeMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A size or wall-clock budget ran out before an exact answer was reached.
class ResourceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Detected fingerprint collision or another broken internal invariant.
class IntegrityError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace belyicert

#endif // BELYICERT_ERRORS_HPP
