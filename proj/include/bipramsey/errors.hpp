#pragma once

#include <stdexcept>
#include <string>

namespace bipramsey {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input is not a well-formed instance (bad sizes, out-of-range indices,
// duplicate colors, unparsable file).
struct MalformedInput : Error {
  using Error::Error;
};

// Two rectangles share a cell, so the cover is a genuine multigraph and has no
// single-color matrix form.
struct OverlapError : Error {
  using Error::Error;
};

// Size limits on exhaustive routines.
struct GuardExceeded : Error {
  using Error::Error;
};

struct InstanceTooLarge : GuardExceeded {
  using GuardExceeded::GuardExceeded;
};

struct TooManySubsets : GuardExceeded {
  using GuardExceeded::GuardExceeded;
};

struct GenerationFailed : Error {
  using Error::Error;
};

struct NotTwoColored : Error {
  using Error::Error;
};

}  // namespace bipramsey
