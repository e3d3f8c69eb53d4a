#pragma once

#include <stdexcept>
#include <string>

namespace belt {

// Base for everything the library throws on bad input. I/O failures use IoError
// so callers (the CLI in particular) can map them to distinct exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInstance : Error { using Error::Error; };
struct MissingType : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct IncompleteAssignment : Error { using Error::Error; };
struct NotNormalForm : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InvalidSlots : Error { using Error::Error; };
struct EmptyLog : Error { using Error::Error; };
struct CorpusError : Error { using Error::Error; };
struct UnknownStrategy : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

}  // namespace belt
