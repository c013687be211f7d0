#ifndef FFDYCK_ERRORS_HPP
#define FFDYCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdyck {

// Exhaustive search or generation would exceed the configured candidate cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact division in a closed-form formula left a remainder. Never caused by
// valid input; it means a formula was transcribed wrong.
class NonIntegerResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A string contains letters outside the selected alphabet.
class InvalidWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInU : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MalformedTree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The word-to-tree cursor walked off the tree. Signals a decoder bug.
class MalformedTraversal : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ffdyck

#endif
