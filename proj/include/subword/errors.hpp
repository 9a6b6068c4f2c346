#pragma once

#include <stdexcept>

namespace subword {

// Result does not fit a fixed-capacity container (word length, direct-sum
// limit, dense-matrix limit).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Operand lengths disagree, or an operation received a word of unusable length.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters violate a theorem hypothesis; the message names the hypothesis.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Checked 64-bit arithmetic overflowed.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace subword
