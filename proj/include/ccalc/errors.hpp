#ifndef CCALC_ERRORS_HPP
#define CCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccalc {

// Rejected input text. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A series accumulator grew past the configured monomial budget. This is a
// hard resource error: results are never silently truncated below the
// requested degree.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::size_t cap, std::size_t attempted)
        : std::runtime_error("monomial budget exceeded: " + std::to_string(attempted) +
                             " terms needed, cap is " + std::to_string(cap)),
          cap_(cap), attempted_(attempted) {}

    std::size_t cap() const noexcept { return cap_; }
    std::size_t attempted() const noexcept { return attempted_; }

private:
    std::size_t cap_;
    std::size_t attempted_;
};

} // namespace ccalc

#endif
