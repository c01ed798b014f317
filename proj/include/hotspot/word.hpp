#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hotspot {

/// Digits of the shift space are positive integers starting at 1.
using Digit = std::uint64_t;

/// Finite digit word. The empty word names the whole space.
///
/// Words are ordered lexicographically, so a proper prefix sorts before all
/// of its extensions.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Digit> digits);  // throws std::invalid_argument on a 0 digit
    Word(std::initializer_list<Digit> digits) : Word(std::vector<Digit>(digits)) {}

    /// Parses "3,4"; the empty word is "ε" (also accepted as "").
    static Word parse(std::string_view text);  // throws std::invalid_argument

    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::span<const Digit> digits() const { return digits_; }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    Digit max_digit() const;  // 0 for the empty word

    bool is_prefix_of(const Word& other) const;  // proper or improper
    Word prefix(std::size_t length) const;
    Word appended(Digit d) const;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& rhs) const;

    /// "3,4" or "ε".
    std::string str() const;

private:
    std::vector<Digit> digits_;
};

}  // namespace hotspot
