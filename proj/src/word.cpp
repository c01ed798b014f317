#include "hotspot/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace hotspot {

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) {
    for (Digit d : digits_) {
        if (d == 0) throw std::invalid_argument("Word: digits start at 1, got 0");
    }
}

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "\xce\xb5" /* ε */) return Word();
    std::vector<Digit> digits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("Word: empty digit token");
        Digit value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("Word: invalid digit character");
            Digit next = value * 10 + static_cast<Digit>(c - '0');
            if (next < value) throw std::invalid_argument("Word: digit overflow");
            value = next;
        }
        if (value == 0) throw std::invalid_argument("Word: digits start at 1, got 0");
        digits.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("Word: trailing comma");
    }
    return Word(std::move(digits));
}

Digit Word::max_digit() const {
    Digit out = 0;
    for (Digit d : digits_) out = std::max(out, d);
    return out;
}

bool Word::is_prefix_of(const Word& other) const {
    if (size() > other.size()) return false;
    return std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

Word Word::prefix(std::size_t length) const {
    Word out;
    out.digits_.assign(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(length));
    return out;
}

Word Word::appended(Digit d) const {
    if (d == 0) throw std::invalid_argument("Word: digits start at 1, got 0");
    Word out = *this;
    out.digits_.push_back(d);
    return out;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    return std::lexicographical_compare_three_way(digits_.begin(), digits_.end(),
                                                  rhs.digits_.begin(), rhs.digits_.end());
}

std::string Word::str() const {
    if (digits_.empty()) return "\xce\xb5";
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(digits_[i]);
    }
    return out;
}

}  // namespace hotspot
