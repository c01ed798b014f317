#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hotspot/bigint.hpp"
#include "hotspot/measures.hpp"
#include "hotspot/word.hpp"

namespace hotspot {

/// Deterministic, replayable digit sources. The same spec always produces
/// the same digit sequence, and digits are random-access: analyses that
/// probe positions out of order need no rewinding.
struct StreamSpec {
    /// x = (1, 2, 3, 4, ...): the orbit whose mass escapes to infinity.
    struct Ramp {};
    /// Word repeated forever; word must be nonempty.
    struct Periodic {
        Word word;
    };
    /// Digits sampled i.i.d. from the probability vector, inverse-cdf over a
    /// counter-based generator keyed by (seed, position).
    struct Iid {
        ProbabilityVector pv;
        std::uint64_t seed = 0;
    };
    /// Continued-fraction digits of num/den, 0 < num < den. Finite.
    struct CfRational {
        BigInt num;
        BigInt den;
    };
    /// Quadratic-irrational style stream: preperiod digits, then the period
    /// repeated forever. Period must be nonempty.
    struct CfQuadratic {
        Word preperiod;
        Word period;
    };
    /// The word itself; finite.
    struct Explicit {
        Word word;
    };

    std::variant<Ramp, Periodic, Iid, CfRational, CfQuadratic, Explicit> v;

    std::string describe() const;
};

/// A digit stream instantiated from a spec, with an optional shift offset.
/// Immutable and safely shareable; shifting is O(1).
class DigitStream {
public:
    explicit DigitStream(StreamSpec spec);  // throws std::invalid_argument on bad spec

    /// 1-based digit access; nullopt past the end of a finite stream.
    std::optional<Digit> digit(std::uint64_t i) const;

    /// Remaining length from the current offset; nullopt when infinite.
    std::optional<std::uint64_t> length() const;

    /// Stream starting k positions later: digit(i) of the result equals
    /// digit(i + k) of this stream.
    DigitStream shifted(std::uint64_t k) const;

    const StreamSpec& spec() const;

private:
    struct Core;
    DigitStream(std::shared_ptr<const Core> core, std::uint64_t offset);
    std::shared_ptr<const Core> core_;
    std::uint64_t offset_ = 0;
};

/// Continued-fraction digit word of num/den by the Euclidean algorithm,
/// 0 < num < den required. Remainders strictly decrease, so the final digit
/// is automatically >= 2: the expansion is the canonical one that never ends
/// in 1. Returns nullopt for num = 0 (the empty expansion).
std::optional<Word> cf_digits_rational(const BigInt& num, const BigInt& den);

/// Reads one digit per line; position = line number.
Word read_digit_file(const std::string& path);  // throws std::runtime_error

enum class Membership { in, out, exhausted };

/// Whether the i-th orbit point of x lies in the cylinder [xi], i.e. whether
/// digits i+1 .. i+|xi| of x spell xi (i is 0-based). A finite stream too
/// short to decide reports `exhausted`, never a silent false.
Membership member_at(const DigitStream& x, const Word& xi, std::uint64_t i);

}  // namespace hotspot
