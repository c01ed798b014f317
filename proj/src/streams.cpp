#include "hotspot/streams.hpp"

#include <fstream>
#include <stdexcept>

#include "hotspot/rng.hpp"

namespace hotspot {

struct DigitStream::Core {
    StreamSpec spec;
    // finite specs expand to a concrete word once, at construction
    std::optional<Word> finite;
    // periodic specs: preperiod digits then period digits forever
    Word preperiod;
    Word period;

    explicit Core(StreamSpec s) : spec(std::move(s)) {
        if (const auto* p = std::get_if<StreamSpec::Periodic>(&spec.v)) {
            if (p->word.empty()) {
                throw std::invalid_argument("DigitStream: periodic word must be nonempty");
            }
            period = p->word;
        } else if (const auto* cf = std::get_if<StreamSpec::CfRational>(&spec.v)) {
            if (!(cf->num > BigInt(0) && cf->num < cf->den)) {
                throw std::invalid_argument("DigitStream: cf-rational needs 0 < num < den");
            }
            finite = *cf_digits_rational(cf->num, cf->den);
        } else if (const auto* q = std::get_if<StreamSpec::CfQuadratic>(&spec.v)) {
            if (q->period.empty()) {
                throw std::invalid_argument("DigitStream: cf-quadratic period must be nonempty");
            }
            preperiod = q->preperiod;
            period = q->period;
        } else if (const auto* e = std::get_if<StreamSpec::Explicit>(&spec.v)) {
            finite = e->word;
        }
    }

    std::optional<Digit> digit(std::uint64_t i) const {
        if (i == 0) throw std::invalid_argument("DigitStream: positions are 1-based");
        if (std::holds_alternative<StreamSpec::Ramp>(spec.v)) return i;
        if (const auto* iid = std::get_if<StreamSpec::Iid>(&spec.v)) {
            return iid->pv.quantile(counter_unit(iid->seed, i));
        }
        if (finite) {
            if (i > finite->size()) return std::nullopt;
            return (*finite)[i - 1];
        }
        if (i <= preperiod.size()) return preperiod[i - 1];
        const std::uint64_t k = i - preperiod.size() - 1;
        return period[k % period.size()];
    }

    std::optional<std::uint64_t> total_length() const {
        if (finite) return finite->size();
        return std::nullopt;
    }
};

DigitStream::DigitStream(StreamSpec spec)
    : core_(std::make_shared<const Core>(std::move(spec))) {}

DigitStream::DigitStream(std::shared_ptr<const Core> core, std::uint64_t offset)
    : core_(std::move(core)), offset_(offset) {}

std::optional<Digit> DigitStream::digit(std::uint64_t i) const {
    return core_->digit(i + offset_);
}

std::optional<std::uint64_t> DigitStream::length() const {
    auto total = core_->total_length();
    if (!total) return std::nullopt;
    return *total > offset_ ? *total - offset_ : 0;
}

DigitStream DigitStream::shifted(std::uint64_t k) const {
    return DigitStream(core_, offset_ + k);
}

const StreamSpec& DigitStream::spec() const { return core_->spec; }

std::optional<Word> cf_digits_rational(const BigInt& num, const BigInt& den) {
    if (num.is_zero()) return std::nullopt;
    if (num.is_negative() || den <= BigInt(0) || num >= den) {
        throw std::invalid_argument("cf_digits_rational: need 0 <= num < den");
    }
    std::vector<Digit> digits;
    BigInt a = den;
    BigInt b = num;  // value is b/a with 0 < b < a
    while (!b.is_zero()) {
        BigInt::DivMod dm = a.divmod(b);
        digits.push_back(dm.quot.to_uint64());
        a = std::move(b);
        b = std::move(dm.rem);
    }
    return Word(std::move(digits));
}

Word read_digit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open digit file: " + path);
    std::vector<Digit> digits;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Word one = Word::parse(line);
            if (one.size() != 1) throw std::invalid_argument("one digit per line");
            digits.push_back(one[0]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Word(std::move(digits));
}

Membership member_at(const DigitStream& x, const Word& xi, std::uint64_t i) {
    for (std::size_t j = 0; j < xi.size(); ++j) {
        auto d = x.digit(i + j + 1);
        if (!d) return Membership::exhausted;
        if (*d != xi[j]) return Membership::out;
    }
    return Membership::in;
}

std::string StreamSpec::describe() const {
    struct Visitor {
        std::string operator()(const Ramp&) const { return "ramp"; }
        std::string operator()(const Periodic& p) const { return "periodic(" + p.word.str() + ")"; }
        std::string operator()(const Iid& i) const {
            return "iid(" + i.pv.describe() + ",seed=" + std::to_string(i.seed) + ")";
        }
        std::string operator()(const CfRational& c) const {
            return "cf-rational(" + c.num.to_string() + "/" + c.den.to_string() + ")";
        }
        std::string operator()(const CfQuadratic& q) const {
            return "cf-quadratic(" + q.preperiod.str() + ";" + q.period.str() + ")";
        }
        std::string operator()(const Explicit& e) const { return "explicit(" + e.word.str() + ")"; }
    };
    return std::visit(Visitor{}, v);
}

}  // namespace hotspot
