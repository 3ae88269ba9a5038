#include "hforce/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace hforce {

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        case Ordering::greater: return "greater";
    }
    return "?";
}

EventuallyPeriodicSequence::EventuallyPeriodicSequence(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("sequence period must be nonempty");
    period_ = period_.primitive_root();
    // Absorb preperiod symbols that already lie on the periodic tail:
    // u a (Q)^inf = u (a Q[..m-1])^inf whenever a equals the last symbol of Q.
    while (!preperiod_.empty() && preperiod_[preperiod_.size() - 1] == period_[period_.size() - 1]) {
        preperiod_ = preperiod_.prefix(preperiod_.size() - 1);
        period_ = period_.rotated(period_.size() - 1);
    }
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::periodic(Word period) {
    return {Word(), std::move(period)};
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::parse(std::string_view text) {
    std::string pre, per;
    std::size_t i = 0;
    for (; i < text.size() && text[i] != '('; ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw ParseError("invalid symbol '" + std::string(1, text[i]) + "' at index " +
                                 std::to_string(i) + " in sequence literal",
                             i);
        pre.push_back(text[i]);
    }
    if (i == text.size())
        throw ParseError("expected '(' introducing the period at index " + std::to_string(i), i);
    ++i;
    for (; i < text.size() && text[i] != ')'; ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw ParseError("invalid symbol '" + std::string(1, text[i]) + "' at index " +
                                 std::to_string(i) + " in sequence literal",
                             i);
        per.push_back(text[i]);
    }
    if (i == text.size())
        throw ParseError("expected ')' closing the period at index " + std::to_string(i), i);
    if (per.empty()) throw ParseError("period must be nonempty at index " + std::to_string(i), i);
    ++i;
    if (i != text.size())
        throw ParseError("unexpected trailing characters at index " + std::to_string(i), i);
    return {Word(std::move(pre)), Word(std::move(per))};
}

std::string EventuallyPeriodicSequence::str() const {
    return preperiod_.str() + "(" + period_.str() + ")";
}

EventuallyPeriodicSequence shift(const EventuallyPeriodicSequence& s, std::size_t k) {
    const std::size_t p = s.preperiod().size();
    if (k <= p) return {s.preperiod().suffix(k), s.period()};
    const std::size_t j = (k - p) % s.period().size();
    return {Word(), s.period().rotated(j)};
}

Ordering unimodal_cmp(const EventuallyPeriodicSequence& s, const EventuallyPeriodicSequence& t) {
    const std::size_t bound =
        std::max(s.preperiod().size(), t.preperiod().size()) +
        std::lcm(s.period().size(), t.period().size());
    bool odd = false;
    for (std::size_t i = 0; i < bound; ++i) {
        const int a = s.at(i);
        const int b = t.at(i);
        if (a != b) return ((a < b) != odd) ? Ordering::less : Ordering::greater;
        odd = odd != (a == 1);
    }
    return Ordering::equal;
}

}  // namespace hforce
