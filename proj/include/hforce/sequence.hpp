#pragma once

#include "hforce/word.hpp"

namespace hforce {

enum class Ordering { less, equal, greater };

const char* to_string(Ordering o);

// One-sided eventually periodic sequence: a finite preperiod followed by an
// infinitely repeated nonempty period. Values are stored canonically (the
// period reduced to its primitive root, preperiod symbols that already lie
// on the periodic tail absorbed into it), so operator== is stream equality,
// not representation equality.
class EventuallyPeriodicSequence {
public:
    EventuallyPeriodicSequence(Word preperiod, Word period);

    static EventuallyPeriodicSequence periodic(Word period);

    // Text form "PRE(PER)", e.g. "10(01)" = 10 01 01 01..., "(10010)" for a
    // purely periodic sequence.
    static EventuallyPeriodicSequence parse(std::string_view text);

    const Word& preperiod() const noexcept { return preperiod_; }
    const Word& period() const noexcept { return period_; }

    int at(std::size_t i) const {
        if (i < preperiod_.size()) return preperiod_.bit(i);
        return period_.bit((i - preperiod_.size()) % period_.size());
    }

    std::string str() const;

    bool operator==(const EventuallyPeriodicSequence&) const = default;

private:
    Word preperiod_;
    Word period_;
};

// Drops the first k symbols.
EventuallyPeriodicSequence shift(const EventuallyPeriodicSequence& s, std::size_t k);

// Total unimodal order on one-sided sequences: at the first disagreement the
// natural symbol comparison applies when the number of preceding 1s is even
// and is reversed when it is odd. Two eventually periodic sequences that
// agree through max(|preperiods|) + lcm(|periods|) symbols are equal.
Ordering unimodal_cmp(const EventuallyPeriodicSequence& s,
                      const EventuallyPeriodicSequence& t);

}  // namespace hforce
