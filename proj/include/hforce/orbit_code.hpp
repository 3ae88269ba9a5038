#pragma once

#include "hforce/sequence.hpp"

#include <vector>

namespace hforce {

// Raised when a word that must be an orbit code is not primitive or not
// maximal among its rotations; carries the witness rotation (or the
// primitive root for non-primitive words).
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& message, Word witness)
        : std::invalid_argument(message), witness_(std::move(witness)) {}

    const Word& witness() const noexcept { return witness_; }

private:
    Word witness_;
};

// Canonical name of a periodic orbit: a primitive word that is maximal among
// its rotations under the unimodal order.
class OrbitCode {
public:
    // Code of the orbit through w: maximal rotation of the primitive root.
    // Total on nonempty words; never rejects.
    static OrbitCode canonical(const Word& w);

    // Validating constructor: w itself must already be a code.
    static OrbitCode checked(Word w);

    const Word& word() const noexcept { return word_; }
    std::size_t period() const noexcept { return word_.size(); }

    // The purely periodic sequence word^inf.
    EventuallyPeriodicSequence sequence() const;

    bool operator==(const OrbitCode&) const = default;

private:
    explicit OrbitCode(Word w) : word_(std::move(w)) {}
    Word word_;
};

bool is_primitive(const Word& w);

// True iff r^inf <=1 w^inf for every rotation r of w.
bool is_maximal(const Word& w);

inline OrbitCode orbit_code(const Word& w) { return OrbitCode::canonical(w); }

inline constexpr int kDefaultEnumerationCap = 26;

class EnumerationCapError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// All codes of period <= max_period, each once, ordered by period and then by
// ascending unimodal order of code^inf within one period.
std::vector<OrbitCode> enumerate_codes(int max_period, int cap = kDefaultEnumerationCap);

// The enumeration order above, as a comparator.
bool canonical_less(const OrbitCode& a, const OrbitCode& b);

void canonical_sort_unique(std::vector<OrbitCode>& codes);

}  // namespace hforce
