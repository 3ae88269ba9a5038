#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hforce {

// Outcome of one verification run: how much was checked plus failure
// witnesses. Notes carry observations that are recorded but not asserted.
struct Report {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    void merge(const Report& sub) {
        checked += sub.checked;
        skipped += sub.skipped;
        failures.insert(failures.end(), sub.failures.begin(), sub.failures.end());
        notes.insert(notes.end(), sub.notes.begin(), sub.notes.end());
    }
};

}  // namespace hforce
