#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dwindex {

struct ReproduceOptions {
    std::uint64_t seed = 42;
    // Apex height of the pyramid-prism space; anything but 2 is a tampered
    // gallery and must make the pyramid-prism row fail.
    double pyramid_apex_height = 2.0;
};

struct ReproduceRow {
    std::string key;
    std::string check;
    bool pass = false;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;

    bool all_pass() const;
};

// Runs the closed-form index table, the lower-bound table and the property
// suites on the standard gallery. Deterministic for fixed options.
ReproduceReport reproduce(const ReproduceOptions& options = {});

// Stable JSON rendering (no timings), so repeated runs are byte-identical.
std::string report_to_json(const ReproduceReport& report);

} // namespace dwindex
