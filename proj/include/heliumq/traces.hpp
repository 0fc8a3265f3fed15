#pragma once

#include <string>
#include <vector>

namespace heliumq {

// One time-domain measurement record: excited-state probability vs delay.
struct TraceRecord {
    std::string trace_id;
    std::vector<double> times;      // s, strictly increasing
    std::vector<double> p_excited;  // [0, 1]
    int n_shots = 1;

    void validate() const;
};

}  // namespace heliumq
