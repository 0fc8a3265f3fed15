#include "heliumq/traces.hpp"

#include <stdexcept>
#include <string>

namespace heliumq {

void TraceRecord::validate() const {
    if (times.size() != p_excited.size()) {
        throw std::invalid_argument("trace '" + trace_id + "': times and p_excited lengths differ");
    }
    if (times.empty()) {
        throw std::invalid_argument("trace '" + trace_id + "' is empty");
    }
    if (n_shots < 1) {
        throw std::invalid_argument("trace '" + trace_id + "': n_shots must be >= 1");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw std::invalid_argument("trace '" + trace_id + "': times not strictly increasing at sample " +
                                        std::to_string(i));
        }
        if (p_excited[i] < 0.0 || p_excited[i] > 1.0) {
            throw std::invalid_argument("trace '" + trace_id + "': p_excited " +
                                        std::to_string(p_excited[i]) + " outside [0,1] at sample " +
                                        std::to_string(i));
        }
    }
}

}  // namespace heliumq
