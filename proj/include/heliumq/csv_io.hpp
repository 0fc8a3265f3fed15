#pragma once

#include <span>
#include <string>
#include <vector>

#include "heliumq/estimation.hpp"
#include "heliumq/traces.hpp"

namespace heliumq {

// CSV schemas are bit-exact contracts: UTF-8, LF line endings, '.' decimal
// separator, shortest round-trip number formatting.
//
//   traces            trace_id,time_s,p_excited,n_shots
//   frequency series  index,omega01_hz
//   T1 vs temperature temperature_k,t1_s,t1_err_s
//   coherence pairs   index,t1_s,t2_s

struct CoherencePair {
    double t1_s = 0.0;
    double t2_s = 0.0;
};

// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double value);

std::vector<TraceRecord> load_traces_csv(const std::string& path);
void write_traces_csv(const std::string& path, std::span<const TraceRecord> records);

std::vector<double> load_frequency_series_csv(const std::string& path);
void write_frequency_series_csv(const std::string& path, std::span<const double> omega01_hz);

std::vector<T1VsTemperaturePoint> load_t1_vs_temperature_csv(const std::string& path);
void write_t1_vs_temperature_csv(const std::string& path,
                                 std::span<const T1VsTemperaturePoint> points);

std::vector<CoherencePair> load_coherence_pairs_csv(const std::string& path);
void write_coherence_pairs_csv(const std::string& path, std::span<const CoherencePair> pairs);

}  // namespace heliumq
