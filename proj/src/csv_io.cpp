#include "heliumq/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace heliumq {

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

double parse_field_double(const std::string& field, const std::string& path, std::size_t row,
                          const char* column) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::runtime_error(path + " row " + std::to_string(row) + ": cannot parse " +
                                 column + " value '" + field + "'");
    }
    return value;
}

long parse_field_long(const std::string& field, const std::string& path, std::size_t row,
                      const char* column) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::runtime_error(path + " row " + std::to_string(row) + ": cannot parse " +
                                 column + " value '" + field + "'");
    }
    return value;
}

// Reads all data rows, enforcing the exact header and column count. Row
// numbers in errors count data rows from 1.
std::vector<std::vector<std::string>> read_rows(const std::string& path, const std::string& header,
                                                std::size_t n_columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(path + ": empty file, expected header '" + header + "'");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header) {
        throw std::runtime_error(path + ": malformed header '" + line + "', expected '" + header +
                                 "'");
    }
    std::vector<std::vector<std::string>> rows;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        auto fields = split_fields(line);
        if (fields.size() != n_columns) {
            throw std::runtime_error(path + " row " + std::to_string(row) + ": expected " +
                                     std::to_string(n_columns) + " columns, got " +
                                     std::to_string(fields.size()));
        }
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) {
        throw std::runtime_error(path + ": no data rows");
    }
    return rows;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

}  // namespace

std::vector<TraceRecord> load_traces_csv(const std::string& path) {
    const auto rows = read_rows(path, "trace_id,time_s,p_excited,n_shots", 4);
    std::vector<TraceRecord> records;
    std::size_t row = 0;
    for (const auto& fields : rows) {
        ++row;
        const std::string& id = fields[0];
        const double time = parse_field_double(fields[1], path, row, "time_s");
        const double p = parse_field_double(fields[2], path, row, "p_excited");
        const long shots = parse_field_long(fields[3], path, row, "n_shots");
        if (p < 0.0 || p > 1.0) {
            throw std::runtime_error(path + " row " + std::to_string(row) + ": p_excited " +
                                     fields[2] + " outside [0,1]");
        }
        if (shots < 1) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": n_shots must be >= 1");
        }
        if (records.empty() || records.back().trace_id != id) {
            records.push_back(TraceRecord{id, {}, {}, static_cast<int>(shots)});
        }
        TraceRecord& rec = records.back();
        if (rec.n_shots != static_cast<int>(shots)) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": n_shots changes within trace '" + id + "'");
        }
        if (!rec.times.empty() && !(time > rec.times.back())) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": time_s not strictly increasing within trace '" + id + "'");
        }
        rec.times.push_back(time);
        rec.p_excited.push_back(p);
    }
    for (const auto& rec : records) rec.validate();
    return records;
}

void write_traces_csv(const std::string& path, std::span<const TraceRecord> records) {
    auto out = open_output(path);
    out << "trace_id,time_s,p_excited,n_shots\n";
    for (const auto& rec : records) {
        rec.validate();
        for (std::size_t i = 0; i < rec.times.size(); ++i) {
            out << rec.trace_id << ',' << format_double(rec.times[i]) << ','
                << format_double(rec.p_excited[i]) << ',' << rec.n_shots << '\n';
        }
    }
}

std::vector<double> load_frequency_series_csv(const std::string& path) {
    const auto rows = read_rows(path, "index,omega01_hz", 2);
    std::vector<double> freqs;
    std::size_t row = 0;
    for (const auto& fields : rows) {
        ++row;
        (void)parse_field_long(fields[0], path, row, "index");
        freqs.push_back(parse_field_double(fields[1], path, row, "omega01_hz"));
    }
    return freqs;
}

void write_frequency_series_csv(const std::string& path, std::span<const double> omega01_hz) {
    auto out = open_output(path);
    out << "index,omega01_hz\n";
    for (std::size_t i = 0; i < omega01_hz.size(); ++i) {
        out << i << ',' << format_double(omega01_hz[i]) << '\n';
    }
}

std::vector<T1VsTemperaturePoint> load_t1_vs_temperature_csv(const std::string& path) {
    const auto rows = read_rows(path, "temperature_k,t1_s,t1_err_s", 3);
    std::vector<T1VsTemperaturePoint> points;
    std::size_t row = 0;
    for (const auto& fields : rows) {
        ++row;
        T1VsTemperaturePoint pt;
        pt.temperature_k = parse_field_double(fields[0], path, row, "temperature_k");
        pt.t1_s = parse_field_double(fields[1], path, row, "t1_s");
        pt.sigma_t1_s = parse_field_double(fields[2], path, row, "t1_err_s");
        if (!(pt.temperature_k > 0.0)) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": temperature must be positive");
        }
        if (!(pt.t1_s > 0.0) || !(pt.sigma_t1_s > 0.0)) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": t1_s and t1_err_s must be positive");
        }
        points.push_back(pt);
    }
    return points;
}

void write_t1_vs_temperature_csv(const std::string& path,
                                 std::span<const T1VsTemperaturePoint> points) {
    auto out = open_output(path);
    out << "temperature_k,t1_s,t1_err_s\n";
    for (const auto& pt : points) {
        out << format_double(pt.temperature_k) << ',' << format_double(pt.t1_s) << ','
            << format_double(pt.sigma_t1_s) << '\n';
    }
}

std::vector<CoherencePair> load_coherence_pairs_csv(const std::string& path) {
    const auto rows = read_rows(path, "index,t1_s,t2_s", 3);
    std::vector<CoherencePair> pairs;
    std::size_t row = 0;
    for (const auto& fields : rows) {
        ++row;
        (void)parse_field_long(fields[0], path, row, "index");
        CoherencePair pair;
        pair.t1_s = parse_field_double(fields[1], path, row, "t1_s");
        pair.t2_s = parse_field_double(fields[2], path, row, "t2_s");
        if (!(pair.t1_s > 0.0) || !(pair.t2_s > 0.0)) {
            throw std::runtime_error(path + " row " + std::to_string(row) +
                                     ": coherence times must be positive");
        }
        pairs.push_back(pair);
    }
    return pairs;
}

void write_coherence_pairs_csv(const std::string& path, std::span<const CoherencePair> pairs) {
    auto out = open_output(path);
    out << "index,t1_s,t2_s\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out << i << ',' << format_double(pairs[i].t1_s) << ',' << format_double(pairs[i].t2_s)
            << '\n';
    }
}

}  // namespace heliumq
