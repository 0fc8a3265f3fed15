#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "heliumq/csv_io.hpp"
#include "heliumq/trace_synth.hpp"

using namespace heliumq;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_SUITE("csv-io") {

TEST_CASE("trace round trip is loss-free") {
    T1TraceSpec spec;
    spec.seed = 21;
    const TraceRecord original = gen_t1_trace(spec);
    const std::string path = temp_path("heliumq_traces_rt.csv");
    write_traces_csv(path, std::vector<TraceRecord>{original});

    const auto loaded = load_traces_csv(path);
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0].trace_id == original.trace_id);
    CHECK(loaded[0].n_shots == original.n_shots);
    CHECK(loaded[0].times == original.times);        // shortest round-trip formatting
    CHECK(loaded[0].p_excited == original.p_excited);
    std::remove(path.c_str());
}

TEST_CASE("multiple traces group by id") {
    T1TraceSpec spec;
    spec.seed = 22;
    spec.trace_id = "a";
    TraceRecord first = gen_t1_trace(spec);
    spec.seed = 23;
    spec.trace_id = "b";
    TraceRecord second = gen_t1_trace(spec);
    const std::string path = temp_path("heliumq_traces_multi.csv");
    write_traces_csv(path, std::vector<TraceRecord>{first, second});
    const auto loaded = load_traces_csv(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].trace_id == "a");
    CHECK(loaded[1].trace_id == "b");
    std::remove(path.c_str());
}

TEST_CASE("out-of-range probability names its row") {
    const std::string path = temp_path("heliumq_bad_p.csv");
    std::string text = "trace_id,time_s,p_excited,n_shots\n";
    for (int i = 0; i < 10; ++i) {
        text += "t,";
        text += std::to_string(i) + "e-6,";
        text += (i == 6 ? std::string("1.2") : std::string("0.5"));
        text += ",1000\n";
    }
    write_text(path, text);
    CHECK_THROWS_WITH_AS(load_traces_csv(path), doctest::Contains("row 7"),
                         std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("empty and header-only files are explicit errors") {
    const std::string path = temp_path("heliumq_empty.csv");
    write_text(path, "");
    CHECK_THROWS_WITH_AS(load_traces_csv(path), doctest::Contains("empty"),
                         std::runtime_error);
    write_text(path, "trace_id,time_s,p_excited,n_shots\n");
    CHECK_THROWS_WITH_AS(load_traces_csv(path), doctest::Contains("no data rows"),
                         std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("wrong header is rejected") {
    const std::string path = temp_path("heliumq_bad_header.csv");
    write_text(path, "id,t,p,n\nx,0,0.5,100\n");
    CHECK_THROWS_WITH_AS(load_traces_csv(path), doctest::Contains("header"),
                         std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("non-monotone times name their row") {
    const std::string path = temp_path("heliumq_bad_times.csv");
    write_text(path,
               "trace_id,time_s,p_excited,n_shots\n"
               "t,0,0.9,100\nt,1e-6,0.8,100\nt,1e-6,0.7,100\n");
    CHECK_THROWS_WITH_AS(load_traces_csv(path), doctest::Contains("row 3"),
                         std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("frequency series round trip") {
    FrequencySeriesSpec spec;
    spec.seed = 24;
    const FrequencySeries series = gen_frequency_series(spec);
    const std::string path = temp_path("heliumq_freq_rt.csv");
    write_frequency_series_csv(path, series.omega01_hz);
    CHECK(load_frequency_series_csv(path) == series.omega01_hz);
    std::remove(path.c_str());
}

TEST_CASE("temperature table round trip") {
    T1VsTemperatureSpec spec;
    spec.gap_j = 160e-6 * constants.e_charge;
    spec.x_neq = 5.25e-6;
    spec.omega01 = linear_to_angular(5.1914e9);
    spec.seed = 25;
    const auto points = gen_t1_vs_temperature(spec);
    const std::string path = temp_path("heliumq_t1t_rt.csv");
    write_t1_vs_temperature_csv(path, points);
    const auto loaded = load_t1_vs_temperature_csv(path);
    REQUIRE(loaded.size() == points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(loaded[i].temperature_k == points[i].temperature_k);
        CHECK(loaded[i].t1_s == points[i].t1_s);
        CHECK(loaded[i].sigma_t1_s == points[i].sigma_t1_s);
    }
    std::remove(path.c_str());
}

TEST_CASE("coherence pairs round trip") {
    const std::vector<CoherencePair> pairs{{20e-6, 15e-6}, {21e-6, 14e-6}, {19e-6, 16e-6}};
    const std::string path = temp_path("heliumq_pairs_rt.csv");
    write_coherence_pairs_csv(path, pairs);
    const auto loaded = load_coherence_pairs_csv(path);
    REQUIRE(loaded.size() == 3);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(loaded[i].t1_s == pairs[i].t1_s);
        CHECK(loaded[i].t2_s == pairs[i].t2_s);
    }
    std::remove(path.c_str());
}

TEST_CASE("missing file is a clear error") {
    CHECK_THROWS_WITH_AS(load_traces_csv("/nonexistent/heliumq.csv"),
                         doctest::Contains("cannot open"), std::runtime_error);
}

}  // TEST_SUITE
