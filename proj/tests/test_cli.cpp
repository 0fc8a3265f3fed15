#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunOutcome {
    int exit_code = -1;
    std::string output;
};

RunOutcome run_cli(const std::string& args) {
    const std::string command = std::string(HELIUMQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunOutcome out;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

json parse_doc(const RunOutcome& run) {
    REQUIRE(run.exit_code == 0);
    return json::parse(run.output);
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spectro predict reproduces the Table-1 empty column") {
    const json doc = parse_doc(run_cli(
        "spectro predict --ej 13.887GHz --ec 0.2710GHz --g01 0.1235GHz --omega-c 6.9348GHz"));
    CHECK(doc["tool"] == "heliumq");
    CHECK(doc["version"].is_string());
    CHECK(doc["command"] == "spectro predict");
    CHECK(doc["config"]["ej_over_h_ghz"].get<double>() == doctest::Approx(13.887));
    CHECK(doc["result"]["omega01_ghz"].get<double>() ==
          doctest::Approx(5.1914).epsilon(0.0025));
    CHECK(doc["result"]["omega12_ghz"].get<double>() ==
          doctest::Approx(4.8834).epsilon(0.0025));
    CHECK(doc["result"]["delta_omega_mhz"].get<double>() ==
          doctest::Approx(8.75).epsilon(0.0025));
}

TEST_CASE("spectro fit recovers the Table-1 parameters") {
    const json doc = parse_doc(run_cli(
        "spectro fit --omega-c 6.9348GHz --delta-omega 8.75MHz --omega01 5.1914GHz "
        "--omega12 4.8834GHz"));
    CHECK(doc["result"]["ej_over_h_ghz"].get<double>() == doctest::Approx(13.887).epsilon(0.02));
    CHECK(doc["result"]["ec_over_h_ghz"].get<double>() == doctest::Approx(0.2710).epsilon(0.02));
    CHECK(doc["result"]["g01_over_2pi_ghz"].get<double>() ==
          doctest::Approx(0.1235).epsilon(0.02));
    CHECK(doc["result"]["converged"].get<bool>());
}

TEST_CASE("dielectric epsilon matches the measured pair") {
    const json doc = parse_doc(run_cli("dielectric epsilon --f-empty 6.93480GHz --f-full 6.75395GHz"));
    CHECK(doc["result"]["epsilon"].get<double>() == doctest::Approx(1.0543).epsilon(5e-4));
}

TEST_CASE("dielectric g01-shift with percent suffixes") {
    const json doc = parse_doc(run_cli(
        "dielectric g01-shift --epsilon 1.057 --delta-cq 0.78% --delta-cg 1.65%"));
    CHECK(doc["result"]["delta_g01_percent"].get<double>() ==
          doctest::Approx(-3.056).epsilon(2e-3));
    CHECK(doc["result"]["ec_shift_percent"].get<double>() ==
          doctest::Approx(-0.774).epsilon(2e-3));
}

TEST_CASE("synth then analyze round trip recovers T1 within 3%") {
    const std::string csv = temp_path("heliumq_cli_t1.csv");
    const json synth = parse_doc(run_cli(
        "traces synth --kind t1 --t1 20us --shots 1000 --points 50 --seed 42 --out " + csv));
    CHECK(synth["result"]["n_traces"].get<int>() == 1);

    const json analyzed = parse_doc(run_cli("traces analyze --kind t1 --input " + csv));
    const double t1_us = analyzed["result"]["fits"][0]["t1_us"].get<double>();
    CHECK(t1_us == doctest::Approx(20.0).epsilon(0.03));
    std::remove(csv.c_str());
}

TEST_CASE("decoherence one-liners") {
    const json tphi = parse_doc(run_cli("decoherence tphi --t1 20us --t2 15us"));
    CHECK(tphi["result"]["tphi_us"].get<double>() == doctest::Approx(24.0).epsilon(1e-12));

    const json qp = parse_doc(run_cli(
        "decoherence qp --gap 160ueV --omega01 5.1914GHz --x-neq 4e-6"));
    CHECK(qp["result"]["gamma_qp_per_s"].get<double>() ==
          doctest::Approx(1.60337e5).epsilon(1e-3));

    const json purcell = parse_doc(run_cli(
        "decoherence purcell --g01 0.1235GHz --omega-c 6.9348GHz --omega01 5.1914GHz"));
    CHECK(purcell["result"]["purcell_time_us"].get<double>() ==
          doctest::Approx(264.3).epsilon(1e-3));

    const json bath = parse_doc(run_cli(
        "decoherence photon-temp --gamma-phi 1.19e4/s --kappa 120kHz --chi 1.61MHz "
        "--omega-c 6.9348GHz"));
    CHECK(bath["result"]["t_ph_mk"].get<double>() == doctest::Approx(80.0).epsilon(0.015));
}

TEST_CASE("population sweep writes a monotone 39-row table") {
    const std::string csv = temp_path("heliumq_cli_pop.csv");
    const json doc = parse_doc(run_cli(
        "population --omega01 5.1914GHz --omega12 4.8834GHz --t-min 10mK --t-max 200mK "
        "--t-step 5mK --out " + csv));
    CHECK(doc["result"]["n_rows"].get<int>() == 39);

    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "temperature_k,p0,p1,p2,p3");
    int rows = 0;
    double previous_p1 = -1.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto first_comma = line.find(',');
        const auto second_comma = line.find(',', first_comma + 1);
        const auto third_comma = line.find(',', second_comma + 1);
        const double p1 = std::stod(line.substr(second_comma + 1, third_comma - second_comma - 1));
        CHECK(p1 > previous_p1);
        previous_p1 = p1;
    }
    CHECK(rows == 39);
    std::remove(csv.c_str());
}

TEST_CASE("traces stats composes Tphi from pairs") {
    const std::string csv = temp_path("heliumq_cli_pairs.csv");
    {
        std::ofstream out(csv, std::ios::binary);
        out << "index,t1_s,t2_s\n";
        out << "0,2e-05,1.5e-05\n1,2.1e-05,1.4e-05\n2,1.9e-05,1.6e-05\n3,2e-05,1.5e-05\n";
    }
    const json doc = parse_doc(run_cli("traces stats --input " + csv));
    CHECK(doc["result"]["n"].get<int>() == 4);
    CHECK(doc["result"]["mean_t1_us"].get<double>() == doctest::Approx(20.0).epsilon(0.03));
    CHECK(doc["result"]["rho_defined"].get<bool>());
    std::remove(csv.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("spectro predict --no-such-flag 1").exit_code == 2);
    CHECK(run_cli("spectro predict --ej 13.887 --ec 0.2710GHz --g01 0.1235GHz "
                  "--omega-c 6.9348GHz").exit_code == 2);  // missing unit
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("traces synth --kind bogus --out /tmp/x.csv").exit_code == 2);
}

TEST_CASE("domain errors exit 1") {
    CHECK(run_cli("traces analyze --kind t1 --input /nonexistent/file.csv").exit_code == 1);
    CHECK(run_cli("decoherence tphi --t1 10us --t2 25us").exit_code == 1);  // T2 > 2 T1

    const std::string csv = temp_path("heliumq_cli_badrow.csv");
    {
        std::ofstream out(csv, std::ios::binary);
        out << "trace_id,time_s,p_excited,n_shots\n";
        for (int i = 0; i < 10; ++i) {
            out << "t," << i << "e-6," << (i == 6 ? "1.2" : "0.5") << ",1000\n";
        }
    }
    CHECK(run_cli("traces analyze --kind t1 --input " + csv).exit_code == 1);
    std::remove(csv.c_str());
}

TEST_CASE("identical runs emit byte-identical documents") {
    const std::string args =
        "spectro predict --ej 13.887GHz --ec 0.2710GHz --g01 0.1235GHz --omega-c 6.9348GHz";
    const RunOutcome a = run_cli(args);
    const RunOutcome b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("help and version succeed") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("spectro --help").exit_code == 0);
}

}  // TEST_SUITE
