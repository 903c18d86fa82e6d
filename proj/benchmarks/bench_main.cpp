// Wall-clock comparison of the serial reference harness against the
// OpenMP-sharded one, over the theorem suite and a counterexample search.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "fcs/parallel.hpp"
#include "fcs/search.hpp"
#include "fcs/suite.hpp"

using namespace fcs;
namespace chrono = std::chrono;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = chrono::steady_clock::now();
    fn();
    return chrono::duration<double, std::milli>(chrono::steady_clock::now() - start).count();
}

void row(const std::string& label, double serial_ms, double parallel_ms) {
    std::cout << std::left << std::setw(34) << label << std::right << std::setw(10) << std::fixed
              << std::setprecision(1) << serial_ms << " ms" << std::setw(10) << parallel_ms
              << " ms" << std::setw(9) << std::setprecision(2) << (serial_ms / parallel_ms)
              << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    int samples = 300;
    if (argc > 1) samples = std::stoi(argv[1]);

    std::cout << "threads available: " << effective_threads(ExecPolicy{}) << "\n";
    std::cout << std::left << std::setw(34) << "workload" << std::right << std::setw(13)
              << "serial" << std::setw(13) << "parallel" << std::setw(10) << "speedup\n";

    SuiteConfig cfg;
    cfg.samples = samples;
    cfg.seed = 7;

    std::string serial_json, parallel_json;
    cfg.policy = ExecPolicy::serial();
    const double suite_serial = time_ms([&] {
        serial_json = suite_report_to_json(run_theorem_suite(cfg)).dump();
    });
    cfg.policy = ExecPolicy{};
    const double suite_parallel = time_ms([&] {
        parallel_json = suite_report_to_json(run_theorem_suite(cfg)).dump();
    });
    row("theorem suite (" + std::to_string(samples) + " samples)", suite_serial, suite_parallel);

    const SearchBounds bounds{3, 2, false};
    double search_serial = 0, search_parallel = 0;
    for (const std::string prop : {"t1_implies_t2", "t2_implies_urysohn"}) {
        search_serial += time_ms([&] {
            search_counterexample(prop, bounds, ExecPolicy::serial());
        });
        search_parallel += time_ms([&] {
            search_counterexample(prop, bounds, ExecPolicy{});
        });
    }
    row("counterexample search (n<=3,d<=2)", search_serial, search_parallel);

    if (serial_json != parallel_json) {
        std::cerr << "serial and parallel reports differ!\n";
        return 1;
    }
    std::cout << "serial and parallel suite reports are identical\n";
    return 0;
}
