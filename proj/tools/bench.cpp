// Compares the serial reference sweep against the OpenMP sweep and checks
// that both produce the identical report.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "koszul/report.hpp"
#include "koszul/sweep.hpp"

namespace {

double run_ms(koszul::SweepResult (*fn)(const koszul::SweepConfig&),
              const koszul::SweepConfig& cfg, koszul::SweepResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn(cfg);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

koszul::Json strip(const koszul::SweepResult& res) {
    koszul::Json j = koszul::Json::array();
    for (const auto& v : res.verdicts) j.push_back(koszul::verdict_json(v));
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 6;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 4;

    koszul::SweepConfig cfg;
    cfg.n_max = n_max;
    cfg.verify.oracle_n_limit = 6;

    koszul::SweepResult serial, parallel;
    cfg.jobs = 1;
    double t_serial = run_ms(koszul::run_sweep_serial, cfg, serial);
    cfg.jobs = jobs;
    double t_parallel = run_ms(koszul::run_sweep_parallel, cfg, parallel);

    if (strip(serial) != strip(parallel)) {
        std::cerr << "FAIL: serial and parallel sweeps disagree\n";
        return 1;
    }

    std::cout << "sweep n_max=" << n_max << " patterns=" << serial.patterns << "\n";
    std::cout << "serial:   " << t_serial << " ms\n";
    std::cout << "parallel: " << t_parallel << " ms (" << jobs << " jobs, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x)\n";
    std::cout << "results identical: yes\n";
    return serial.all_passed() ? 0 : 2;
}
