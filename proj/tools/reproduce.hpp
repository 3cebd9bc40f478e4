#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "output.hpp"

namespace ghq::cli {

struct ReproduceOptions {
    int n = 50;                    // quadrature size for the fixed-n tables
    int reps = 20;                 // timing repetitions (table2) or Monte Carlo sets (table4)
    std::uint64_t count = 1'000'000;  // draws per Monte Carlo set
    std::uint64_t seed = 1;
    double bench_tol = 2e-3;       // tolerance of the timed oracle
};

const std::vector<std::string>& reproduce_targets();

// One of fig1, fig2, fig3, table1, table2, table3, table4.
Document reproduce(const std::string& target, const ReproduceOptions& options);

// Timing of 99 percentile CDF evaluations, quadrature against the oracle.
Document bench(const std::vector<std::string>& sets, int n, int reps, double oracle_tol);

}  // namespace ghq::cli
