#pragma once

// Invariant suites shared by the CLI `verify` command and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "qkig/geometry_oracle.hpp"

namespace qkig {

struct SuiteOptions {
    int n_max = 8;
    int trials = 500;  // geometry suite only
    std::uint64_t seed = 7;
};

[[nodiscard]] const std::vector<std::string>& suite_names();  // without "all"

// One report per (suite, n). Throws std::invalid_argument on an unknown suite name.
[[nodiscard]] std::vector<Report> run_suite(const std::string& name, const SuiteOptions& opt);

[[nodiscard]] Report check_chevalley(int n);
[[nodiscard]] Report check_seidel(int n);
[[nodiscard]] Report check_signs(int n);
[[nodiscard]] Report check_interval(int n);
[[nodiscard]] Report check_brion(int n);
[[nodiscard]] Report check_bruhat(int n);
[[nodiscard]] Report check_richardson_witness(int n, std::uint64_t seed);
// All three membership checks at n; both outcomes are required where dim(Vx+Vy+Vz) can exceed
// the bound, i.e. for n >= 3 and d in {2,3}.
[[nodiscard]] Report check_geometry(int n, int trials, std::uint64_t seed);

// Every (u,v) admissible for C1 or C2.
[[nodiscard]] std::vector<std::pair<Pair, Pair>> special_family_pairs(int n);

}  // namespace qkig
