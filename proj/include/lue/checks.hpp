#pragma once
// Named verification suites shared by the CLI (`check <suite>`) and the
// acceptance harness. Each suite returns a report of independent items; the
// defaults below are the published acceptance depths (everything here runs in
// seconds, the expensive sweeps live in the oracle tests).

#include "lue/fixtures.hpp"

#include <string>
#include <vector>

namespace lue {

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail; // coverage note when ok, first counterexamples when not
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
};

struct CheckOptions {
    int recursion_lmax = 12;   // triple-route and A/B-bridge identities
    int projector_lmax = 10;   // R^2 = R, tr R = 1
    int parity_lmax = 10;      // odd N-powers of the scaled D/E/F
    int virasoro_nmax = 3;
    int virasoro_degree = 4;
    int involution_sum = 8;    // positive keys with sum k <= this
    int symmetry_weight = 5;   // strict tables for |mu| <= this
    int symmetry_gmax = 2;
    int integrality_sum = 6;   // signed keys with sum |k| <= this
    int integrality_jmax = 3;  // rows N^0 .. N^{-2 jmax}
    int positivity_weight = 4; // weak tables for |mu| <= this, at c = 2
    int positivity_gmax = 2;
    int hodge_weight = 5;      // evenness of the eps-series
    int hodge_routes_weight = 4;
    int hodge_gmax = 2;
    int hodge_genus0_mumax = 8;
};

CheckReport suite_recursions(const CheckOptions& opt = {});
CheckReport suite_projector(const CheckOptions& opt = {});
CheckReport suite_symmetry(const CheckOptions& opt = {});
CheckReport suite_virasoro(const CheckOptions& opt = {});
CheckReport suite_parity(const CheckOptions& opt = {});
CheckReport suite_integrality(const CheckOptions& opt = {});
CheckReport suite_fixtures(const CheckOptions& opt = {});
CheckReport suite_factorization(const CheckOptions& opt = {});
CheckReport suite_hodge(const CheckOptions& opt = {});

// dispatch by CLI name; "all" runs every suite in the order above.
// Throws std::invalid_argument for an unknown name.
std::vector<CheckReport> run_checks(const std::string& name, const CheckOptions& opt = {});

// partitions of 1..wmax (parts descending), in weight-then-lex order
std::vector<std::vector<int>> partitions_up_to(int wmax);
// all distinct signed keys (canonical order) with sum of |k_i| <= wmax
std::vector<std::vector<int>> signed_keys_up_to(int wmax);

} // namespace lue
