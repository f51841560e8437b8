#pragma once
// Golden tables shipped under data/, transcribed from the appendix of the
// accompanying article: exact correlators, large-N expansion rows, and the
// strict/weak weighted Hurwitz tables. A couple of printed entries carry
// transcription errata (documented in the data file headers, re-derived by
// the eigenvalue oracle); loaders keep the verbatim values and expose the
// corrected ones next to them so tests can assert both stories.

#include "lue/correlator_value.hpp"
#include "lue/oracles.hpp"
#include "lue/topo.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lue {

struct CorrelatorFixture {
    std::vector<int> key;
    CorrelatorValue printed;            // verbatim table entry
    std::optional<long> erratum_const;  // printed = correct + const (when set)

    bool has_erratum() const { return erratum_const.has_value(); }
    CorrelatorValue corrected() const;  // printed minus the spurious constant
};

struct ExpansionFixture {
    std::vector<int> key;
    int floor = 0;
    bool exact = false;
    bool spurious = false;              // printed rows belong to no correlator
    std::map<int, WLaur> rows;          // N-power -> verbatim w-Laurent row
    std::map<int, WLaur> errata;        // printed row = correct row + erratum
    std::map<int, WLaur> corrected_rows; // full replacement when spurious

    bool has_errata() const { return spurious || !errata.empty(); }
    std::map<int, WLaur> corrected() const;
};

struct HurwitzFixture {
    MonotoneFlavor flavor = MonotoneFlavor::Strict;
    std::vector<int> mu;
    int g = 0;
    int s = 0;
    Int value;
};

// resolution order: $LUE_DATA_DIR, the configure-time source dir, ./data
std::string data_dir();

std::vector<CorrelatorFixture> load_correlator_fixtures();
std::vector<ExpansionFixture> load_expansion_fixtures();
std::vector<HurwitzFixture> load_hurwitz_fixtures();

// distinct mu lists appearing in the Hurwitz fixture file, per flavor,
// in file order
std::vector<std::vector<int>> hurwitz_fixture_mus(const std::vector<HurwitzFixture>& all,
                                                  MonotoneFlavor flavor);

} // namespace lue
