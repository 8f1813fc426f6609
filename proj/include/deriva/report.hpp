#pragma once

#include "deriva/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deriva {

enum class OutputFormat { json, csv, text };
std::optional<OutputFormat> format_from_name(const std::string &name);

// "Q" or "GF(p)"
std::string field_label(unsigned long characteristic);

struct DimensionReport {
    std::string group_label;
    unsigned long characteristic = 0;
    int order = 0;
    int classes = 0;
    int der = 0;
    int inner = 0;
    int outer = 0;
};
DimensionReport compute_dimensions(const FiniteGroup &g, const Field &f, std::string label);
std::string dimensions_to_string(const DimensionReport &rep, OutputFormat format);

std::string classes_to_string(const FiniteGroup &g, OutputFormat format);

// resolved variants included; text format re-renders the catalogued basis in
// a^i b^j notation
std::string report_to_string(const VerificationReport &rep, OutputFormat format);

struct SweepGrid {
    std::vector<int> dihedral_n;
    std::vector<int> dicyclic_n;
    std::vector<int> semidihedral_n;
    std::vector<unsigned long> characteristics;
};

SweepGrid default_grid();

// parse a grid override document: {"dihedral": [..], "dicyclic": [..],
// "semidihedral": [..], "characteristics": [..]}; absent family keys mean no
// cells, an absent characteristics key keeps the default list
SweepGrid grid_from_json(const std::string &text);

// the DERIVA_GRID environment variable, when set, overrides the default grid
SweepGrid grid_from_env();

// deterministic cell order: family, then n, then characteristic
std::vector<FamilySpec> grid_cells(const SweepGrid &grid);

struct SweepOutcome {
    std::vector<VerificationReport> reports;
    int pass_count = 0;
    int fail_count = 0;
    bool all_pass() const { return fail_count == 0; }
    // "<family> n=<n> char=<c>: <check>" for the first failing cell
    std::string first_divergence;
};

SweepOutcome run_sweep(const std::vector<FamilySpec> &cells, int parallelism);
std::string sweep_to_string(const SweepOutcome &outcome, OutputFormat format);

}  // namespace deriva
