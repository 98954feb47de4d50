#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphconf/builtin_graphs.hpp"
#include "graphconf/cup_product.hpp"
#include "graphconf/discrete_config.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/intersection_form.hpp"
#include "graphconf/planar.hpp"
#include "graphconf/relative_complex.hpp"

namespace graphconf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunOptions {
    std::string command;         // info euler homology nform iform planar cup check
    std::string basis = "tree";  // tree | faces
    std::string digest;          // recorded verbatim in the report
    bool timestamp = false;      // opt-in wall-clock field (breaks byte determinism)
};

struct EulerSection {
    std::size_t cells0 = 0, cells1 = 0, cells2 = 0;
    long long by_cells = 0;
    long long by_formula = 0;
};

struct RelativeSection {
    std::size_t cells2 = 0;
    std::size_t h2_rank = 0;
    long long formula = 0;
    bool formula_applies = false;
};

struct IntersectionSection {
    std::string basis_kind;
    std::size_t basis_size = 0;
    std::size_t rank = 0;
    // Basis pairs whose intersection chain vanishes identically; such
    // cycles admit disjoint realizations. Observational, not asserted.
    std::vector<std::pair<std::size_t, std::size_t>> zero_tensor_pairs;
    ConfigHomologyReport homology;
};

struct PlanarSection {
    std::size_t faces = 0;
    std::vector<std::pair<std::size_t, std::size_t>> disjoint;
    EmbeddingRegularity regularity;
    bool formulas_apply = false;
    long long formula_b1 = 0;
    long long formula_b2 = 0;
    bool torus_basis_ok = false;
    std::size_t generator_rank = 0;
    std::size_t generator_count = 0;
};

struct CupSection {
    ProductTable table;
    bool verified_on_tori = false;
};

struct RunReport {
    int schema = 1;
    std::string command;
    std::string input_digest;
    std::string timestamp;  // empty unless requested
    GraphClassification classification;
    std::optional<EulerSection> euler;
    std::optional<HomologySummary> homology;
    std::optional<RelativeSection> relative;
    std::optional<IntersectionSection> intersection;
    std::optional<PlanarSection> planar;
    std::optional<CupSection> cup;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Run one CLI pipeline over a parsed input. `check` runs everything that
/// applies to the graph and records every cross-check; the other commands
/// run their own slice plus the checks they imply.
RunReport run_command(const GraphInput& input, const RunOptions& options);

std::string report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);

}  // namespace graphconf
