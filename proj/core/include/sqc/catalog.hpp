#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "sqc/coupling.hpp"
#include "sqc/modes.hpp"

namespace sqc {

// All pair interactions allowed by energy conservation
// (pump index = sum of mode indices) and polarization matching against the
// phase-matched tensor elements. Unordered pairs are emitted once, in a
// deterministic order; degenerate terms appear as self-loops. Term strengths
// are pump amplitude times tensor value.
// Throws std::invalid_argument on duplicate chi labels, duplicate pump
// fields, or duplicate mode labels.
CouplingGraph enumerate_terms(const std::vector<ModeLabel>& modes,
                              const std::vector<PumpField>& pumps,
                              const std::vector<ChiElement>& chis);

// Connected components over the edge set, as sorted vertex-index lists,
// ordered by smallest member. Self-loops do not connect anything.
std::vector<std::vector<int>> connected_components(const CouplingGraph& graph);

// Coupling matrix over graph.vertices: strengths of all terms on a pair are
// summed into the symmetric entry (diagonal for self-loops).
CouplingMatrix coupling_from_graph(const CouplingGraph& graph);

// Pump amplitudes beta = kappa / |chi| making every term's |beta * chi|
// equal kappa, one entry per distinct pump field, sorted. Terms sharing a
// pump must carry tensor values of identical magnitude; otherwise
// UnbalanceableError names the pump.
std::vector<PumpField> balance_pumps(const std::vector<InteractionTerm>& terms,
                                     double kappa);

struct ExperimentalBuild {
    CouplingGraph graph;
    std::vector<PumpField> pumps;   // balanced amplitudes
    CouplingMatrix coupling;        // from the full graph
    // Terms outside the intended complete-graph edge set (self-loops or
    // extra pairs). Empty for the default tensor sets.
    std::vector<InteractionTerm> contaminants;
    bool contaminated() const { return !contaminants.empty(); }
};

// Three-mode build: modes {y:0, z:0, z:2}, pumps at lattice indices
// {y:0, y:2, z:2}, tensor set {yzy, zzz}. Produces the complete graph on
// three modes with uniform strength kappa. Pass a custom tensor set to probe
// contamination (e.g. adding a phase-matched yyy grows a self-loop on y:0).
ExperimentalBuild build_h3_experimental(
    double kappa, const std::optional<std::vector<ChiElement>>& chi_override = {});

// Four-mode build: modes {y:0, z:2, y:4, z:6}, five pumps
// {y:2, y:4, y:6, z:8, y:10}, tensor set {yzy, yyy, zzz}; the y:6 pump
// drives two terms. Produces the complete graph on four modes with uniform
// strength kappa.
ExperimentalBuild build_h4_experimental(
    double kappa, const std::optional<std::vector<ChiElement>>& chi_override = {});

struct RealizabilityConflict {
    int pump_freq_index = 0;
    // (i, j, desired value) entries, i <= j, sharing this pump frequency
    // with mixed signs.
    std::vector<std::tuple<int, int, double>> entries;
};

struct RealizabilityVerdict {
    bool realizable = true;
    std::vector<RealizabilityConflict> conflicts;
};

// Whether `desired` can be driven term-by-term with independent pumps:
// nonzero entries (i <= j, diagonal included) are grouped by pump frequency
// k_i + k_j; every entry in one group rides the same pump field, whose phase
// is frozen by the strongest term, so a group mixing signs is unrealizable.
// Grouping is by frequency alone (polarization-agnostic), which is exact for
// single-polarization combs and conservative otherwise.
RealizabilityVerdict realizability_check(const CouplingMatrix& desired,
                                         const std::vector<ModeLabel>& modes);

struct CandidatePump {
    PumpField pump;
    std::vector<std::pair<int, int>> covered_pairs;  // desired edges it drives
    std::vector<int> self_loops;                     // degenerate terms it forces
    bool clean() const { return self_loops.empty(); }
};

struct ExploreReport {
    std::vector<CandidatePump> candidates;
    // Pairs no clean pump can drive with the given tensor set.
    std::vector<std::pair<int, int>> missing_with_clean_pumps;
    // Pairs no candidate pump drives at all.
    std::vector<std::pair<int, int>> uncoverable;
    // Greedy cover: clean pumps first, then dirty pumps until covered.
    std::vector<PumpField> selected_pumps;
    std::vector<InteractionTerm> induced_self_loops;
    bool full_coverage = false;
    // Full coverage with no induced degenerate terms. Degenerate terms ride
    // a pump that also drives wanted edges, so their sign cannot be chosen
    // independently; they are reported as findings, not as a proof of
    // impossibility.
    bool clean = false;
};

struct ExploreConfig {
    std::vector<ModeLabel> modes;    // at most 12
    std::vector<ChiElement> chis;
    int max_candidate_pumps = 12;
};

// Searches for a pump set driving the complete graph over the given modes.
// Candidate pumps are every (frequency, polarization) that drives at least
// one desired pair through a phase-matched tensor element. Throws
// std::range_error when the mode list or the candidate pump set exceeds the
// configured caps.
ExploreReport explore_pump_cover(const ExploreConfig& config);

}  // namespace sqc
