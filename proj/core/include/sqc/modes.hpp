#pragma once

#include <string>
#include <vector>

namespace sqc {

enum class Pol { Y, Z };

char pol_char(Pol p);
Pol pol_from_char(char c);

// Cavity mode on the shared integer frequency lattice. A mode with index k
// sits at omega_0 + k * (FSR/2); a pump with index p sits at
// 2*omega_0 + p * (FSR/2), so energy conservation for a pair interaction is
// exact integer arithmetic: p = k_a + k_b. Signal combs in the standard
// configurations occupy even lattice points (one FSR = 2 lattice units).
struct ModeLabel {
    int freq_index = 0;
    Pol pol = Pol::Y;

    friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

bool operator<(const ModeLabel& a, const ModeLabel& b);
std::string to_string(const ModeLabel& m);

// Classical pump field. amplitude is the undepleted drive strength beta >= 0.
struct PumpField {
    int freq_index = 0;
    Pol pol = Pol::Y;
    double amplitude = 1.0;

    friend bool operator==(const PumpField&, const PumpField&) = default;
};

bool same_field(const PumpField& a, const PumpField& b);  // ignores amplitude
bool operator<(const PumpField& a, const PumpField& b);
std::string to_string(const PumpField& p);

// Nonlinear tensor element, named pump-first: the first letter is the pump
// polarization, the remaining two are the down-converted pair (unordered).
enum class ChiLabel { yzy, zzz, yyy, yzz, zyy };

std::string to_string(ChiLabel label);
Pol chi_pump_pol(ChiLabel label);
// The two signal polarizations, in label order.
std::pair<Pol, Pol> chi_signal_pols(ChiLabel label);

struct ChiElement {
    ChiLabel label = ChiLabel::zzz;
    double value = 1.0;         // nonlinear coefficient, arbitrary fixed units
    bool phase_matched = true;  // only phase-matched elements generate terms

    friend bool operator==(const ChiElement&, const ChiElement&) = default;
};

// One pair interaction a_A^dag a_B^dag driven by a pump through a tensor
// element. mode_a <= mode_b canonically; mode_a == mode_b is a degenerate
// (self-loop) term. strength is the signed coupling rate contributed to the
// coupling matrix entry for (A, B); for a degenerate term it lands on the
// diagonal with the same convention (see CouplingMatrix).
struct InteractionTerm {
    ModeLabel mode_a;
    ModeLabel mode_b;
    PumpField pump;
    ChiElement chi;
    double strength = 0.0;

    bool degenerate() const { return mode_a == mode_b; }
};

std::string to_string(const InteractionTerm& t);

// Interaction graph: vertices are modes, edges are pair interactions
// (self-loops allowed for degenerate terms).
struct CouplingGraph {
    std::vector<ModeLabel> vertices;
    std::vector<InteractionTerm> edges;

    int vertex_index(const ModeLabel& m) const;  // -1 when absent
};

// Edge-list serialization, one line per term:
//   pumpIndex pol | modeA | modeB | sign | kappa
std::string graph_edge_list(const CouplingGraph& graph);

}  // namespace sqc
