#include "sqc/modes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sqc/format.hpp"

namespace sqc {

char pol_char(Pol p) { return p == Pol::Y ? 'y' : 'z'; }

Pol pol_from_char(char c) {
    if (c == 'y') return Pol::Y;
    if (c == 'z') return Pol::Z;
    throw std::invalid_argument(std::string("unknown polarization '") + c + "'");
}

bool operator<(const ModeLabel& a, const ModeLabel& b) {
    if (a.freq_index != b.freq_index) return a.freq_index < b.freq_index;
    return a.pol < b.pol;
}

std::string to_string(const ModeLabel& m) {
    std::ostringstream os;
    os << pol_char(m.pol) << ':' << m.freq_index;
    return os.str();
}

bool same_field(const PumpField& a, const PumpField& b) {
    return a.freq_index == b.freq_index && a.pol == b.pol;
}

bool operator<(const PumpField& a, const PumpField& b) {
    if (a.freq_index != b.freq_index) return a.freq_index < b.freq_index;
    return a.pol < b.pol;
}

std::string to_string(const PumpField& p) {
    std::ostringstream os;
    os << pol_char(p.pol) << '@' << p.freq_index;
    return os.str();
}

std::string to_string(ChiLabel label) {
    switch (label) {
        case ChiLabel::yzy: return "yzy";
        case ChiLabel::zzz: return "zzz";
        case ChiLabel::yyy: return "yyy";
        case ChiLabel::yzz: return "yzz";
        case ChiLabel::zyy: return "zyy";
    }
    throw std::logic_error("unreachable chi label");
}

Pol chi_pump_pol(ChiLabel label) {
    return pol_from_char(to_string(label)[0]);
}

std::pair<Pol, Pol> chi_signal_pols(ChiLabel label) {
    const std::string s = to_string(label);
    return {pol_from_char(s[1]), pol_from_char(s[2])};
}

std::string to_string(const InteractionTerm& t) {
    std::ostringstream os;
    os << to_string(t.pump) << " [" << to_string(t.chi.label) << "] "
       << to_string(t.mode_a) << " x " << to_string(t.mode_b);
    return os.str();
}

int CouplingGraph::vertex_index(const ModeLabel& m) const {
    const auto it = std::find(vertices.begin(), vertices.end(), m);
    if (it == vertices.end()) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::string graph_edge_list(const CouplingGraph& graph) {
    std::vector<InteractionTerm> sorted = graph.edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const InteractionTerm& a, const InteractionTerm& b) {
                  if (!same_field(a.pump, b.pump)) return a.pump < b.pump;
                  if (!(a.mode_a == b.mode_a)) return a.mode_a < b.mode_a;
                  return a.mode_b < b.mode_b;
              });
    std::ostringstream os;
    for (const InteractionTerm& t : sorted) {
        os << t.pump.freq_index << ' ' << pol_char(t.pump.pol) << " | "
           << to_string(t.mode_a) << " | " << to_string(t.mode_b) << " | "
           << (t.strength < 0 ? '-' : '+') << " | "
           << format_sig(std::abs(t.strength)) << '\n';
    }
    return os.str();
}

}  // namespace sqc
