#include "sqc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sqc/errors.hpp"

namespace sqc {

namespace {

// The tensor element driving a pump of polarization `pump` into the signal
// pair {a, b}, if one exists in the label alphabet. Pump z with a mixed pair
// has no named element.
std::optional<ChiLabel> label_for(Pol pump, Pol a, Pol b) {
    const bool mixed = a != b;
    if (pump == Pol::Y) {
        if (mixed) return ChiLabel::yzy;
        return a == Pol::Y ? ChiLabel::yyy : ChiLabel::yzz;
    }
    if (mixed) return std::nullopt;
    return a == Pol::Z ? ChiLabel::zzz : ChiLabel::zyy;
}

const ChiElement* find_chi(const std::vector<ChiElement>& chis, ChiLabel label) {
    for (const ChiElement& c : chis) {
        if (c.label == label && c.phase_matched) return &c;
    }
    return nullptr;
}

void check_unique_inputs(const std::vector<ModeLabel>& modes,
                         const std::vector<PumpField>& pumps,
                         const std::vector<ChiElement>& chis) {
    for (size_t i = 0; i < modes.size(); ++i) {
        for (size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) {
                throw std::invalid_argument("duplicate mode label " + to_string(modes[i]));
            }
        }
    }
    for (size_t i = 0; i < pumps.size(); ++i) {
        for (size_t j = i + 1; j < pumps.size(); ++j) {
            if (same_field(pumps[i], pumps[j])) {
                throw std::invalid_argument("duplicate pump field " + to_string(pumps[i]));
            }
        }
    }
    for (size_t i = 0; i < chis.size(); ++i) {
        for (size_t j = i + 1; j < chis.size(); ++j) {
            if (chis[i].label == chis[j].label) {
                throw std::invalid_argument("duplicate tensor label " +
                                            to_string(chis[i].label));
            }
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CouplingGraph enumerate_terms(const std::vector<ModeLabel>& modes,
                              const std::vector<PumpField>& pumps,
                              const std::vector<ChiElement>& chis) {
    check_unique_inputs(modes, pumps, chis);

    std::vector<ModeLabel> vertices = modes;
    std::sort(vertices.begin(), vertices.end());

    CouplingGraph graph;
    graph.vertices = vertices;
    for (const PumpField& pump : pumps) {
        if (!std::isfinite(pump.amplitude) || pump.amplitude < 0.0) {
            throw std::invalid_argument("pump amplitude must be finite and >= 0 for " +
                                        to_string(pump));
        }
        for (size_t a = 0; a < vertices.size(); ++a) {
            for (size_t b = a; b < vertices.size(); ++b) {
                if (vertices[a].freq_index + vertices[b].freq_index != pump.freq_index) {
                    continue;
                }
                const auto label = label_for(pump.pol, vertices[a].pol, vertices[b].pol);
                if (!label) continue;
                const ChiElement* chi = find_chi(chis, *label);
                if (!chi) continue;
                InteractionTerm term;
                term.mode_a = vertices[a];
                term.mode_b = vertices[b];
                term.pump = pump;
                term.chi = *chi;
                term.strength = pump.amplitude * chi->value;
                graph.edges.push_back(term);
            }
        }
    }
    return graph;
}

std::vector<std::vector<int>> connected_components(const CouplingGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    UnionFind uf(n);
    for (const InteractionTerm& t : graph.edges) {
        const int a = graph.vertex_index(t.mode_a);
        const int b = graph.vertex_index(t.mode_b);
        if (a < 0 || b < 0) {
            throw std::invalid_argument("graph edge references mode " +
                                        to_string(a < 0 ? t.mode_a : t.mode_b) +
                                        " absent from the vertex list");
        }
        if (a != b) uf.unite(a, b);
    }
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> components;
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

CouplingMatrix coupling_from_graph(const CouplingGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    if (n < 1) throw std::invalid_argument("graph has no vertices");
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (const InteractionTerm& t : graph.edges) {
        const int a = graph.vertex_index(t.mode_a);
        const int b = graph.vertex_index(t.mode_b);
        if (a < 0 || b < 0) {
            throw std::invalid_argument("graph edge references a mode absent from the vertex list");
        }
        if (a == b) {
            g(a, a) += t.strength;
        } else {
            g(a, b) += t.strength;
            g(b, a) += t.strength;
        }
    }
    return CouplingMatrix(std::move(g));
}

std::vector<PumpField> balance_pumps(const std::vector<InteractionTerm>& terms,
                                     double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::invalid_argument("balance_pumps requires kappa > 0");
    }
    // One amplitude per pump fixes |beta * chi| for all its terms, so only
    // the tensor magnitudes must agree; sign differences surface later as
    // realizability conflicts, not balancing failures.
    std::map<std::pair<int, int>, double> chi_by_pump;  // (freq, pol) -> |chi|
    for (const InteractionTerm& t : terms) {
        if (t.chi.value == 0.0) {
            throw UnbalanceableError("term " + to_string(t) + " has zero tensor value");
        }
        const std::pair<int, int> key{t.pump.freq_index, static_cast<int>(t.pump.pol)};
        const auto [it, inserted] = chi_by_pump.emplace(key, std::abs(t.chi.value));
        if (!inserted && it->second != std::abs(t.chi.value)) {
            std::ostringstream msg;
            msg << "pump " << to_string(t.pump)
                << " drives terms with mismatched tensor magnitudes ("
                << it->second << " vs " << std::abs(t.chi.value)
                << "); a single amplitude cannot balance them";
            throw UnbalanceableError(msg.str());
        }
    }
    std::vector<PumpField> result;
    for (const auto& [key, chi] : chi_by_pump) {
        PumpField p;
        p.freq_index = key.first;
        p.pol = static_cast<Pol>(key.second);
        p.amplitude = kappa / std::abs(chi);
        result.push_back(p);
    }
    return result;
}

namespace {

// Shared tail of the experimental builders: enumerate, balance the pumps so
// every intended edge lands at kappa, and split off anything outside the
// intended complete graph.
ExperimentalBuild finish_build(double kappa, const std::vector<ModeLabel>& modes,
                               std::vector<PumpField> pumps,
                               const std::vector<ChiElement>& chis) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::invalid_argument("experimental build requires kappa > 0");
    }
    CouplingGraph probe = enumerate_terms(modes, pumps, chis);

    // Intended edges: the first non-degenerate term per mode pair. Pump
    // amplitudes are balanced against these alone, so an extended tensor set
    // that drags in extra terms yields a contamination report instead of a
    // balancing failure.
    std::vector<InteractionTerm> intended;
    {
        std::set<std::pair<int, int>> seen;
        for (const InteractionTerm& t : probe.edges) {
            if (t.degenerate()) continue;
            const int ia = probe.vertex_index(t.mode_a);
            const int ib = probe.vertex_index(t.mode_b);
            if (seen.insert({std::min(ia, ib), std::max(ia, ib)}).second) {
                intended.push_back(t);
            }
        }
    }
    std::vector<PumpField> balanced = balance_pumps(intended, kappa);
    for (PumpField& p : pumps) {
        for (const PumpField& b : balanced) {
            if (same_field(p, b)) p.amplitude = b.amplitude;
        }
    }

    CouplingGraph graph = enumerate_terms(modes, pumps, chis);
    ExperimentalBuild build{std::move(graph), std::move(balanced),
                            CouplingMatrix::zero(1), {}, };
    // Contamination: degenerate terms, and any second edge landing on an
    // already-driven pair. Intended edges get their strengths pinned to the
    // exact target (the amplitudes were chosen as kappa/|chi|, so this only
    // removes rounding); contaminants keep whatever strength the shared pump
    // amplitude actually gives them.
    std::set<std::pair<int, int>> seen;
    for (InteractionTerm& t : build.graph.edges) {
        if (t.degenerate()) {
            build.contaminants.push_back(t);
            continue;
        }
        const int ia = build.graph.vertex_index(t.mode_a);
        const int ib = build.graph.vertex_index(t.mode_b);
        if (seen.insert({std::min(ia, ib), std::max(ia, ib)}).second) {
            t.strength = std::copysign(kappa, t.strength);
        } else {
            build.contaminants.push_back(t);
        }
    }
    build.coupling = coupling_from_graph(build.graph);
    return build;
}

std::vector<ChiElement> default_chis_h3() {
    return {{ChiLabel::yzy, 4.24, true}, {ChiLabel::zzz, 15.80, true}};
}

std::vector<ChiElement> default_chis_h4() {
    return {{ChiLabel::yzy, 4.24, true},
            {ChiLabel::yyy, 2.40, true},
            {ChiLabel::zzz, 15.80, true}};
}

}  // namespace

ExperimentalBuild build_h3_experimental(
    double kappa, const std::optional<std::vector<ChiElement>>& chi_override) {
    const std::vector<ModeLabel> modes = {
        {0, Pol::Y}, {0, Pol::Z}, {2, Pol::Z}};
    std::vector<PumpField> pumps = {
        {0, Pol::Y, 1.0}, {2, Pol::Y, 1.0}, {2, Pol::Z, 1.0}};
    return finish_build(kappa, modes, std::move(pumps),
                        chi_override.value_or(default_chis_h3()));
}

ExperimentalBuild build_h4_experimental(
    double kappa, const std::optional<std::vector<ChiElement>>& chi_override) {
    const std::vector<ModeLabel> modes = {
        {0, Pol::Y}, {2, Pol::Z}, {4, Pol::Y}, {6, Pol::Z}};
    std::vector<PumpField> pumps = {{2, Pol::Y, 1.0},
                                    {4, Pol::Y, 1.0},
                                    {6, Pol::Y, 1.0},
                                    {8, Pol::Z, 1.0},
                                    {10, Pol::Y, 1.0}};
    return finish_build(kappa, modes, std::move(pumps),
                        chi_override.value_or(default_chis_h4()));
}

RealizabilityVerdict realizability_check(const CouplingMatrix& desired,
                                         const std::vector<ModeLabel>& modes) {
    const int n = desired.size();
    if (static_cast<int>(modes.size()) != n) {
        throw std::invalid_argument("realizability_check: mode list size differs from matrix size");
    }
    std::map<int, std::vector<std::tuple<int, int, double>>> groups;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = desired(i, j);
            if (v == 0.0) continue;
            groups[modes[i].freq_index + modes[j].freq_index].emplace_back(i, j, v);
        }
    }
    RealizabilityVerdict verdict;
    for (const auto& [pump_freq, entries] : groups) {
        bool pos = false, neg = false;
        for (const auto& [i, j, v] : entries) (v > 0 ? pos : neg) = true;
        if (pos && neg) {
            verdict.realizable = false;
            verdict.conflicts.push_back({pump_freq, entries});
        }
    }
    return verdict;
}

ExploreReport explore_pump_cover(const ExploreConfig& config) {
    const int n = static_cast<int>(config.modes.size());
    if (n < 2) throw std::invalid_argument("explore_pump_cover requires at least 2 modes");
    if (n > 12) {
        std::ostringstream msg;
        msg << "explore_pump_cover: " << n << " modes exceeds the search cap of 12";
        throw std::range_error(msg.str());
    }
    std::vector<ModeLabel> modes = config.modes;
    std::sort(modes.begin(), modes.end());
    check_unique_inputs(modes, {}, config.chis);

    ExploreReport report;
    // Candidate pumps: every (frequency, polarization) driving at least one
    // desired pair. A candidate also drives every degenerate term energy and
    // polarization allow; those are what make it dirty.
    std::set<std::pair<int, Pol>> seen;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int freq = modes[a].freq_index + modes[b].freq_index;
            for (const Pol pol : {Pol::Y, Pol::Z}) {
                if (!seen.insert({freq, pol}).second) continue;
                CandidatePump cand;
                cand.pump = {freq, pol, 1.0};
                for (int i = 0; i < n; ++i) {
                    for (int j = i; j < n; ++j) {
                        if (modes[i].freq_index + modes[j].freq_index != freq) continue;
                        const auto label = label_for(pol, modes[i].pol, modes[j].pol);
                        if (!label || !find_chi(config.chis, *label)) continue;
                        if (i == j) {
                            cand.self_loops.push_back(i);
                        } else {
                            cand.covered_pairs.emplace_back(i, j);
                        }
                    }
                }
                if (!cand.covered_pairs.empty()) report.candidates.push_back(cand);
            }
        }
    }
    std::sort(report.candidates.begin(), report.candidates.end(),
              [](const CandidatePump& a, const CandidatePump& b) {
                  return a.pump < b.pump;
              });
    if (static_cast<int>(report.candidates.size()) > config.max_candidate_pumps) {
        std::ostringstream msg;
        msg << "explore_pump_cover: " << report.candidates.size()
            << " candidate pumps exceed the search cap of " << config.max_candidate_pumps;
        throw std::range_error(msg.str());
    }

    std::set<std::pair<int, int>> wanted;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) wanted.insert({a, b});
    }
    std::set<std::pair<int, int>> covered_clean;
    for (const CandidatePump& c : report.candidates) {
        if (!c.clean()) continue;
        covered_clean.insert(c.covered_pairs.begin(), c.covered_pairs.end());
    }
    std::set<std::pair<int, int>> covered_any;
    for (const CandidatePump& c : report.candidates) {
        covered_any.insert(c.covered_pairs.begin(), c.covered_pairs.end());
    }
    for (const auto& pair : wanted) {
        if (!covered_clean.count(pair)) report.missing_with_clean_pumps.push_back(pair);
        if (!covered_any.count(pair)) report.uncoverable.push_back(pair);
    }

    // Greedy cover over the sorted candidates, clean pumps first. A pump is
    // taken when it drives a still-uncovered pair.
    std::set<std::pair<int, int>> covered;
    auto take = [&](const CandidatePump& c, bool clean_pass) {
        if (c.clean() != clean_pass) return;
        bool useful = false;
        for (const auto& pair : c.covered_pairs) {
            if (!covered.count(pair)) useful = true;
        }
        if (!useful) return;
        covered.insert(c.covered_pairs.begin(), c.covered_pairs.end());
        report.selected_pumps.push_back(c.pump);
        for (const int v : c.self_loops) {
            InteractionTerm loop;
            loop.mode_a = modes[v];
            loop.mode_b = modes[v];
            loop.pump = c.pump;
            const auto label = label_for(c.pump.pol, modes[v].pol, modes[v].pol);
            loop.chi = *find_chi(config.chis, *label);
            loop.strength = loop.chi.value;
            report.induced_self_loops.push_back(loop);
        }
    };
    for (const CandidatePump& c : report.candidates) take(c, true);
    for (const CandidatePump& c : report.candidates) take(c, false);

    report.full_coverage = covered == wanted;
    report.clean = report.full_coverage && report.induced_self_loops.empty();
    return report;
}

}  // namespace sqc
