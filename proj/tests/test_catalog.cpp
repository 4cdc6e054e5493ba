#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <sqc/catalog.hpp>
#include <sqc/coupling.hpp>
#include <sqc/errors.hpp>
#include <sqc/modes.hpp>

using namespace sqc;

namespace {

std::vector<ModeLabel> z_comb(int first, int last) {
    std::vector<ModeLabel> modes;
    for (int k = first; k <= last; k += 2) modes.push_back({k, Pol::Z});
    return modes;
}

bool has_edge(const CouplingGraph& graph, const ModeLabel& a, const ModeLabel& b) {
    return std::any_of(graph.edges.begin(), graph.edges.end(),
                       [&](const InteractionTerm& t) {
                           return (t.mode_a == a && t.mode_b == b) ||
                                  (t.mode_a == b && t.mode_b == a);
                       });
}

}  // namespace

TEST_CASE("degenerate pump pairs a symmetric comb around its center") {
    const CouplingGraph graph =
        enumerate_terms(z_comb(-4, 4), {{0, Pol::Z, 1.0}}, {{ChiLabel::zzz, 1.0}});
    REQUIRE(graph.vertices.size() == 5);
    REQUIRE(graph.edges.size() == 3);
    CHECK(has_edge(graph, {-4, Pol::Z}, {4, Pol::Z}));
    CHECK(has_edge(graph, {-2, Pol::Z}, {2, Pol::Z}));
    CHECK(has_edge(graph, {0, Pol::Z}, {0, Pol::Z}));  // degenerate center
    const auto loops = std::count_if(graph.edges.begin(), graph.edges.end(),
                                     [](const InteractionTerm& t) {
                                         return t.degenerate();
                                     });
    CHECK(loops == 1);
    for (const InteractionTerm& t : graph.edges) {
        CHECK(t.mode_a.freq_index + t.mode_b.freq_index == 0);
        CHECK(t.strength == 1.0);
    }
}

TEST_CASE("offset pump pairs the comb into disjoint doublets") {
    const CouplingGraph graph =
        enumerate_terms(z_comb(-4, 6), {{2, Pol::Z, 1.0}}, {{ChiLabel::zzz, 1.0}});
    REQUIRE(graph.edges.size() == 3);
    CHECK(has_edge(graph, {0, Pol::Z}, {2, Pol::Z}));
    CHECK(has_edge(graph, {-2, Pol::Z}, {4, Pol::Z}));
    CHECK(has_edge(graph, {-4, Pol::Z}, {6, Pol::Z}));
    for (const InteractionTerm& t : graph.edges) CHECK_FALSE(t.degenerate());
}

TEST_CASE("one pump fragments the comb into at most pairs; a second welds them") {
    const std::vector<ModeLabel> modes = z_comb(-6, 6);
    const CouplingGraph single =
        enumerate_terms(modes, {{0, Pol::Z, 1.0}}, {{ChiLabel::zzz, 1.0}});
    const std::vector<std::vector<int>> parts = connected_components(single);
    // Sorted vertices are -6,-4,-2,0,2,4,6; the center only self-loops.
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == std::vector<int>{0, 6});
    CHECK(parts[1] == std::vector<int>{1, 5});
    CHECK(parts[2] == std::vector<int>{2, 4});
    CHECK(parts[3] == std::vector<int>{3});
    for (const auto& part : parts) CHECK(part.size() <= 2);

    const CouplingGraph both = enumerate_terms(
        modes, {{0, Pol::Z, 1.0}, {2, Pol::Z, 1.0}}, {{ChiLabel::zzz, 1.0}});
    const std::vector<std::vector<int>> merged = connected_components(both);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].size() == modes.size());
}

TEST_CASE("coupling matrix entries sum parallel terms") {
    const std::vector<ModeLabel> modes{{-2, Pol::Z}, {2, Pol::Z}};
    const CouplingGraph graph = enumerate_terms(
        modes, {{0, Pol::Z, 1.0}, {0, Pol::Y, 1.0}},
        {{ChiLabel::zzz, 1.0}, {ChiLabel::yzz, 1.0}});
    REQUIRE(graph.edges.size() == 2);
    const CouplingMatrix g = coupling_from_graph(graph);
    CHECK(g(0, 1) == 2.0);
    CHECK(g(0, 0) == 0.0);
}

TEST_CASE("enumeration rejects duplicate modes, pumps, and tensor labels") {
    const std::vector<ModeLabel> modes{{0, Pol::Z}, {0, Pol::Z}};
    CHECK_THROWS_AS(
        enumerate_terms(modes, {{0, Pol::Z, 1.0}}, {{ChiLabel::zzz, 1.0}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        enumerate_terms(z_comb(-2, 2), {{0, Pol::Z, 1.0}, {0, Pol::Z, 2.0}},
                        {{ChiLabel::zzz, 1.0}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        enumerate_terms(z_comb(-2, 2), {{0, Pol::Z, 1.0}},
                        {{ChiLabel::zzz, 1.0}, {ChiLabel::zzz, 2.0}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        enumerate_terms(z_comb(-2, 2), {{0, Pol::Z, -1.0}}, {{ChiLabel::zzz, 1.0}}),
        std::invalid_argument);
}

TEST_CASE("pump amplitudes balance mixed tensor strengths to a uniform rate") {
    const std::vector<ModeLabel> modes{{0, Pol::Y}, {0, Pol::Z}, {2, Pol::Z}};
    const std::vector<PumpField> pumps{{0, Pol::Y, 1.0}, {2, Pol::Z, 1.0}};
    const std::vector<ChiElement> chis{{ChiLabel::yzy, 2.0}, {ChiLabel::zzz, 4.0}};
    const CouplingGraph probe = enumerate_terms(modes, pumps, chis);
    REQUIRE(probe.edges.size() == 2);

    const std::vector<PumpField> balanced = balance_pumps(probe.edges, 1.0);
    REQUIRE(balanced.size() == 2);
    CHECK(balanced[0].pol == Pol::Y);
    CHECK(balanced[0].amplitude == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(balanced[1].pol == Pol::Z);
    CHECK(balanced[1].amplitude == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("balancing fails when one pump would need two amplitudes") {
    // The y-polarized pump drives both the cross term (|chi| = 2) and a
    // degenerate term (|chi| = 3); no single amplitude serves both.
    const std::vector<ModeLabel> modes{{0, Pol::Y}, {0, Pol::Z}};
    const std::vector<PumpField> pumps{{0, Pol::Y, 1.0}};
    const std::vector<ChiElement> chis{{ChiLabel::yzy, 2.0}, {ChiLabel::yyy, 3.0}};
    const CouplingGraph probe = enumerate_terms(modes, pumps, chis);
    REQUIRE(probe.edges.size() == 2);
    bool threw = false;
    try {
        balance_pumps(probe.edges, 1.0);
    } catch (const UnbalanceableError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("y@0") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("opposite tensor signs of equal magnitude balance on one pump") {
    const std::vector<ModeLabel> modes{
        {0, Pol::Y}, {4, Pol::Y}, {0, Pol::Z}, {4, Pol::Z}};
    const std::vector<PumpField> pumps{{4, Pol::Z, 1.0}};
    const std::vector<ChiElement> chis{{ChiLabel::zzz, 2.0}, {ChiLabel::zyy, -2.0}};
    const CouplingGraph probe = enumerate_terms(modes, pumps, chis);
    REQUIRE(probe.edges.size() == 2);

    const std::vector<PumpField> balanced = balance_pumps(probe.edges, 1.0);
    REQUIRE(balanced.size() == 1);
    CHECK(balanced[0].amplitude == doctest::Approx(0.5).epsilon(1e-15));

    double lo = 0.0, hi = 0.0;
    for (const InteractionTerm& t : probe.edges) {
        lo = std::min(lo, t.strength);
        hi = std::max(hi, t.strength);
    }
    CHECK(lo < 0.0);
    CHECK(hi > 0.0);
}

TEST_CASE("three-mode build produces the uniform triangle") {
    const ExperimentalBuild build = build_h3_experimental(1.0);
    CHECK(build.graph.edges.size() == 3);
    CHECK(build.pumps.size() == 3);
    CHECK_FALSE(build.contaminated());
    const Eigen::MatrixXd& g = build.coupling.matrix();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            CHECK(g(r, c) == (r == c ? 0.0 : 1.0));
        }
    }
    CHECK(graph_edge_list(build.graph) ==
          "0 y | y:0 | z:0 | + | 1\n"
          "2 y | y:0 | z:2 | + | 1\n"
          "2 z | z:0 | z:2 | + | 1\n");
}

TEST_CASE("four-mode build covers the complete graph with five pumps") {
    const double kappa = 2.5;
    const ExperimentalBuild build = build_h4_experimental(kappa);
    CHECK(build.graph.edges.size() == 6);
    CHECK(build.pumps.size() == 5);
    CHECK_FALSE(build.contaminated());
    const Eigen::MatrixXd& g = build.coupling.matrix();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            CHECK(g(r, c) == (r == c ? 0.0 : kappa));
        }
    }
    const Eigen::VectorXd ev = eigenmodes(build.coupling).eigenvalues();
    CHECK(ev(0) == doctest::Approx(3.0 * kappa).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) {
        CHECK(ev(k) == doctest::Approx(-kappa).epsilon(1e-12));
    }
    // One pump drives two pair terms; balancing still lands every term on
    // the exact target.
    for (const InteractionTerm& t : build.graph.edges) {
        CHECK(t.strength == kappa);
    }
}

TEST_CASE("an extended tensor set contaminates the three-mode build") {
    const std::vector<ChiElement> chis{
        {ChiLabel::yzy, 4.24}, {ChiLabel::zzz, 15.80}, {ChiLabel::yyy, 2.40}};
    const ExperimentalBuild build = build_h3_experimental(1.0, chis);
    CHECK(build.contaminated());
    REQUIRE(build.contaminants.size() == 1);
    const InteractionTerm& loop = build.contaminants.front();
    CHECK(loop.degenerate());
    CHECK(loop.mode_a == ModeLabel{0, Pol::Y});
    // The shared pump amplitude was balanced for the cross term, so the
    // degenerate term rides at the tensor-value ratio, not at kappa.
    CHECK(loop.strength == doctest::Approx(2.40 / 4.24).epsilon(1e-12));
    CHECK(build.coupling.matrix()(0, 0) == doctest::Approx(2.40 / 4.24).epsilon(1e-12));
}

TEST_CASE("experimental builds demand a positive target rate") {
    CHECK_THROWS_AS(build_h3_experimental(0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_h4_experimental(-1.0), std::invalid_argument);
}

TEST_CASE("realizability passes uniform graphs and the zero matrix") {
    const std::vector<ModeLabel> lattice3 = {{0, Pol::Z}, {2, Pol::Z}, {4, Pol::Z}};
    CHECK(realizability_check(complete_graph_coupling(3, 1.0), lattice3).realizable);
    const std::vector<ModeLabel> lattice4 = {
        {0, Pol::Z}, {2, Pol::Z}, {4, Pol::Z}, {6, Pol::Z}};
    CHECK(realizability_check(complete_graph_coupling(4, 1.0), lattice4).realizable);
    CHECK(realizability_check(CouplingMatrix::zero(3), lattice3).realizable);
}

TEST_CASE("realizability flags a mixed-sign pump group once") {
    // Splitter-transformed one-against-the-rest matrix on an equally spaced
    // comb: the pump feeding the (0,2) pair also feeds the diagonal of the
    // middle mode, with opposite sign.
    Eigen::VectorXd rates(3);
    rates << -1.0, 1.0, 1.0;
    const CouplingMatrix transformed =
        apply_network(CouplingMatrix{Eigen::MatrixXd(rates.asDiagonal())},
                      make_nsplitter(3));
    const std::vector<ModeLabel> lattice = {{0, Pol::Z}, {2, Pol::Z}, {4, Pol::Z}};
    const RealizabilityVerdict verdict = realizability_check(transformed, lattice);
    CHECK_FALSE(verdict.realizable);
    REQUIRE(verdict.conflicts.size() == 1);
    const RealizabilityConflict& conflict = verdict.conflicts.front();
    CHECK(conflict.pump_freq_index == 4);
    REQUIRE(conflict.entries.size() == 2);
    CHECK(std::get<0>(conflict.entries[0]) == 0);
    CHECK(std::get<1>(conflict.entries[0]) == 2);
    CHECK(std::get<2>(conflict.entries[0]) == doctest::Approx(-2.0 / 3.0));
    CHECK(std::get<0>(conflict.entries[1]) == 1);
    CHECK(std::get<1>(conflict.entries[1]) == 1);
    CHECK(std::get<2>(conflict.entries[1]) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("pump cover search reports the pair no clean pump reaches") {
    ExploreConfig config;
    config.modes = {{0, Pol::Y}, {2, Pol::Z}, {4, Pol::Y}, {6, Pol::Z}, {8, Pol::Y}};
    config.chis = {{ChiLabel::yzy, 1.0}, {ChiLabel::zzz, 1.0}, {ChiLabel::yyy, 1.0}};
    const ExploreReport report = explore_pump_cover(config);
    CHECK(report.uncoverable.empty());
    // The like-polarized outer pair (y:0, y:8) only comes from a pump that
    // also drives the degenerate term on y:4.
    REQUIRE(report.missing_with_clean_pumps.size() == 1);
    CHECK(report.missing_with_clean_pumps[0] == std::pair<int, int>{0, 4});
    CHECK(report.full_coverage);
    CHECK_FALSE(report.clean);
    REQUIRE(report.induced_self_loops.size() == 1);
    CHECK(report.induced_self_loops[0].mode_a == ModeLabel{4, Pol::Y});
}

TEST_CASE("pump cover over the alternating four-mode pattern is clean") {
    ExploreConfig config;
    config.modes = {{0, Pol::Y}, {2, Pol::Z}, {4, Pol::Y}, {6, Pol::Z}};
    config.chis = {{ChiLabel::yzy, 1.0}, {ChiLabel::yyy, 1.0}, {ChiLabel::zzz, 1.0}};
    const ExploreReport report = explore_pump_cover(config);
    CHECK(report.full_coverage);
    CHECK(report.clean);
    CHECK(report.induced_self_loops.empty());
    const std::vector<PumpField> expected{
        {2, Pol::Y, 1.0}, {4, Pol::Y, 1.0}, {6, Pol::Y, 1.0},
        {8, Pol::Z, 1.0}, {10, Pol::Y, 1.0}};
    REQUIRE(report.selected_pumps.size() == expected.size());
    std::vector<PumpField> sorted = report.selected_pumps;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < expected.size(); ++k) {
        CHECK(same_field(sorted[k], expected[k]));
    }
}

TEST_CASE("pump cover with the full tensor family goes dirty on inner modes") {
    ExploreConfig config;
    config.modes = {{0, Pol::Y}, {2, Pol::Z}, {4, Pol::Y}, {6, Pol::Z}, {8, Pol::Y}};
    config.chis = {{ChiLabel::yzy, 1.0}, {ChiLabel::zzz, 1.0}, {ChiLabel::yyy, 1.0},
                   {ChiLabel::yzz, 1.0}, {ChiLabel::zyy, 1.0}};
    const ExploreReport report = explore_pump_cover(config);
    CHECK(report.full_coverage);
    CHECK_FALSE(report.clean);
    CHECK(report.uncoverable.empty());
    CHECK(report.selected_pumps.size() == 7);

    std::vector<int> loop_modes;
    for (const InteractionTerm& t : report.induced_self_loops) {
        for (size_t v = 0; v < config.modes.size(); ++v) {
            if (config.modes[v] == t.mode_a) loop_modes.push_back(static_cast<int>(v));
        }
    }
    std::sort(loop_modes.begin(), loop_modes.end());
    loop_modes.erase(std::unique(loop_modes.begin(), loop_modes.end()),
                     loop_modes.end());
    CHECK(loop_modes == std::vector<int>{1, 2, 3});
}

TEST_CASE("pump cover enforces its size caps") {
    ExploreConfig config;
    for (int k = 0; k < 13; ++k) config.modes.push_back({2 * k, Pol::Z});
    config.chis = {{ChiLabel::zzz, 1.0}};
    CHECK_THROWS_AS(explore_pump_cover(config), std::range_error);
}

TEST_CASE("phase-mismatched tensor elements generate no terms") {
    const std::vector<ChiElement> chis{{ChiLabel::zzz, 1.0, false}};
    const CouplingGraph graph =
        enumerate_terms(z_comb(-2, 2), {{0, Pol::Z, 1.0}}, chis);
    CHECK(graph.edges.empty());
}
