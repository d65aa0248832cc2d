#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <signlab/constructions.hpp>
#include <signlab/search.hpp>
#include <signlab/spectra.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace signlab;

namespace {

std::vector<double> merged(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

double rho_of(const SignedGraph& sg) { return spectral_radius(signed_adjacency(sg)); }

}  // namespace

// ---------------------------------------------------------------------------
// Complete graphs

TEST(SignComplete, CaseOneReproducesPrintedMatrix) {
    const auto sg = sign_complete_from_conference(paley_conference(5), CompleteCase::one);
    EXPECT_EQ(sg.order(), 7);
    EXPECT_EQ(sg.graph(), complete_graph(7));
    EXPECT_EQ(signed_adjacency(sg), fixtures::reference("k7_case1.txt"));
}

TEST(SignComplete, CaseTwoReproducesPrintedMatrix) {
    const auto sg = sign_complete_from_conference(paley_conference(5), CompleteCase::two);
    EXPECT_EQ(sg.graph(), complete_graph(8));
    EXPECT_EQ(signed_adjacency(sg), fixtures::reference("k8_case2.txt"));
}

TEST(SignComplete, CaseThreeQuotient) {
    const auto sg = sign_complete_from_conference(paley_conference(5), CompleteCase::three);
    EXPECT_EQ(sg.graph(), complete_graph(9));
    const auto q = quotient_matrix(sg, complete_case_partition(CompleteCase::three, 6));
    EXPECT_EQ(q.b, (IntMatrix{{-1, 0, 5}, {0, 1, 5}, {2, 2, 0}}));
    // charpoly x (x^2 - 21)(x^2 - 5)^3.
    const auto cp = oracle::charpoly(signed_adjacency(sg));
    for (double x : {0.0, std::sqrt(21.0), -std::sqrt(21.0), std::sqrt(5.0), -std::sqrt(5.0)})
        EXPECT_NEAR(oracle::eval(cp, x), 0.0, 1e-6);
    EXPECT_NEAR(rho_of(sg), std::sqrt(21.0), 1e-9);
}

TEST(SignComplete, Preconditions) {
    IntMatrix m = paley_conference(5).matrix();
    for (std::size_t j = 0; j < 6; ++j) {
        m(1, j) = -m(1, j);
        m(j, 1) = -m(j, 1);
    }
    EXPECT_THROW(sign_complete_from_conference(ConferenceMatrix(m), CompleteCase::one), std::invalid_argument);
    EXPECT_THROW(sign_complete_from_conference(ConferenceMatrix(IntMatrix{{0, 1}, {1, 0}}), CompleteCase::one),
                 std::invalid_argument);
    EXPECT_THROW(parse_complete_case(4), std::invalid_argument);
}

TEST(SignComplete, PartitionsEquitableForLargerConference) {
    for (int q : {13, 17}) {
        const auto c = paley_conference(q);
        const int n = q + 1;
        for (auto which : {CompleteCase::one, CompleteCase::two, CompleteCase::three}) {
            const auto sg = sign_complete_from_conference(c, which);
            const auto p = complete_case_partition(which, n);
            const auto q_b = quotient_matrix(sg, p);
            EXPECT_TRUE(verify_quotient_identity(sg, p, q_b.b, 1));
            EXPECT_TRUE(verify_quotient_identity(sg, p, q_b.b, 2));
        }
    }
}

TEST(CaseClosedForms, PrintedFormulas) {
    const double r33 = std::sqrt(33.0);
    const auto one = case_quotient_eigenvalues(CompleteCase::one, 6);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_NEAR(one[0], (1 - r33) / 2, 1e-12);
    EXPECT_NEAR(one[1], -1.0, 1e-12);
    EXPECT_NEAR(one[2], (1 + r33) / 2, 1e-12);

    const auto two = case_quotient_eigenvalues(CompleteCase::two, 6);
    EXPECT_EQ(two, (std::vector<double>{-3.0, -1.0, -1.0, 5.0}));

    const auto three = case_quotient_eigenvalues(CompleteCase::three, 6);
    EXPECT_NEAR(three[0], -std::sqrt(21.0), 1e-12);
    EXPECT_NEAR(three[1], 0.0, 1e-12);
    EXPECT_NEAR(three[2], std::sqrt(21.0), 1e-12);
    EXPECT_THROW(case_quotient_eigenvalues(CompleteCase::one, 5), std::invalid_argument);
}

TEST(CaseClosedForms, CasesTwoAndThreeMatchSolver) {
    for (int q : {5, 13, 17}) {
        const auto c = paley_conference(q);
        for (auto which : {CompleteCase::two, CompleteCase::three}) {
            const auto sg = sign_complete_from_conference(c, which);
            const auto qm = quotient_matrix(sg, complete_case_partition(which, q + 1));
            EXPECT_TRUE(spectra_equal(quotient_spectrum(qm), case_quotient_eigenvalues(which, q + 1), 1e-9))
                << "q=" << q << " case " << static_cast<int>(which);
        }
    }
}

TEST(CaseClosedForms, CaseOnePrintedFormulaDisagreesWithQuotient) {
    // B = [[0,1,n-1],[1,0,n-1],[1,1,0]] has eigenvalues -1 and (1 +- sqrt(8n - 7))/2;
    // the printed closed form uses 8n - 15.
    for (int q : {5, 13}) {
        const int n = q + 1;
        const auto sg = sign_complete_from_conference(paley_conference(q), CompleteCase::one);
        const auto qm = quotient_matrix(sg, complete_case_partition(CompleteCase::one, n));
        const auto eig = quotient_spectrum(qm);
        const double r = std::sqrt(8.0 * n - 7.0);
        EXPECT_TRUE(spectra_equal(eig, {(1 - r) / 2, -1.0, (1 + r) / 2}, 1e-9));
        EXPECT_FALSE(spectra_equal(eig, case_quotient_eigenvalues(CompleteCase::one, n), 1e-9));
    }
    // Characteristic polynomial of the printed 7x7 matrix: (x+1)(x^2-5)^2(x^2-x-10).
    const auto cp = oracle::charpoly(fixtures::reference("k7_case1.txt"));
    EXPECT_NEAR(oracle::eval(cp, (1 + std::sqrt(41.0)) / 2), 0.0, 1e-8);
    EXPECT_GT(std::abs(oracle::eval(cp, (1 + std::sqrt(33.0)) / 2)), 1.0);
}

// ---------------------------------------------------------------------------
// G o K2-bar

TEST(LexK2, SingleConstantEdge) {
    const Graph k2 = complete_graph(2);
    const auto h1 = SignedGraph::all_positive(k2);
    const auto h2 = SignedGraph::all_positive(empty_graph(2));
    const auto out = lex_k2_signing(k2, h1, h2);
    EXPECT_EQ(out.graph(), lexicographic_product(k2, empty_graph(2)));
    for (int s : out.signs()) EXPECT_EQ(s, 1);
    EXPECT_NEAR(rho_of(out), 2.0, 1e-9);
    EXPECT_NEAR(rho_of(out), 2.0 * rho_of(h1), 1e-9);
}

TEST(LexK2, SingleAlternatingEdge) {
    const Graph k2 = complete_graph(2);
    const auto h2 = SignedGraph::all_positive(k2);
    const auto out = lex_k2_signing(k2, SignedGraph::all_positive(empty_graph(2)), h2);
    // (x,j)(y,j) = +1, (x,j)(y,1-j) = -1.
    EXPECT_EQ(out.sign(0, 2), 1);
    EXPECT_EQ(out.sign(1, 3), 1);
    EXPECT_EQ(out.sign(0, 3), -1);
    EXPECT_EQ(out.sign(1, 2), -1);
    // charpoly x^2 (x-2)(x+2).
    EXPECT_EQ(oracle::charpoly(signed_adjacency(out)), (std::vector<std::int64_t>{1, 0, -4, 0, 0}));
    EXPECT_LE(rho_of(out), 2.0 * rho_of(h2) + 1e-9);
}

TEST(LexK2, OctahedralExampleBound) {
    const Graph g = fixtures::fig1_graph();
    const auto s1 = min_rho(fixtures::fig1_h1()).best_signing;
    const auto s2 = min_rho(fixtures::fig1_h2()).best_signing;
    EXPECT_NEAR(rho_of(s1), std::sqrt(3.0), 1e-9);
    EXPECT_NEAR(rho_of(s2), std::sqrt(3.0), 1e-9);
    const auto out = lex_k2_signing(g, s1, s2);
    EXPECT_EQ(out.graph(), lexicographic_product(g, empty_graph(2)));
    const auto report = check_good_signing(out, BoundMode::regular);
    EXPECT_EQ(report.degree, 8);
    EXPECT_LE(report.rho, 2.0 * std::max(rho_of(s1), rho_of(s2)) + 1e-9);
    EXPECT_EQ(report.verdict, Verdict::good);
}

TEST(LexK2, SpectrumIsTwiceTheParts) {
    std::mt19937 rng(41);
    const Graph g = fixtures::fig1_graph();
    for (int trial = 0; trial < 10; ++trial) {
        const auto s1 = fixtures::random_signing(fixtures::fig1_h1(), rng);
        const auto s2 = fixtures::random_signing(fixtures::fig1_h2(), rng);
        const auto out = lex_k2_signing(g, s1, s2);
        auto want = merged(eigenvalues_symmetric(std::int64_t{2} * signed_adjacency(s1)),
                           eigenvalues_symmetric(std::int64_t{2} * signed_adjacency(s2)));
        EXPECT_TRUE(spectra_equal(eigenvalues_symmetric(signed_adjacency(out)), want, 1e-8));
        EXPECT_LE(rho_of(out), 2.0 * std::max(rho_of(s1), rho_of(s2)) + 1e-9);
        const auto q = quotient_matrix(out, Partition::blocks(6, 2));
        EXPECT_EQ(q.b, std::int64_t{2} * signed_adjacency(s1));
    }
}

TEST(LexK2, RejectsBadDecomposition) {
    const Graph g = cycle_graph(4);
    const auto h1 = SignedGraph::all_positive(Graph(4, {{0, 1}, {1, 2}}));
    const auto h2 = SignedGraph::all_positive(Graph(4, {{2, 3}}));
    EXPECT_THROW(lex_k2_signing(g, h1, h2), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// G o K4-bar

TEST(LexK4, SingleEdge) {
    const auto out = lex_k4_signing(SignedGraph::all_positive(complete_graph(2)));
    EXPECT_EQ(out.graph(), lexicographic_product(complete_graph(2), empty_graph(4)));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) EXPECT_EQ(out.sign(i, 4 + k), i == k ? -1 : 1);
    // (x-2)^4 (x+2)^4.
    const auto cp = oracle::charpoly(signed_adjacency(out));
    EXPECT_EQ(cp, (std::vector<std::int64_t>{1, 0, -16, 0, 96, 0, -256, 0, 256}));
    EXPECT_NEAR(rho_of(out), 2.0, 1e-9);
}

TEST(LexK4, DoublingLawAndQuotient) {
    std::mt19937 rng(77);
    const Graph bases[] = {complete_graph(4), petersen_graph(), fixtures::fig2_graph(), cycle_graph(5)};
    for (const Graph& g : bases)
        for (int trial = 0; trial < 4; ++trial) {
            const auto sigma = fixtures::random_signing(g, rng);
            const auto out = lex_k4_signing(sigma);
            EXPECT_EQ(out.order(), 4 * g.order());
            EXPECT_NEAR(rho_of(out), 2.0 * rho_of(sigma), 2e-8);
            const auto p = Partition::blocks(g.order(), 4);
            const auto q = quotient_matrix(out, p);
            EXPECT_EQ(q.b, std::int64_t{2} * signed_adjacency(sigma));
            EXPECT_TRUE(verify_quotient_identity(out, p, q.b));
        }
}

TEST(LexK4, GoodSigningOfK4StaysGood) {
    const auto best = min_rho(complete_graph(4));
    EXPECT_NEAR(best.best_rho, std::sqrt(5.0), 1e-9);
    const auto out = lex_k4_signing(best.best_signing);
    const auto report = check_good_signing(out, BoundMode::regular);
    EXPECT_EQ(report.degree, 12);
    EXPECT_NEAR(report.rho, 2.0 * best.best_rho, 2e-8);
    EXPECT_LE(report.rho, 2.0 * std::sqrt(11.0));
    EXPECT_EQ(report.verdict, Verdict::good);
}

// ---------------------------------------------------------------------------
// 2-lifts

TEST(TwoLift, AllPositiveIsTwoCopies) {
    const Graph g = petersen_graph();
    const Graph lift = two_lift(SignedGraph::all_positive(g));
    EXPECT_EQ(lift.order(), 20);
    EXPECT_EQ(lift.size(), 30u);
    const auto comp = connected_components(lift);
    EXPECT_EQ(*std::max_element(comp.begin(), comp.end()), 1);
    for (const Edge& e : g.edges()) {
        EXPECT_TRUE(lift.adjacent(2 * e.u, 2 * e.v));
        EXPECT_TRUE(lift.adjacent(2 * e.u + 1, 2 * e.v + 1));
    }
}

TEST(TwoLift, AllNegativeIsBipartiteDoubleCover) {
    const Graph g = complete_graph(5);
    const Graph lift = two_lift(negate_signing(SignedGraph::all_positive(g)));
    const auto colour = is_bipartite(lift);
    ASSERT_TRUE(colour);
    EXPECT_TRUE(is_connected(lift));
    for (int v = 0; v < 5; ++v) EXPECT_NE((*colour)[2 * v], (*colour)[2 * v + 1]);
}

TEST(TwoLift, WorkedTauExample) {
    const auto tau = signed_graph_from_matrix(fixtures::reference("fig2_tau.txt"));
    const Graph lift = two_lift(tau);
    EXPECT_FALSE(lift.adjacent(0, 2));  // u0 v0
    EXPECT_TRUE(lift.adjacent(0, 3));   // u0 v1
    EXPECT_TRUE(lift.adjacent(1, 2));   // u1 v0
    EXPECT_TRUE(lift.adjacent(0, 6));   // u0 z0
    EXPECT_EQ(lift.size(), 10u);
}

TEST(TwoLift, SpectrumIsBaseUnionSigned) {
    std::mt19937 rng(19);
    const Graph bases[] = {fixtures::fig2_graph(), petersen_graph(), complete_graph(6)};
    for (const Graph& g : bases)
        for (int trial = 0; trial < 4; ++trial) {
            const auto tau = fixtures::random_signing(g, rng);
            const Graph lift = two_lift(tau);
            for (int v = 0; v < g.order(); ++v) {
                EXPECT_EQ(lift.degree(2 * v), g.degree(v));
                EXPECT_EQ(lift.degree(2 * v + 1), g.degree(v));
            }
            const auto want =
                merged(eigenvalues_symmetric(adjacency_matrix(g)), eigenvalues_symmetric(signed_adjacency(tau)));
            EXPECT_TRUE(spectra_equal(eigenvalues_symmetric(adjacency_matrix(lift)), want, 1e-8));
        }
}

TEST(TwoLiftSigned, WorkedExample) {
    const auto phi = two_lift_signed(fixtures::fig2_sigma(), fixtures::fig2_sigma_prime());
    EXPECT_EQ(signed_adjacency(phi), fixtures::reference("lift_phi.txt"));
    const auto q = quotient_matrix(phi, Partition::blocks(4, 2));
    EXPECT_EQ(q.b, signed_adjacency(fixtures::fig2_sigma_prime()));
}

TEST(TwoLiftSigned, EqualSigningsGiveTwoCopies) {
    std::mt19937 rng(23);
    const auto sigma = fixtures::random_signing(petersen_graph(), rng);
    const auto phi = two_lift_signed(sigma, sigma);
    EXPECT_EQ(connected_components(phi.graph()).back(), 1);
    EXPECT_NEAR(rho_of(phi), rho_of(sigma), 1e-9);
}

TEST(TwoLiftSigned, SpectrumIsUnionOfBothSignings) {
    std::mt19937 rng(29);
    const Graph bases[] = {fixtures::fig2_graph(), petersen_graph(), complete_graph(5)};
    for (const Graph& g : bases)
        for (int trial = 0; trial < 4; ++trial) {
            const auto s = fixtures::random_signing(g, rng);
            const auto sp = fixtures::random_signing(g, rng);
            const auto phi = two_lift_signed(s, sp);
            const auto want =
                merged(eigenvalues_symmetric(signed_adjacency(s)), eigenvalues_symmetric(signed_adjacency(sp)));
            EXPECT_TRUE(spectra_equal(eigenvalues_symmetric(signed_adjacency(phi)), want, 1e-8));
            const auto p = Partition::blocks(g.order(), 2);
            EXPECT_TRUE(verify_quotient_identity(phi, p, signed_adjacency(sp)));
        }
}

TEST(TwoLiftSigned, RejectsDifferentGraphs) {
    EXPECT_THROW(two_lift_signed(SignedGraph::all_positive(complete_graph(4)), fixtures::fig2_sigma()),
                 std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Switching equivalence

TEST(Equivalence, Identity) {
    const auto sg = fixtures::fig2_sigma();
    const auto r = signing_equivalence(sg, sg);
    ASSERT_TRUE(r.equivalent());
    EXPECT_EQ(*r.switching, std::vector<int>(4, 1));
}

TEST(Equivalence, SingleVertexSwitch) {
    const auto sg = SignedGraph::all_positive(petersen_graph());
    std::vector<int> d(10, 1);
    d[6] = -1;
    const auto r = signing_equivalence(sg, switch_signing(sg, d));
    ASSERT_TRUE(r.equivalent());
    EXPECT_EQ(*r.switching, d);
}

TEST(Equivalence, FourCycleClassesDiffer) {
    const auto pos = SignedGraph::all_positive(cycle_graph(4));
    const auto neg = fixtures::c4_one_negative();
    const auto r = signing_equivalence(pos, neg);
    EXPECT_FALSE(r.equivalent());
    EXPECT_TRUE(oracle::all_switchings(signed_adjacency(pos), signed_adjacency(neg)).empty());
    ASSERT_FALSE(r.witness_cycle.empty());
    EXPECT_NE(cycle_sign(pos, r.witness_cycle), cycle_sign(neg, r.witness_cycle));
}

TEST(Equivalence, AgreesWithBruteForce) {
    std::mt19937 rng(31);
    const Graph bases[] = {complete_graph(5), fixtures::fig2_graph(), petersen_graph()};
    for (const Graph& g : bases)
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = fixtures::random_signing(g, rng);
            const auto b = (trial % 2) ? switch_signing(a, fixtures::random_switching(g.order(), rng))
                                       : fixtures::random_signing(g, rng);
            const auto r = signing_equivalence(a, b);
            const bool brute = !oracle::all_switchings(signed_adjacency(a), signed_adjacency(b)).empty();
            ASSERT_EQ(r.equivalent(), brute);
            if (r.equivalent()) {
                EXPECT_EQ(signed_adjacency(switch_signing(a, *r.switching)), signed_adjacency(b));
            } else {
                EXPECT_NE(cycle_sign(a, r.witness_cycle), cycle_sign(b, r.witness_cycle));
            }
        }
}

TEST(Equivalence, DisconnectedGraph) {
    const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto a = SignedGraph::all_positive(g);
    const std::vector<int> d = {1, -1, 1, -1, -1, 1};
    const auto r = signing_equivalence(a, switch_signing(a, d));
    ASSERT_TRUE(r.equivalent());
    EXPECT_EQ(signed_adjacency(switch_signing(a, *r.switching)), signed_adjacency(switch_signing(a, d)));
}

TEST(Equivalence, SwitchingPreservesSpectrum) {
    std::mt19937 rng(37);
    const auto a = fixtures::random_signing(complete_graph(8), rng);
    const auto b = switch_signing(a, fixtures::random_switching(8, rng));
    EXPECT_NEAR(rho_of(a), rho_of(b), 1e-10);
}
