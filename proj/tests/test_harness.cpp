#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "spanfactor/cliques.hpp"
#include "spanfactor/graph.hpp"
#include "spanfactor/harness.hpp"

using namespace spanfactor;

TEST_CASE("enumerate_labeled counts") {
    std::uint64_t total = 0;
    enumerate_labeled(3, {}, [&](const Graph&) { ++total; });
    CHECK(total == 8);

    std::uint64_t connected = 0;
    EnumerationFilters connected_only;
    connected_only.connected = true;
    enumerate_labeled(4, connected_only, [&](const Graph&) { ++connected; });
    CHECK(connected == 38);

    // min-degree filter vs inclusion-exclusion over isolated-vertex patterns
    std::uint64_t no_isolated = 0;
    EnumerationFilters degree_one;
    degree_one.min_degree = 1;
    enumerate_labeled(6, degree_one, [&](const Graph&) { ++no_isolated; });
    std::int64_t expect = 0;
    for (int j = 0; j <= 6; ++j) {
        const int rest = (6 - j) * (5 - j) / 2;
        const std::int64_t term = binomial(6, j) * (std::int64_t{1} << rest);
        expect += (j % 2 == 0) ? term : -term;
    }
    CHECK(static_cast<std::int64_t>(no_isolated) == expect);

    // parity gate: no graphs when n*k is odd
    std::uint64_t gated = 0;
    EnumerationFilters parity;
    parity.nk_even_k = 3;
    enumerate_labeled(5, parity, [&](const Graph&) { ++gated; });
    CHECK(gated == 0);

    CHECK_THROWS_AS(enumerate_labeled(9, {}, [](const Graph&) {}), std::invalid_argument);
}

TEST_CASE("sample_random is reproducible and Bernoulli") {
    std::vector<std::string> first, second;
    sample_random(8, 0.3, 50, 42, [&](const Graph& g) { first.push_back(graph6_encode(g)); });
    sample_random(8, 0.3, 50, 42, [&](const Graph& g) { second.push_back(graph6_encode(g)); });
    CHECK(first == second);
    sample_random(8, 0.3, 50, 43, [&](const Graph& g) { second.push_back(graph6_encode(g)); });
    CHECK(first != second);

    std::uint64_t complete_hits = 0;
    sample_random(6, 1.0, 5, 7, [&](const Graph& g) {
        if (g == complete_graph(6)) ++complete_hits;
    });
    CHECK(complete_hits == 5);

    // mean edge count within 3 sigma of p*binomial(n,2)
    const double p = 0.4;
    const int n = 10, pairs = 45;
    const std::uint64_t count = 10000;
    double edges = 0;
    sample_random(n, p, count, 1234, [&](const Graph& g) { edges += g.edge_count(); });
    const double mean = edges / static_cast<double>(count);
    const double sigma = std::sqrt(pairs * p * (1 - p) / static_cast<double>(count));
    CHECK(std::abs(mean - p * pairs) <= 3 * sigma);
}

TEST_CASE("parse_source") {
    const GraphSource a = parse_source("exhaustive", 6, 1);
    CHECK(a.kind == GraphSource::Kind::Exhaustive);
    const GraphSource b = parse_source("random:100:0.25", 8, 9);
    CHECK(b.kind == GraphSource::Kind::Random);
    CHECK(b.count == 100);
    CHECK(b.p == doctest::Approx(0.25));
    CHECK(b.seed == 9);
    const GraphSource c = parse_source("file:/tmp/x.g6", 8, 0);
    CHECK(c.kind == GraphSource::Kind::File);
    CHECK(c.path == "/tmp/x.g6");
    CHECK_THROWS_AS(parse_source("bogus", 5, 0), std::invalid_argument);
}

TEST_CASE("verify validates hypothesis ranges upfront") {
    GraphSource src;
    src.kind = GraphSource::Kind::Exhaustive;
    src.n = 6;
    CHECK_THROWS_AS(verify({"T13i", {.n = 7, .r = 2, .delta = 1}}, src), std::domain_error);   // odd n
    CHECK_THROWS_AS(verify({"T13i", {.n = 6, .r = 1, .delta = 1}}, src), std::domain_error);   // r < 2
    CHECK_THROWS_AS(verify({"T13ii", {.n = 6, .r = 2, .k = 2, .delta = 1}}, src),
                    std::domain_error);                                                         // delta < 2k-2
    CHECK_THROWS_AS(verify({"C15i", {.n = 12, .delta = 1}}, src), std::domain_error);          // n < 6delta+10
    CHECK_THROWS_AS(verify({"NOPE", {.n = 6}}, src), std::domain_error);
}

TEST_CASE("verify equivalence suites on small exhaustive scans") {
    GraphSource src;
    src.kind = GraphSource::Kind::Exhaustive;
    src.n = 5;

    const VerificationReport eq12 = verify({"EQ-T12", {.n = 5, .k = 2}}, src);
    CHECK(eq12.scanned == 1024);
    CHECK(eq12.hypothesis_hits == 1024);
    CHECK(eq12.counterexamples.empty());
    CHECK(eq12.conclusion_hits + eq12.exceptional_hits == eq12.hypothesis_hits);

    const VerificationReport eq19 = verify({"EQ-T19", {.n = 5, .k = 2, .m = 1}}, src);
    CHECK(eq19.counterexamples.empty());
    CHECK(eq19.hypothesis_hits == 728);  // connected labeled graphs on 5 vertices

    const VerificationReport eq111 = verify({"EQ-T111", {.n = 5, .k = 1}}, src);
    CHECK(eq111.counterexamples.empty());
    CHECK(eq111.hypothesis_hits == 728);

    const VerificationReport l27 = verify({"BND-L27", {.n = 5}}, src);
    CHECK(l27.counterexamples.empty());
    CHECK(l27.hypothesis_hits == 1024);

    const VerificationReport l33 = verify({"BND-L33", {.n = 5}}, src);
    CHECK(l33.counterexamples.empty());
    CHECK(l33.hypothesis_hits == 728);
}

TEST_CASE("verify FACT21 on a random stream") {
    GraphSource src;
    src.kind = GraphSource::Kind::Random;
    src.n = 9;
    src.count = 2000;
    src.p = 0.35;
    src.seed = 99;
    const VerificationReport rep = verify({"FACT21", {.n = 9, .r = 3, .s = 2, .q = 3}}, src);
    CHECK(rep.scanned == 2000);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.hypothesis_hits > 0);
    CHECK(rep.conclusion_hits == rep.hypothesis_hits);
}

TEST_CASE("verify exhaustive accounting matches a manual unculled scan") {
    // T13i at n=6, delta=1, r=2: the harness applies an edge-count cull at
    // the mask level; the hand loop below applies none. Hit counts must agree
    // and scanned must cover the whole mask space.
    GraphSource src;
    src.kind = GraphSource::Kind::Exhaustive;
    src.n = 6;
    const VerificationReport rep = verify({"T13i", {.n = 6, .r = 2, .delta = 1}}, src);
    CHECK(rep.scanned == (std::uint64_t{1} << 15));

    const std::int64_t threshold = clique_threshold_1f(6, 2, 1).value;
    std::uint64_t hits = 0;
    enumerate_labeled(6, {}, [&](const Graph& g) {
        if (g.min_degree() >= 1 && count_cliques(g, 2) > threshold) ++hits;
    });
    CHECK(rep.hypothesis_hits == hits);
    CHECK(rep.conclusion_hits + rep.exceptional_hits == rep.hypothesis_hits);
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("verify is deterministic across thread counts") {
    GraphSource src;
    src.kind = GraphSource::Kind::Exhaustive;
    src.n = 5;
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions four;
    four.threads = 4;
    const VerificationReport a = verify({"EQ-T12", {.n = 5, .k = 2}}, src, one);
    const VerificationReport b = verify({"EQ-T12", {.n = 5, .k = 2}}, src, four);
    CHECK(a.scanned == b.scanned);
    CHECK(a.hypothesis_hits == b.hypothesis_hits);
    CHECK(a.conclusion_hits == b.conclusion_hits);
    CHECK(a.exceptional_hits == b.exceptional_hits);
    CHECK(a.counterexamples == b.counterexamples);

    // byte-identical emission modulo the wall-time field
    auto strip_wall = [](std::string text) {
        const auto pos = text.find("\"wall_time_s\"");
        return text.substr(0, pos);
    };
    CHECK(strip_wall(report_emit(a, "json")) == strip_wall(report_emit(b, "json")));
}

TEST_CASE("verify spectral and edge-count factor suites on file sources") {
    const std::string path = "harness_corollary_graphs.g6";
    {
        std::ofstream out(path);
        out << graph6_encode(ex_1f_b(16, 1)) << "\n";       // exceptional closure
        out << graph6_encode(complete_graph(16)) << "\n";   // has a 1-factor
        out << graph6_encode(circulant_graph(16, 2)) << "\n";  // fails the rho hypothesis
    }
    GraphSource src;
    src.kind = GraphSource::Kind::File;
    src.n = 16;
    src.path = path;

    const VerificationReport c18i = verify({"C18i", {.n = 16, .delta = 1}}, src);
    CHECK(c18i.scanned == 3);
    CHECK(c18i.hypothesis_hits == 2);
    CHECK(c18i.conclusion_hits == 1);
    CHECK(c18i.exceptional_hits == 1);
    CHECK(c18i.counterexamples.empty());

    const VerificationReport c15i = verify({"C15i", {.n = 16, .delta = 1}}, src);
    CHECK(c15i.hypothesis_hits == 2);  // ex_1f_b has 93 > 84 edges, K_16 has 120
    CHECK(c15i.conclusion_hits == 1);
    CHECK(c15i.exceptional_hits == 1);
    CHECK(c15i.counterexamples.empty());
    std::remove(path.c_str());

    const std::string path2 = "harness_kfactor_graphs.g6";
    {
        std::ofstream out(path2);
        out << graph6_encode(complete_graph(17)) << "\n";
        out << graph6_encode(circulant_graph(17, 4)) << "\n";
    }
    GraphSource src2;
    src2.kind = GraphSource::Kind::File;
    src2.n = 17;
    src2.path = path2;
    const VerificationReport c18ii = verify({"C18ii", {.n = 17, .k = 2, .delta = 2}}, src2);
    CHECK(c18ii.scanned == 2);
    CHECK(c18ii.hypothesis_hits == 1);  // the circulant fails the rho hypothesis
    CHECK(c18ii.conclusion_hits == 1);
    CHECK(c18ii.counterexamples.empty());
    const VerificationReport c15ii = verify({"C15ii", {.n = 17, .k = 2, .delta = 2}}, src2);
    CHECK(c15ii.hypothesis_hits == 1);
    CHECK(c15ii.conclusion_hits == 1);
    std::remove(path2.c_str());
}

TEST_CASE("verify tree-property spectral suites on file sources") {
    const std::string path = "harness_tree_graphs.g6";
    Graph augmented = ex_ktree(16, 1, 2);
    augmented.add_edge(14, 15);  // join the two independent vertices
    {
        std::ofstream out(path);
        out << graph6_encode(ex_ktree(16, 1, 2)) << "\n";  // exceptional
        out << graph6_encode(augmented) << "\n";           // spanning 2-tree appears
        out << graph6_encode(circulant_graph(16, 2)) << "\n";  // fails rho hypothesis
    }
    GraphSource src;
    src.kind = GraphSource::Kind::File;
    src.n = 16;
    src.path = path;
    const VerificationReport t110 = verify({"T110", {.n = 16, .k = 2, .m = 1}}, src);
    CHECK(t110.scanned == 3);
    CHECK(t110.hypothesis_hits == 2);
    CHECK(t110.conclusion_hits == 1);
    CHECK(t110.exceptional_hits == 1);
    CHECK(t110.counterexamples.empty());
    std::remove(path.c_str());

    const std::string path2 = "harness_leaf_graphs.g6";
    Graph leaf_aug = ex_leaf(11, 1, 1);
    leaf_aug.add_edge(9, 10);
    {
        std::ofstream out(path2);
        out << graph6_encode(ex_leaf(11, 1, 1)) << "\n";
        out << graph6_encode(leaf_aug) << "\n";
        out << graph6_encode(complete_graph(11)) << "\n";
    }
    GraphSource src2;
    src2.kind = GraphSource::Kind::File;
    src2.n = 11;
    src2.path = path2;
    const VerificationReport t113 = verify({"T113", {.n = 11, .k = 1, .delta = 1}}, src2);
    CHECK(t113.scanned == 3);
    CHECK(t113.hypothesis_hits == 3);
    CHECK(t113.conclusion_hits == 2);
    CHECK(t113.exceptional_hits == 1);
    CHECK(t113.counterexamples.empty());
    std::remove(path2.c_str());
}

TEST_CASE("verify T13ii and FACT21 parameter plumbing") {
    const std::string path = "harness_t13ii_graphs.g6";
    {
        std::ofstream out(path);
        out << graph6_encode(complete_graph(9)) << "\n";           // dense, has a 2-factor
        out << graph6_encode(circulant_graph(9, 2)) << "\n";       // sparse, fails N_r hypothesis
    }
    GraphSource src;
    src.kind = GraphSource::Kind::File;
    src.n = 9;
    src.path = path;
    const VerificationReport rep = verify({"T13ii", {.n = 9, .r = 2, .k = 2, .delta = 2}}, src);
    CHECK(rep.scanned == 2);
    CHECK(rep.hypothesis_hits == 1);
    CHECK(rep.conclusion_hits == 1);
    CHECK(rep.counterexamples.empty());
    std::remove(path.c_str());
}

TEST_CASE("verify reads graph6 files") {
    const std::string path = "harness_test_graphs.g6";
    {
        std::ofstream out(path);
        out << graph6_encode(complete_graph(6)) << "\n";
        out << graph6_encode(circulant_graph(6, 2)) << "\n";
        out << graph6_encode(disjoint_union(complete_graph(3), complete_graph(3))) << "\n";
    }
    GraphSource src;
    src.kind = GraphSource::Kind::File;
    src.n = 6;
    src.path = path;
    const VerificationReport rep = verify({"BND-L33", {.n = 6}}, src);
    CHECK(rep.scanned == 3);
    CHECK(rep.hypothesis_hits == 2);  // the disjoint union is filtered out
    CHECK(rep.counterexamples.empty());
    std::remove(path.c_str());
}

TEST_CASE("report_emit json and csv") {
    VerificationReport rep;
    rep.spec.id = "BND-L33";
    rep.spec.params.n = 7;
    rep.scanned = 10;
    rep.hypothesis_hits = 8;
    rep.conclusion_hits = 8;
    rep.wall_time_seconds = 1.23456789012345;

    const std::string json_text = report_emit(rep, "json");
    const auto parsed = nlohmann::json::parse(json_text);
    CHECK(parsed["theorem"] == "BND-L33");
    CHECK(parsed["scanned"] == 10);
    CHECK(parsed["counterexamples"].empty());
    // stable field order
    CHECK(json_text.find("\"theorem\"") < json_text.find("\"params\""));
    CHECK(json_text.find("\"scanned\"") < json_text.find("\"hypothesis_hits\""));

    const std::string csv_text = report_emit(rep, "csv");
    CHECK(csv_text.rfind("theorem,n,r,k,m,delta,s,q,scanned,", 0) == 0);
    CHECK(csv_text.find("BND-L33,7,") != std::string::npos);

    CHECK_THROWS_AS(report_emit(rep, "xml"), std::invalid_argument);

    // empty report round-trips
    VerificationReport empty;
    empty.spec.id = "EQ-T12";
    const auto round = nlohmann::json::parse(report_emit(empty, "json"));
    CHECK(round["scanned"] == 0);
}

TEST_CASE("perturbation suite at desk scale") {
    FamilyParams p;
    p.n = 10;
    p.delta = 2;
    const VerificationReport rep = perturbation_suite("ex1fb", p);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.budget_hits == 0);
    CHECK(rep.conclusion_hits == rep.scanned);

    FamilyParams kt;
    kt.n = 14;
    kt.m = 1;
    kt.k = 3;
    const VerificationReport ktree = perturbation_suite("exktree", kt);
    CHECK(ktree.counterexamples.empty());
    CHECK(ktree.budget_hits == 0);
    CHECK(ktree.conclusion_hits == ktree.scanned);
    CHECK(ktree.scanned == 92);  // 1 base + 36 augmentations + 55 deletions
}

TEST_CASE("decider budget exhaustion is recorded per graph, not a crash") {
    const std::string path = "harness_budget_graphs.g6";
    {
        std::ofstream out(path);
        out << graph6_encode(complete_graph(12)) << "\n";
    }
    GraphSource src;
    src.kind = GraphSource::Kind::File;
    src.n = 12;
    src.path = path;
    VerifyOptions opts;
    opts.budget = 3;
    const VerificationReport rep = verify({"EQ-T19", {.n = 12, .k = 2, .m = 1}}, src, opts);
    CHECK(rep.hypothesis_hits == 1);
    CHECK(rep.budget_hits == 1);
    CHECK(rep.budget_graphs.size() == 1);
    CHECK(rep.counterexamples.empty());
    std::remove(path.c_str());
}
